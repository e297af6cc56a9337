# coding: utf-8

# # From operators back to structure
#
# The complementation is recoverable from → alone: x → 0 = {x′}. So an
# operator structure determines the poset with complementation, and the
# round trip P -> R(P) -> P is the identity.

# In[1]:

from omposet import corpus
from omposet.laws import (
    derive_structure_theorems,
    reconstruct_complementation,
    roundtrip_P,
    roundtrip_R_condition,
)

fig5 = corpus.fig5().structure
comp = reconstruct_complementation(fig5.operators)
print("recovered:", [fig5.poset.label(x) for x in comp])
print("stored:   ", [fig5.poset.label(x) for x in fig5.comp])

# In[2]:

for name in ("fig1", "fig2", "fig5", "fig5+fig1"):
    s = corpus.get(name).structure
    print(f"{name:10} P round trip: {roundtrip_P(s).status:6}"
          f" R identities: {roundtrip_R_condition(s.operators).status}")

# The converse direction: which structural properties follow from the laws
# the operators satisfy?

# In[3]:

for name in ("fig1", "fig5"):
    s = corpus.get(name).structure
    for r in derive_structure_theorems(s):
        print(f"{name:6} {r.law:24} {r.status}  {r.note}")
