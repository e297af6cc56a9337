# coding: utf-8

# # Classifying bounded posets with a complementation
#
# A structure here is a finite bounded poset together with a map x -> x′.
# `classify` runs every structural check and keeps a witness for each
# failure, so we can see *why* something is not orthomodular.

# In[1]:

from omposet import classify, corpus, make_structure

# The corpus ships the reference figures. Fig. 1 is an orthomodular poset
# that is not a lattice: a and b have two minimal upper bounds.

# In[2]:

fig1 = corpus.fig1().structure
P = fig1.poset
a, b = P.index("a"), P.index("b")
print("Min U(a,b) =", P.fmt(P.min_of(P.upper_bounds((a, b)))))
print("a ∨ b      =", P.fmt(P.join(a, b)))

# In[3]:

for key, check in classify(fig1).items():
    print(f"{key:32} {check.ok}")

# Fig. 5 keeps x″ = x but breaks antitonicity. The witness names the pair.

# In[4]:

fig5 = corpus.fig5().structure
report = classify(fig5)
x, y = report.is_antitone.witness
print("antitone witness:", fig5.poset.label(x), "≤", fig5.poset.label(y))
print("weakly:", report.is_weakly_orthomodular.ok,
      " dually weakly:", report.is_dually_weakly_orthomodular.ok)

# Building your own structure takes labels, covers and a complement map.
# The four-element Boolean algebra:

# In[5]:

square = make_structure(
    ["0", "p", "q", "1"],
    [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
    {"0": "1", "p": "q", "q": "p", "1": "0"},
    name="square",
)
print(classify(square).flags())
