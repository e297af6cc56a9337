# coding: utf-8

# # Checking the residuation laws
#
# Every law is swept exhaustively in lexicographic order. The first failing
# instance is kept as the counterexample, so reruns give the same answer.

# In[1]:

from omposet import corpus
from omposet.laws import run_suites, theorem1_bundle, theorem4a_bundle, theorem4b_bundle

def show(reports, P):
    for r in reports:
        extra = "" if not r.failed else f"  at {r.render_counterexample(P)}"
        print(f"  {r.law:28} {r.status}{extra}")

# An orthomodular poset satisfies the whole bundle.

# In[2]:

fig1 = corpus.fig1().structure
bundle = theorem1_bundle(fig1)
print("hypotheses hold:", bundle.hypotheses_hold)
show(bundle.reports, fig1.poset)

# A weakly orthomodular poset keeps forward adjointness but loses the
# backward direction. Its complement is not an involution here, so double
# negation fails too.

# In[3]:

fig3 = corpus.fig3().structure
show(theorem4a_bundle(fig3).reports, fig3.poset)

# In[4]:

fig4 = corpus.fig4().structure
show(theorem4b_bundle(fig4).reports, fig4.poset)

# Fig. 5 fails only contraposition. A few lemma checks are inapplicable
# because it is not orthomodular.

# In[5]:

fig5 = corpus.fig5().structure
show([r for r in run_suites(fig5) if r.failed], fig5.poset)
