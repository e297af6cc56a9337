# coding: utf-8

# # Horizontal sums
#
# Gluing structures at their bounds gives a new bounded poset. Labels are
# prefixed by the part's name so the pieces stay recognisable.

# In[1]:

from omposet import classify, corpus, horizontal_sum

fig3 = corpus.fig3().structure
fig1 = corpus.fig1().structure
glued = horizontal_sum([fig3, fig1], name="fig3+fig1")
print(glued.n, "elements")
print(glued.poset.labels[:6], "...")

# The sum is weakly orthomodular, since both parts are, but not a lattice.

# In[2]:

flags = classify(glued).flags()
for key in ("is_lattice", "is_weakly_orthomodular", "is_dually_weakly_orthomodular"):
    print(f"{key:32} {flags[key]}")

# Two copies of the same part get numbered prefixes. Two copies of the
# six-element MO2 lattice give MO4-like behaviour: still a lattice.

# In[3]:

fig2 = corpus.fig2().structure
twin = horizontal_sum([fig2, fig2])
print(twin.poset.labels)
print("lattice:", classify(twin).is_lattice.ok)
