# coding: utf-8

# # The operators ⊙ and →
#
# Both operators return *sets* of elements:
#
#     x ⊙ y = Min U(x, y′) ∧ y        x → y = x′ ∨ Max L(x, y)
#
# On a lattice these collapse to singletons, the Sasaki projection and
# its residual. On a non-lattice poset they can return several elements.

# In[1]:

from omposet import corpus
from omposet.cli import format_table

fig2 = corpus.fig2().structure
print(format_table(fig2, "odot"))
print()
print(format_table(fig2, "arrow"))

# In[2]:

fig1 = corpus.fig1().structure
R = fig1.operators
P = fig1.poset
a, b = P.index("a"), P.index("b")
print("a → b =", P.fmt(R.imp(a, b)))
print("a ⊙ b′ =", P.fmt(R.mul(a, fig1.c(b))))

# Multi-element outputs per table, as a numpy count.

# In[3]:

import numpy as np

sizes = np.array([[len(c) for c in row] for row in R.arrow.cells])
print("cells of → with more than one element:", int((sizes > 1).sum()), "of", sizes.size)

# Lifting to a set on the left takes the union over its members.

# In[4]:

A = (a, b)
print("{a,b} → 0 =", P.fmt(R.lift_imp(A, P.bottom)))
