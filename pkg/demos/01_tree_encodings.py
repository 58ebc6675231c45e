"""Binary trees and their vector encodings, end to end on one example.

Run with:  python3 demos/01_tree_encodings.py
"""

from tamari import (
    bracket_vector,
    canopy,
    contact_vector,
    degree_vector,
    descent_vector,
    dual_bracket_vector,
    dual_degree_vector,
    dyck_from_tree,
    enumerate_binary_trees,
    mirror,
    smooth_arcs,
    tree_from_bracket_vector,
    tree_from_dyck,
)

# A size-5 tree, written as the Dyck word of its recursive structure.
t = tree_from_dyck("UUDDUUDUDD")
print("tree           ", dyck_from_tree(t))
print("size           ", t.size)

# The bracket vector stores right-subtree sizes in infix order; it is a
# complete encoding, and componentwise domination is the Tamari order.
v = bracket_vector(t)
print("bracket        ", v)
print("dual bracket   ", dual_bracket_vector(t))
print("decodes back?  ", tree_from_bracket_vector(v) == t)

# The degree vector counts the left branch above each leaf; its entries
# minus one form a Lukasiewicz walk.  The canopy is its support pattern.
print("degree         ", degree_vector(t))
print("dual degree    ", dual_degree_vector(t))
print("canopy         ", canopy(t))

# The smooth drawing replaces each node by an arc joining the extreme
# leaves of its subtree.
print("smooth arcs    ", smooth_arcs(t))

# Walk statistics of the Dyck word recover both degree vectors.
w = dyck_from_tree(t)
print("contact vector ", contact_vector(w), "= degree vector")
print("descent vector ", descent_vector(w), "= dual degree vector")

# Mirroring the tree reverses the dual bracket vector.
print("mirror         ", dyck_from_tree(mirror(t)))

# Catalan numbers, by exhaustive enumeration.
print("tree counts    ", [len(enumerate_binary_trees(n)) for n in range(9)])
