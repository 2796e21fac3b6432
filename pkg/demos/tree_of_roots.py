"""Enumerate the candidate weight tree.

Starting from the maximal root, each level of the tree may drop by at
most m - 2 where m is the number of punctures.  For m = 3 and depth 3
exactly four leaf patterns survive; fixing the degree then filters them
to concrete root multisets.

Run:  python3 demos/tree_of_roots.py
"""

from logroots import candidate_tree

print("offset patterns for three punctures, depth 3:")
for off in candidate_tree(3, 3):
    pretty = ", ".join("x" if o == 0 else f"x{o}" for o in off)
    print(f"  ({pretty})")

print("\nconcrete roots for each degree in the window:")
for c1 in range(0, -7, -1):
    options = candidate_tree(3, 3, c1)
    print(f"  c1 = {c1:>2}: " + "  or  ".join(str(o) for o in options))

print("\nmore punctures widen the allowed drop (conjectural, m > 3):")
for off in candidate_tree(4, 3):
    print(f"  {off}")
