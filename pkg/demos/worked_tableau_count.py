"""Count semistandard k-composition tableaux as chains in the composition
cover order.

A tableau of shape alpha and content beta is a chain of compositions from
the empty one to alpha in which step i adds a horizontal k-composition
strip of beta_i cells.  For k = 3, shape [1,3,1,1] and content
[1,1,2,1,1] there are exactly two such chains; they agree through
[2,1,1] and branch at the fourth letter.

Run:  python3 demos/worked_tableau_count.py
"""

from kschur import kostka, kostka_chains

shape = (1, 3, 1, 1)
content = (1, 1, 2, 1, 1)
k = 3

count = kostka(shape, content, k, "composition", "paper")
print(f"kostka(shape={list(shape)}, content={list(content)}, k={k}) = {count}")

for chain in kostka_chains(shape, content, k, "composition", "paper"):
    pretty = " < ".join(str(list(gamma)) for gamma in chain)
    print("  chain:", pretty)

# The branch point, seen directly through the Pieri targets: three
# compositions extend [2,1,1] by one cell at k = 3, but only two of them
# can still grow into [1,3,1,1].
from kschur import comp_pieri_targets

targets = comp_pieri_targets((2, 1, 1), 1, k)
print("one-cell growths of [2,1,1]:", [list(t) for t in targets])
survivors = [t for t in targets if (1, 3, 1, 1) in comp_pieri_targets(t, 1, k)]
print("growths that still reach [1,3,1,1]:", [list(t) for t in survivors])
