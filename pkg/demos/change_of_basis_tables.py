"""Regenerate the small change-of-basis tables between the Schur-like
basis and the H basis (and dually between QS and M) for k = 2, 3 and
degrees 2 through 4, in the same bordered layout they are usually printed.

Run:  python3 demos/change_of_basis_tables.py
"""

from kschur.cli import matrix_document, render_matrix


def show(kind, k, n):
    doc = matrix_document(kind, k, n)
    print(f"--- {kind}, k = {k}, n = {n} ---")
    print(render_matrix(doc, "csv"))
    print()


for k in (2, 3):
    for n in (2, 3, 4):
        show("ns-to-h", k, n)

for k in (2, 3):
    for n in (2, 3, 4):
        show("qs-to-m", k, n)

print("The same table in LaTeX bordered-matrix form:")
print(render_matrix(matrix_document("qs-to-m", 3, 4), "latex"))
