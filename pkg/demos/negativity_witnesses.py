"""Negative coefficients in the Schur-like world with a bound.

Unlike classical Schur functions, the k-bounded Schur-like basis has
negative structure constants, and its elements can expand with negative
coefficients in the unbounded Schur-like basis.  This script hunts for
the smallest witnesses of both phenomena.

Run:  python3 demos/negativity_witnesses.py
"""

from kschur import negativity_search

for k in (2, 3):
    found = negativity_search(6, k)
    print(f"k = {k}:")
    alpha, beta, gamma, value = found["product"][0]
    print(
        f"  product: S{list(alpha)} * S{list(beta)} contains "
        f"{value} * S{list(gamma)}"
    )
    alpha, gamma, value = found["classical"][0]
    print(
        f"  expansion: S^({k}){list(alpha)} contains {value} * S{list(gamma)} "
        "in the unbounded basis"
    )
    print(
        f"  totals up to degree 6: {len(found['product'])} negative structure "
        f"constants, {len(found['classical'])} negative expansion coefficients"
    )
