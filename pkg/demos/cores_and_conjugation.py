"""The k-conjugation involution through (k+1)-cores.

Each k-bounded partition corresponds to a unique (k+1)-core, the
partition with no hook of length k+1 whose rows carry the original parts
as hook <= k cell counts.  Transposing the core and reading the counts
back defines the involution; at large k it degenerates to the ordinary
transpose.

Run:  python3 demos/cores_and_conjugation.py
"""

from kschur import (
    bounded_to_core,
    core_to_bounded,
    hook_lengths,
    k_conjugate,
    partitions_of,
    transpose,
)

k = 3
print(f"k = {k}: bounded partition -> {k + 1}-core -> conjugate")
for n in range(1, 6):
    for lam in partitions_of(n, k):
        core = bounded_to_core(lam, k)
        conj = k_conjugate(lam, k)
        print(f"  {str(list(lam)):>15} -> core {str(list(core)):>15} -> omega_k {list(conj)}")

lam = (2, 2, 1)
core = bounded_to_core(lam, k)
print(f"\nhook lengths of the core {list(core)} of {list(lam)}:")
hooks = hook_lengths(core)
for r in range(1, len(core) + 1):
    row = " ".join(str(hooks[(r, c)]) for c in range(1, core[r - 1] + 1))
    print(f"  row {r}: {row}")
print(f"hook <= {k} counts per row recover the partition:", list(core_to_bounded(core, k)))

print("\nat k >= n the involution is the ordinary transpose:")
for lam in partitions_of(4):
    print(f"  {list(lam)} -> {list(k_conjugate(lam, 9))} (transpose {list(transpose(lam))})")
