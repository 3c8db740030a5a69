"""Schur-like dual bases built by iterated Pieri expansion.

For one graded component (degree n, bound k) the composition-side system
holds three matrices: the expansion of each H word in the Schur-like S
basis (obtained by running the Pieri rule once per part, last part
first), its exact inverse, and the transpose, which is the monomial
expansion of the dual QS basis.  The partition-side system is the same
construction over k-bounded partitions, giving k-Schur functions in h
and dual k-Schur functions in m.

Chain counts of horizontal (k-)strips generalize Kostka numbers; both
content reading orders are exposed because the left Pieri iteration
consumes the content back to front, while tableau fillings read it front
to back.  The two agree whenever the content is palindromic, and the
conformance report lists every pair where they differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import compositions as comp
from . import partitions as part
from .algebra import BasisMatrix, LinearCombination, pairing
from .errors import DomainError
from .reference_tables import REFERENCE_MATRICES

# ---------------------------------------------------------------------------
# chain counting (generalized Kostka numbers)

_FAMILIES = {
    "composition": (comp.comp_pieri_targets, comp.bottom_aligned_contains, comp.check_composition),
    "partition": (part.k_pieri_targets, part.contains, part.check_partition),
}


def _chain_content(shape, content, k, family, order):
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if order not in ("paper", "pieri"):
        raise ValueError(f"unknown order convention {order!r}")
    _, _, check = _FAMILIES[family]
    shape = check(shape)
    content = comp.check_composition(content)
    if sum(shape) != sum(content):
        raise ValueError(f"size mismatch: |{shape!r}| != |{content!r}|")
    if k is not None:
        part.require_k_bounded(part.check_partition(sorted(shape, reverse=True)), k)
        comp.require_k_bounded(content, k)
    return shape, content if order == "paper" else content[::-1]


def kostka(shape, content, k=None, family="composition", order="paper") -> int:
    """Number of chains from the empty shape to ``shape`` adding horizontal
    (k-)strips of the content sizes, read in the given order."""
    return _kostka(tuple(shape), tuple(content), k, family, order)


@lru_cache(maxsize=None)
def _kostka(shape, content, k, family, order) -> int:
    shape, seq = _chain_content(shape, content, k, family, order)
    targets, fits, _ = _FAMILIES[family]
    frontier = {(): 1}
    for size in seq:
        step: dict = {}
        for gamma, count in frontier.items():
            for delta in targets(gamma, size, k):
                if fits(shape, delta):
                    step[delta] = step.get(delta, 0) + count
        frontier = step
        if not frontier:
            return 0
    return frontier.get(shape, 0)


def kostka_chains(shape, content, k=None, family="composition", order="paper") -> tuple:
    """The chains themselves, each a tuple of shapes starting at the empty one."""
    shape, seq = _chain_content(shape, content, k, family, order)
    targets, fits, _ = _FAMILIES[family]
    chains = []

    def rec(current, step, acc):
        if step == len(seq):
            if current == shape:
                chains.append(acc)
            return
        for delta in targets(current, seq[step], k):
            if fits(shape, delta):
                rec(delta, step + 1, acc + (delta,))

    rec((), 0, ((),))
    return tuple(chains)


def order_convention_report(max_n, ks) -> dict:
    """Compare the two content reading orders on all composition pairs.

    Returns palindromic-content agreement (provable, checked anyway) and
    the list of diverging (k, shape, content, paper count, pieri count).
    """
    divergences = []
    palindromic_ok = True
    for k in ks:
        for n in range(max_n + 1):
            labels = comp.enumerate_compositions(n, k)
            for shape in labels:
                for content in labels:
                    a = kostka(shape, content, k, "composition", "paper")
                    b = kostka(shape, content, k, "composition", "pieri")
                    if a != b:
                        divergences.append((k, shape, content, a, b))
                        if content == content[::-1]:
                            palindromic_ok = False
    return {"palindromic_ok": palindromic_ok, "divergences": divergences}


# ---------------------------------------------------------------------------
# graded systems

def _pieri_rows(labels, k, targets):
    rows = []
    position = {label: j for j, label in enumerate(labels)}
    for beta in labels:
        vec = {(): 1}
        for size in reversed(beta):
            step: dict = {}
            for gamma, count in vec.items():
                for delta in targets(gamma, size, k):
                    step[delta] = step.get(delta, 0) + count
            vec = step
        row = [0] * len(labels)
        for alpha, count in vec.items():
            row[position[alpha]] = count
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class SchurSystem:
    """Composition-side graded component: H, S and QS/M change of bases."""

    n: int
    k: int | None
    labels: tuple
    H_to_S: BasisMatrix
    _inverse_cache: list = field(default_factory=list, repr=False, compare=False)

    @property
    def S_to_H(self) -> BasisMatrix:
        if not self._inverse_cache:
            self._inverse_cache.append(self.H_to_S.inverse())
        return self._inverse_cache[0]

    @property
    def QS_to_M(self) -> BasisMatrix:
        return self.H_to_S.transposed("QS", "M")

    def S_in_H(self, alpha) -> LinearCombination:
        return self.S_to_H.row_combination(alpha)

    def QS_in_M(self, alpha) -> LinearCombination:
        return self.QS_to_M.row_combination(alpha)

    def H_in_S(self, beta) -> LinearCombination:
        return self.H_to_S.row_combination(beta)


@dataclass(frozen=True)
class KSchurSystem:
    """Partition-side graded component: h, k-Schur and dual k-Schur bases."""

    n: int
    k: int | None
    labels: tuple
    h_to_s: BasisMatrix
    _inverse_cache: list = field(default_factory=list, repr=False, compare=False)

    @property
    def s_to_h(self) -> BasisMatrix:
        if not self._inverse_cache:
            self._inverse_cache.append(self.h_to_s.inverse())
        return self._inverse_cache[0]

    @property
    def dual_to_m(self) -> BasisMatrix:
        return self.h_to_s.transposed("dual-s", "m")

    def s_in_h(self, lam) -> LinearCombination:
        return self.s_to_h.row_combination(lam)

    def dual_in_m(self, lam) -> LinearCombination:
        return self.dual_to_m.row_combination(lam)


@lru_cache(maxsize=None)
def build_schur_system(n, k=None) -> SchurSystem:
    labels = comp.enumerate_compositions(n, k)
    rows = _pieri_rows(labels, k, comp.comp_pieri_targets)
    matrix = BasisMatrix(
        n=n, k=k, source_kind="H", target_kind="S",
        row_labels=labels, col_labels=labels, rows=rows,
    )
    return SchurSystem(n=n, k=k, labels=labels, H_to_S=matrix)


@lru_cache(maxsize=None)
def build_kschur_system(n, k=None) -> KSchurSystem:
    labels = part.partitions_of(n, k)
    rows = _pieri_rows(labels, k, part.k_pieri_targets)
    matrix = BasisMatrix(
        n=n, k=k, source_kind="h", target_kind="s",
        row_labels=labels, col_labels=labels, rows=rows,
    )
    return KSchurSystem(n=n, k=k, labels=labels, h_to_s=matrix)


def monomial_to_M(combo: LinearCombination) -> LinearCombination:
    """Identify m with the sum of M over all rearrangements of the index."""
    if combo.kind != "m":
        raise DomainError(f"expected kind 'm', got {combo.kind!r}")
    out = {}
    for mu, coeff in combo.terms():
        for alpha in comp.enumerate_compositions(sum(mu), combo.k):
            if comp.sort_to_partition(alpha) == mu:
                out[alpha] = out.get(alpha, 0) + coeff
    return LinearCombination("M", combo.k, out)


# ---------------------------------------------------------------------------
# independent oracle: brute-force semistandard Young tableaux

def ssyt_count(shape, content) -> int:
    """Count fillings of the Young diagram with content[i] copies of i + 1,
    rows weakly increasing, columns strictly increasing.  Plain backtracking,
    independent of the strip machinery."""
    shape = part.check_partition(shape)
    if sum(shape) != sum(content):
        return 0
    remaining = list(content)
    rows = [[0] * length for length in shape]

    def rec(r, c):
        if r == len(shape):
            return 1
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        total = 0
        lo = rows[r][c - 1] if c else 1
        for v in range(lo, len(remaining) + 1):
            if not remaining[v - 1]:
                continue
            if r and len(rows[r - 1]) > c and rows[r - 1][c] >= v:
                continue
            rows[r][c] = v
            remaining[v - 1] -= 1
            total += rec(nr, nc)
            remaining[v - 1] += 1
            rows[r][c] = 0
        return total

    return rec(0, 0)


# ---------------------------------------------------------------------------
# verification reports

@dataclass(frozen=True)
class VerificationCase:
    name: str
    passed: bool
    detail: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    parameters: dict
    cases: tuple

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "passed": self.passed,
            "cases": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.cases
            ],
        }


def verify_appendix() -> VerificationReport:
    """Rebuild the published small tables and compare entry for entry."""
    cases = []
    for kind, tables in REFERENCE_MATRICES.items():
        for (k, n), (labels, rows) in tables.items():
            system = build_schur_system(n, k)
            built = system.S_to_H if kind == "ns-to-h" else system.QS_to_M
            ok = (
                list(built.row_labels) == [tuple(l) for l in labels]
                and [list(r) for r in built.rows] == [list(r) for r in rows]
            )
            cases.append(
                VerificationCase(
                    name=f"{kind} k={k} n={n}",
                    passed=ok,
                    detail=None if ok else f"expected {rows}, built {built.rows}",
                )
            )
    return VerificationReport("appendix", {}, tuple(cases))


def verify_duality(n, k) -> VerificationReport:
    """Pair every dual element against every primal one through the M/H
    expansions and compare with the Kronecker delta."""
    system = build_schur_system(n, k)
    failures = []
    for alpha in system.labels:
        qs = system.QS_in_M(alpha)
        for beta in system.labels:
            value = pairing(qs, system.S_in_H(beta))
            if value != (1 if alpha == beta else 0):
                failures.append(f"<QS{list(alpha)}, S{list(beta)}> = {value}")
    case = VerificationCase(
        name=f"duality n={n} k={k}",
        passed=not failures,
        detail="; ".join(failures[:5]) or None,
    )
    return VerificationReport("duality", {"n": n, "k": k}, (case,))


def verify_projection(n, k) -> VerificationReport:
    """Projecting a Schur-like element onto commuting generators must give
    the k-Schur element of the sorted index."""
    from .algebra import chi_project

    system = build_schur_system(n, k)
    pside = build_kschur_system(n, k)
    cases = []
    for alpha in system.labels:
        image = chi_project(system.S_in_H(alpha))
        expected = pside.s_in_h(comp.sort_to_partition(alpha))
        ok = image == expected
        cases.append(
            VerificationCase(
                name=f"chi(S{list(alpha)}) n={n} k={k}",
                passed=ok,
                detail=None if ok else f"{image!r} != {expected!r}",
            )
        )
    return VerificationReport("projection", {"n": n, "k": k}, tuple(cases))


def verify_decomposition(n, k) -> VerificationReport:
    """The dual k-Schur element of a partition equals the sum of the dual
    Schur-like elements over all rearrangements of its parts."""
    system = build_schur_system(n, k)
    pside = build_kschur_system(n, k)
    cases = []
    for lam in pside.labels:
        total = LinearCombination.zero("M", k)
        for alpha in system.labels:
            if comp.sort_to_partition(alpha) == lam:
                total = total + system.QS_in_M(alpha)
        expected = monomial_to_M(pside.dual_in_m(lam))
        ok = total == expected
        cases.append(
            VerificationCase(
                name=f"dual-s{list(lam)} n={n} k={k}",
                passed=ok,
                detail=None if ok else f"{total!r} != {expected!r}",
            )
        )
    return VerificationReport("decomposition", {"n": n, "k": k}, tuple(cases))


def stabilization_check(n) -> VerificationReport:
    """Systems freeze at k = n: the components for k = n, n+1, n+2 and for
    unbounded k must coincide, and the unbounded composition system must
    reproduce classical Kostka numbers verified by the tableau oracle."""
    cases = []
    reference = build_schur_system(n, None)
    pref = build_kschur_system(n, None)
    for k in (n, n + 1, n + 2):
        same = (
            build_schur_system(n, k).H_to_S.rows == reference.H_to_S.rows
            and build_schur_system(n, k).labels == reference.labels
            and build_kschur_system(n, k).h_to_s.rows == pref.h_to_s.rows
        )
        cases.append(VerificationCase(name=f"n={n} k={k} equals unbounded", passed=same))
    failures = []
    for lam in pref.labels:
        for beta in reference.labels:
            class_sum = sum(
                reference.QS_to_M.entry(alpha, beta)
                for alpha in reference.labels
                if comp.sort_to_partition(alpha) == lam
            )
            expected = ssyt_count(lam, comp.sort_to_partition(beta))
            if class_sum != expected:
                failures.append(f"lambda={lam} beta={beta}: {class_sum} != {expected}")
    cases.append(
        VerificationCase(
            name=f"n={n} classical Kostka against tableau oracle",
            passed=not failures,
            detail="; ".join(failures[:5]) or None,
        )
    )
    return VerificationReport("stabilization", {"n": n}, tuple(cases))


def verify_omega(max_n, max_k, oracle_max_n=7) -> VerificationReport:
    """Involution, size preservation, core round trips and bijectivity of
    the bounded-partition/core correspondence; the construction is checked
    against the exhaustive core search at small sizes."""
    cases = []
    for k in range(1, max_k + 1):
        bad = []
        for n in range(max_n + 1):
            seen = {}
            for lam in part.partitions_of(n, k):
                conj = part.k_conjugate(lam, k)
                if part.k_conjugate(conj, k) != lam or sum(conj) != n:
                    bad.append(f"omega_{k}({lam})")
                core = part.bounded_to_core(lam, k)
                if not part.is_core(core, k + 1) or part.core_to_bounded(core, k) != lam:
                    bad.append(f"core round trip {lam} k={k}")
                if core in seen:
                    bad.append(f"core collision {lam} vs {seen[core]} k={k}")
                seen[core] = lam
                if k >= n and conj != part.transpose(lam):
                    bad.append(f"large-k transpose {lam} k={k}")
                if n <= oracle_max_n:
                    matches = part.core_search_oracle(lam, k)
                    if matches != (core,):
                        bad.append(f"oracle disagrees at {lam} k={k}: {matches}")
        cases.append(
            VerificationCase(
                name=f"k={k} n<={max_n}",
                passed=not bad,
                detail="; ".join(bad[:5]) or None,
            )
        )
    return VerificationReport("omega", {"max_n": max_n, "max_k": max_k}, tuple(cases))


# ---------------------------------------------------------------------------
# negativity search

def negativity_search(max_total_degree, k) -> dict:
    """Hunt for negative coefficients in two senses: structure constants of
    products of Schur-like elements, and expansions of the k-bounded
    Schur-like basis in the unbounded one.  Returns all witnesses found."""
    if max_total_degree < 2:
        raise ValueError("max_total_degree must be at least 2")
    product_witnesses = []
    for n1 in range(1, max_total_degree):
        sys1 = build_schur_system(n1, k)
        for n2 in range(1, max_total_degree - n1 + 1):
            sys2 = build_schur_system(n2, k)
            total = build_schur_system(n1 + n2, k)
            h_to_s = {beta: row for beta, row in zip(total.labels, total.H_to_S.rows)}
            for alpha in sys1.labels:
                left = sys1.S_in_H(alpha)
                for beta in sys2.labels:
                    right = sys2.S_in_H(beta)
                    coeffs = [0] * len(total.labels)
                    for ia, ca in left.terms():
                        for ib, cb in right.terms():
                            row = h_to_s[ia + ib]
                            c = ca * cb
                            for j, v in enumerate(row):
                                if v:
                                    coeffs[j] += c * v
                    for gamma, value in zip(total.labels, coeffs):
                        if value < 0:
                            product_witnesses.append((alpha, beta, gamma, value))
    classical_witnesses = []
    for n in range(1, max_total_degree + 1):
        bounded = build_schur_system(n, k)
        unbounded = build_schur_system(n, None)
        h_to_s = {beta: row for beta, row in zip(unbounded.labels, unbounded.H_to_S.rows)}
        for alpha in bounded.labels:
            coeffs = [0] * len(unbounded.labels)
            for ib, cb in bounded.S_in_H(alpha).terms():
                row = h_to_s[ib]
                for j, v in enumerate(row):
                    if v:
                        coeffs[j] += cb * v
            for gamma, value in zip(unbounded.labels, coeffs):
                if value < 0:
                    classical_witnesses.append((alpha, gamma, value))
    return {"product": product_witnesses, "classical": classical_witnesses}


def verify_negativity(max_total_degree, ks) -> VerificationReport:
    """Passes exactly when a witness is found in each sense for each k."""
    cases = []
    for k in ks:
        found = negativity_search(max_total_degree, k)
        for sense in ("product", "classical"):
            witnesses = found[sense]
            sample = "; ".join(str(w) for w in witnesses[:3])
            cases.append(
                VerificationCase(
                    name=f"{sense} negativity k={k} degree<={max_total_degree}",
                    passed=bool(witnesses),
                    detail=f"{len(witnesses)} witnesses: {sample}" if witnesses else "none found",
                )
            )
    return VerificationReport(
        "negativity", {"max_total_degree": max_total_degree, "k": list(ks)}, tuple(cases)
    )
