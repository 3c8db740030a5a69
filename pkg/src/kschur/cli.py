"""Command line interface: matrix generation, Kostka queries, basis
expansions and the verification suites.

Output is deterministic byte-for-byte for fixed arguments.  Computed
matrix documents are cached on disk as json, keyed by kind, k, n and the
schema version; the cache directory comes from KSCHUR_CACHE_DIR and
defaults to the user cache directory.  Writes go through a temp file and
an atomic rename so concurrent invocations stay consistent.

Exit codes: 0 success or suite pass, 1 verification failure, 2 usage or
parse error, 3 domain violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from . import bases
from .algebra import BasisMatrix
from .compositions import check_composition
from .errors import DomainError
from .partitions import check_partition

SCHEMA_VERSION = "1"

MATRIX_KINDS = (
    "ns-to-h",
    "qs-to-m",
    "kschur-to-h",
    "dualkschur-to-m",
    "h-to-ns",
    "m-to-qs",
)

VERIFY_SUITES = (
    "appendix",
    "duality",
    "projection",
    "decomposition",
    "stabilization",
    "omega",
    "negativity",
)

_COMPOSITION_MATRIX = {"ns-to-h", "qs-to-m", "h-to-ns", "m-to-qs"}


# ---------------------------------------------------------------------------
# parsing and formatting helpers

def parse_k(text):
    if text == "inf":
        return None
    k = int(text)
    if k < 1:
        raise ValueError(f"k must be at least 1 or 'inf', got {text!r}")
    return k


def format_k(k):
    return "inf" if k is None else k


def parse_parts(text):
    """Comma-separated positive integers; empty string is the empty sequence."""
    text = text.strip()
    if text in ("", "[]", "()"):
        return ()
    return tuple(int(p) for p in text.split(","))


def format_composition(alpha, sep=","):
    return "[" + sep.join(str(p) for p in alpha) + "]"


def format_partition(lam, sep=","):
    return "(" + sep.join(str(p) for p in lam) + ")"


def parse_element_spec(text):
    """Parse 'KIND:INDEX@k=K', e.g. S:[1,1,1]@k=3 or dual-s:(2,1,1)@k=inf.

    Malformed indices are parse errors (exit 2), not domain violations.
    """
    if "@k=" not in text or ":" not in text:
        raise ValueError(f"bad element spec {text!r}; expected KIND:INDEX@k=K")
    head, ktext = text.rsplit("@k=", 1)
    kind, index_text = head.split(":", 1)
    kind = kind.strip()
    index_text = index_text.strip()
    k = parse_k(ktext.strip())
    try:
        if index_text.startswith("[") and index_text.endswith("]"):
            index = check_composition(parse_parts(index_text[1:-1]))
            if kind not in ("H", "M", "S", "QS"):
                raise ValueError(f"kind {kind!r} does not take a composition index")
        elif index_text.startswith("(") and index_text.endswith(")"):
            index = check_partition(parse_parts(index_text[1:-1]))
            if kind not in ("h", "m", "s", "dual-s"):
                raise ValueError(f"kind {kind!r} does not take a partition index")
        else:
            raise ValueError(f"bad index {index_text!r}; use [..] or (..)")
    except DomainError as exc:
        raise ValueError(str(exc)) from exc
    return kind, index, k


# ---------------------------------------------------------------------------
# matrix documents and cache

def _build_matrix(kind, k, n) -> BasisMatrix:
    if kind in _COMPOSITION_MATRIX:
        system = bases.build_schur_system(n, k)
        if kind == "ns-to-h":
            return system.S_to_H
        if kind == "qs-to-m":
            return system.QS_to_M
        if kind == "h-to-ns":
            return system.H_to_S
        return system.QS_to_M.inverse()
    system = bases.build_kschur_system(n, k)
    if kind == "kschur-to-h":
        return system.s_to_h
    return system.dual_to_m


def matrix_document(kind, k, n) -> dict:
    matrix = _build_matrix(kind, k, n)
    return {
        "schema_version": SCHEMA_VERSION,
        "k": format_k(k),
        "n": n,
        "kind": kind,
        "row_labels": [list(label) for label in matrix.row_labels],
        "col_labels": [list(label) for label in matrix.col_labels],
        "entries": [v for row in matrix.rows for v in row],
    }


def cache_dir():
    override = os.environ.get("KSCHUR_CACHE_DIR")
    if override:
        return override
    base = os.environ.get("XDG_CACHE_HOME", os.path.join(os.path.expanduser("~"), ".cache"))
    return os.path.join(base, "kschur")


def _cache_path(kind, k, n):
    return os.path.join(cache_dir(), f"{kind}_k{format_k(k)}_n{n}_v{SCHEMA_VERSION}.json")


def cached_matrix_document(kind, k, n) -> dict:
    path = _cache_path(kind, k, n)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
        if doc.get("schema_version") == SCHEMA_VERSION and doc.get("kind") == kind:
            return doc
    except (OSError, ValueError):
        pass
    doc = matrix_document(kind, k, n)
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(doc, handle, separators=(",", ":"))
        os.replace(tmp, path)
    except OSError:
        pass  # cache is best effort
    return doc


def _labels_text(doc, which):
    composition = doc["kind"] in _COMPOSITION_MATRIX
    fmt = format_composition if composition else format_partition
    return [fmt(label) for label in doc[which]]


def render_matrix(doc, fmt) -> str:
    rows = len(doc["row_labels"])
    cols = len(doc["col_labels"])
    entries = doc["entries"]
    if fmt == "json":
        return json.dumps(doc, separators=(",", ":"))
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([""] + _labels_text(doc, "col_labels"))
        for r, label in enumerate(_labels_text(doc, "row_labels")):
            writer.writerow([label] + [str(v) for v in entries[r * cols : (r + 1) * cols]])
        return out.getvalue().rstrip("\n")
    composition = doc["kind"] in _COMPOSITION_MATRIX
    fmt_label = format_composition if composition else format_partition
    lines = ["\\bordermatrix{"]
    lines.append(
        "~ & " + " & ".join(fmt_label(l, sep=", ") for l in doc["col_labels"]) + " \\cr"
    )
    for r in range(rows):
        body = " & ".join(str(v) for v in entries[r * cols : (r + 1) * cols])
        lines.append(f"{fmt_label(doc['row_labels'][r], sep=', ')} & {body} \\cr")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands

def cmd_matrix(args) -> int:
    k = parse_k(args.k)
    if args.n < 0:
        raise ValueError("n must be nonnegative")
    doc = cached_matrix_document(args.kind, k, args.n)
    print(render_matrix(doc, args.format))
    return 0


def cmd_kostka(args) -> int:
    shape = parse_parts(args.shape)
    content = parse_parts(args.content)
    try:
        if args.family == "partition":
            check_partition(shape)
        else:
            check_composition(shape)
        check_composition(content)
    except DomainError as exc:
        raise ValueError(str(exc)) from exc
    k = parse_k(args.k) if args.k is not None else None
    value = bases.kostka(shape, content, k, args.family, args.order)
    print(value)
    return 0


_EXPANSIONS = {
    ("S", "H"): lambda s, i: s.S_in_H(i),
    ("H", "S"): lambda s, i: s.H_in_S(i),
    ("QS", "M"): lambda s, i: s.QS_in_M(i),
    ("M", "QS"): lambda s, i: s.QS_to_M.inverse().row_combination(i),
    ("s", "h"): lambda s, i: s.s_in_h(i),
    ("h", "s"): lambda s, i: s.h_to_s.row_combination(i),
    ("dual-s", "m"): lambda s, i: s.dual_in_m(i),
    ("m", "dual-s"): lambda s, i: s.dual_to_m.inverse().row_combination(i),
}


def cmd_expand(args) -> int:
    kind, index, k = parse_element_spec(args.element)
    target = args.target
    if (kind, target) not in _EXPANSIONS:
        raise ValueError(f"no expansion from {kind!r} to {target!r}")
    if k is not None and any(p > k for p in index):
        raise DomainError(f"index {index!r} is not {k}-bounded")
    n = sum(index)
    if kind in ("H", "M", "S", "QS"):
        system = bases.build_schur_system(n, k)
        fmt = format_composition
    else:
        system = bases.build_kschur_system(n, k)
        fmt = format_partition
    combo = _EXPANSIONS[(kind, target)](system, index)
    for term_index, coeff in combo.terms():
        print(f"{coeff}*{target}{fmt(term_index)}")
    return 0


def _suite_report(args):
    suite = args.suite
    ks = [parse_k(t) for t in args.k.split(",")] if args.k else None
    max_n = args.max_n
    if suite == "appendix":
        return bases.verify_appendix()
    if suite == "duality":
        ks = ks or [2, 3, 4]
        max_n = 7 if max_n is None else max_n
        cases = []
        for k in ks:
            for n in range(max_n + 1):
                cases.extend(bases.verify_duality(n, k).cases)
        return bases.VerificationReport("duality", {"max_n": max_n, "k": list(map(format_k, ks))}, tuple(cases))
    if suite == "projection":
        ks = ks or [2, 3]
        max_n = 6 if max_n is None else max_n
        cases = []
        for k in ks:
            for n in range(max_n + 1):
                cases.extend(bases.verify_projection(n, k).cases)
        return bases.VerificationReport("projection", {"max_n": max_n, "k": list(map(format_k, ks))}, tuple(cases))
    if suite == "decomposition":
        ks = ks or [2, 3]
        max_n = 6 if max_n is None else max_n
        cases = []
        for k in ks:
            for n in range(max_n + 1):
                cases.extend(bases.verify_decomposition(n, k).cases)
        return bases.VerificationReport("decomposition", {"max_n": max_n, "k": list(map(format_k, ks))}, tuple(cases))
    if suite == "stabilization":
        max_n = 6 if max_n is None else max_n
        cases = []
        for n in range(max_n + 1):
            cases.extend(bases.stabilization_check(n).cases)
        return bases.VerificationReport("stabilization", {"max_n": max_n}, tuple(cases))
    if suite == "omega":
        max_n = 10 if max_n is None else max_n
        max_k = max((k for k in ks if k is not None), default=5) if ks else 5
        return bases.verify_omega(max_n, max_k)
    max_n = 8 if max_n is None else max_n
    return bases.verify_negativity(max_n, [k for k in (ks or [2, 3]) if k is not None])


def cmd_verify(args) -> int:
    report = _suite_report(args)
    print(json.dumps(report.to_json(), separators=(",", ":")))
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kschur",
        description="Exact Schur-like dual bases for k-bounded symmetric, "
        "quasi-symmetric and non-commutative symmetric functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_matrix = sub.add_parser("matrix", help="print a change-of-basis matrix")
    p_matrix.add_argument("--kind", required=True, choices=MATRIX_KINDS)
    p_matrix.add_argument("--k", required=True, help="bound k, or 'inf'")
    p_matrix.add_argument("--n", required=True, type=int, help="degree")
    p_matrix.add_argument("--format", default="json", choices=("json", "csv", "latex"))
    p_matrix.set_defaults(func=cmd_matrix)

    p_kostka = sub.add_parser("kostka", help="count strip chains (Kostka numbers)")
    p_kostka.add_argument("family", choices=("composition", "partition"))
    p_kostka.add_argument("shape", help="comma-separated parts")
    p_kostka.add_argument("content", help="comma-separated parts")
    p_kostka.add_argument("--k", default="inf", help="bound k, or 'inf'")
    p_kostka.add_argument("--order", default="paper", choices=("paper", "pieri"))
    p_kostka.set_defaults(func=cmd_kostka)

    p_expand = sub.add_parser("expand", help="expand a basis element")
    p_expand.add_argument("element", help="element spec, e.g. S:[1,1,1]@k=3")
    p_expand.add_argument("target", help="target basis kind, e.g. H")
    p_expand.set_defaults(func=cmd_expand)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=VERIFY_SUITES)
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--k", default=None, help="comma-separated k list, e.g. 2,3")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
