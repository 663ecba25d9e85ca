"""Command-line interface: single overlaps, matrix files, verification, benchmarks.

Subcommands
-----------
overlap   evaluate one bra-ket integral and print the record
matrix    assemble a coupling matrix and write it as CSV or JSON
verify    sweep a query range, cross-check all evaluation routes, exit
          non-zero when any pairwise deviation exceeds the tolerance
bench     time full-matrix assembly under each evaluation route

All serialized reals use 17 significant decimal digits, which round-trips
IEEE doubles exactly.  There is no configuration file and no environment
variable: every run is fully determined by its flags.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from . import oracle
from .angular_momentum import HarmonicIndex
from .braket_core import (
    BraKetQuery,
    CouplingMatrix,
    Method,
    TrigTerm,
    basis_index,
    basis_iter,
    basis_size,
    coupling_matrix,
    overlap,
    overlap_axisym_cos,
)
from .fourier_driver import EffectiveMassProfile, effective_mass_coupling

_METHODS = {
    "main": Method.MAIN,
    "appendix-a": Method.VARIANT,
    "quadrature": Method.QUADRATURE,
}


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


# ---------------------------------------------------------------------------
# overlap


def _validate_indices(l1, m1, l2, m2, n) -> str | None:
    if l1 < 0 or l2 < 0:
        return "degrees l1, l2 must be non-negative"
    if abs(m1) > l1:
        return f"|m1| = {abs(m1)} exceeds l1 = {l1}"
    if abs(m2) > l2:
        return f"|m2| = {abs(m2)} exceeds l2 = {l2}"
    if n < 0:
        return "polar order n must be non-negative"
    return None


def cmd_overlap(args) -> int:
    problem = _validate_indices(args.l1, args.m1, args.l2, args.m2, args.n)
    if problem:
        return _fail(problem)
    query = BraKetQuery(
        HarmonicIndex(args.l1, args.m1),
        TrigTerm(args.kind, args.n, args.k),
        HarmonicIndex(args.l2, args.m2),
    )
    method = _METHODS[args.method]
    start = time.perf_counter_ns()
    value = overlap(query, method)
    elapsed_us = (time.perf_counter_ns() - start) // 1000
    record = {
        "l1": args.l1,
        "m1": args.m1,
        "kind": args.kind,
        "n": args.n,
        "k": args.k,
        "l2": args.l2,
        "m2": args.m2,
        "method": args.method,
        "value": value,
        "elapsed_us": elapsed_us,
    }
    if args.format == "json":
        record["value"] = float(_fmt(value))
        print(json.dumps(record))
    elif args.format == "csv":
        print("l1,m1,kind,n,k,l2,m2,method,value,elapsed_us")
        print(
            f"{args.l1},{args.m1},{args.kind},{args.n},{args.k},"
            f"{args.l2},{args.m2},{args.method},{_fmt(value)},{elapsed_us}"
        )
    else:
        pairs = " ".join(
            f"{key}={_fmt(val) if key == 'value' else val}" for key, val in record.items()
        )
        print(pairs)
    return 0


# ---------------------------------------------------------------------------
# matrix serialization


def write_matrix_csv(matrix: CouplingMatrix, fh) -> None:
    """Sparse CSV: metadata comment, header, then only the non-zero entries."""
    fh.write(f"# L={matrix.L} ordering={matrix.ordering}\n")
    fh.write("l1,m1,l2,m2,value\n")
    for l1, m1 in basis_iter(matrix.L):
        row = matrix.entries[basis_index(l1, m1)]
        for l2, m2 in basis_iter(matrix.L):
            value = row[basis_index(l2, m2)]
            if value != 0.0:
                fh.write(f"{l1},{m1},{l2},{m2},{_fmt(value)}\n")


def read_matrix_csv(fh) -> CouplingMatrix:
    """Inverse of ``write_matrix_csv``; reproduces entries bit-exactly."""
    header = fh.readline().strip()
    if not header.startswith("# L="):
        raise ValueError("missing metadata comment line")
    meta = dict(field.split("=", 1) for field in header[2:].split())
    L = int(meta["L"])
    if meta.get("ordering") != CouplingMatrix.ordering:
        raise ValueError(f"unsupported ordering {meta.get('ordering')!r}")
    if fh.readline().strip() != "l1,m1,l2,m2,value":
        raise ValueError("missing column header")
    entries = np.zeros((basis_size(L), basis_size(L)))
    for line in fh:
        line = line.strip()
        if not line:
            continue
        l1, m1, l2, m2, value = line.split(",")
        entries[basis_index(int(l1), int(m1)), basis_index(int(l2), int(m2))] = float(value)
    return CouplingMatrix(L, entries)


def matrix_to_json_dict(matrix: CouplingMatrix) -> dict:
    entries = []
    for l1, m1 in basis_iter(matrix.L):
        for l2, m2 in basis_iter(matrix.L):
            value = matrix.entries[basis_index(l1, m1), basis_index(l2, m2)]
            if value != 0.0:
                entries.append(
                    {"l1": l1, "m1": m1, "l2": l2, "m2": m2, "value": float(_fmt(value))}
                )
    return {"L": matrix.L, "ordering": matrix.ordering, "entries": entries}


def cmd_matrix(args) -> int:
    if args.L < 0:
        return _fail("truncation L must be non-negative")
    if args.effective_mass:
        if args.q is None or args.mu_r_sq is None or args.mu_0_sq is None:
            return _fail("--effective-mass requires --q, --mu-r-sq and --mu-0-sq")
        if args.q < 1:
            return _fail("q must be a positive integer")
        matrix = effective_mass_coupling(
            EffectiveMassProfile(args.q, args.mu_r_sq, args.mu_0_sq), args.L
        )
    else:
        if args.kind is None or args.n is None or args.k is None:
            return _fail("specify an operator with --kind/--n/--k or use --effective-mass")
        problem = None if args.n >= 0 else "polar order n must be non-negative"
        if problem:
            return _fail(problem)
        matrix = coupling_matrix(TrigTerm(args.kind, args.n, args.k), args.L)
    try:
        with open(args.out, "w", newline="") as fh:
            if args.format == "csv":
                write_matrix_csv(matrix, fh)
            else:
                json.dump(matrix_to_json_dict(matrix), fh, indent=1)
                fh.write("\n")
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc}")
    return 0


# ---------------------------------------------------------------------------
# verify


def _sweep_queries(l_max: int, n_max: int, k_max: int):
    for kind in ("cos", "sin"):
        for n in range(n_max + 1):
            for k in range(-k_max, k_max + 1):
                for l1 in range(l_max + 1):
                    for l2 in range(l_max + 1):
                        for m2 in range(-l2, l2 + 1):
                            m1 = m2 + k
                            if abs(m1) > l1:
                                continue
                            yield BraKetQuery(
                                HarmonicIndex(l1, m1),
                                TrigTerm(kind, n, k),
                                HarmonicIndex(l2, m2),
                            )


class _Worst:
    def __init__(self):
        self.records = []

    def push(self, deviation: float, label: str):
        self.records.append((deviation, label))

    def max(self) -> float:
        return max((d for d, _ in self.records), default=0.0)

    def top(self, count: int = 5):
        return sorted(self.records, reverse=True)[:count]


def run_verification(l_max: int, n_max: int, k_max: int, tolerance: float):
    """Cross-check every route over the sweep; returns (report_lines, ok)."""
    pair_names = ("main vs appendix-a", "main vs quadrature", "appendix-a vs quadrature")
    worsts = {name: _Worst() for name in pair_names}
    axisym = _Worst()
    count = 0
    for query in _sweep_queries(l_max, n_max, k_max):
        v_main = overlap(query, Method.MAIN)
        v_var = overlap(query, Method.VARIANT)
        v_quad = oracle.quadrature_overlap(query)
        label = (
            f"<{query.bra.l},{query.bra.m}|{query.op.kind}({query.op.n}t),"
            f"k={query.op.k}|{query.ket.l},{query.ket.m}>"
        )
        worsts["main vs appendix-a"].push(abs(v_main - v_var), label)
        worsts["main vs quadrature"].push(abs(v_main - v_quad), label)
        worsts["appendix-a vs quadrature"].push(abs(v_var - v_quad), label)
        if query.op.kind == "cos" and query.op.k == 0:
            direct = overlap_axisym_cos(
                query.bra.l, query.bra.m, query.op.n, query.ket.l, query.ket.m
            )
            axisym.push(abs(direct - v_main), label)
        count += 1

    lines = [f"verified {count} queries (l <= {l_max}, n <= {n_max}, |k| <= {k_max})"]
    ok = True
    for name in pair_names:
        deviation = worsts[name].max()
        status = "ok" if deviation <= tolerance else "FAIL"
        lines.append(f"max |{name}| deviation: {deviation:.3e}  [{status}]")
        ok = ok and deviation <= tolerance
    axi_dev = axisym.max()
    axi_ok = axi_dev <= tolerance
    lines.append(
        f"max |axisymmetric cosine shortcut vs general| deviation: {axi_dev:.3e}  "
        f"[{'ok' if axi_ok else 'FAIL'}]"
    )
    ok = ok and axi_ok

    # Axisymmetric sine probe.  A tempting shortcut predicts that every k = 0
    # sine overlap vanishes identically; it does not.  Parity only kills the
    # cases with l1 + l2 + n even, and the simplest survivor is pi/4:
    probe = BraKetQuery(HarmonicIndex(0, 0), TrigTerm("sin", 1, 0), HarmonicIndex(0, 0))
    p_main = overlap(probe, Method.MAIN)
    p_quad = oracle.quadrature_overlap(probe)
    probe_dev = max(abs(p_main - math.pi / 4), abs(p_quad - math.pi / 4))
    probe_ok = probe_dev <= tolerance
    lines.append(
        "axisymmetric sine probe <0,0|sin(t)|0,0>: "
        f"closed form {p_main:.15f}, quadrature {p_quad:.15f}, expected pi/4; "
        "non-zero, so identical vanishing of k=0 sine overlaps is disproved "
        "(they vanish only when l1+l2+n is even)  "
        f"[{'ok' if probe_ok else 'FAIL'}]"
    )
    ok = ok and probe_ok

    if not ok:
        lines.append("worst offenders:")
        for name in pair_names:
            for deviation, label in worsts[name].top(3):
                if deviation > tolerance:
                    lines.append(f"  {name}: {deviation:.3e} at {label}")
    return lines, ok


def cmd_verify(args) -> int:
    if args.l_max < 0 or args.n_max < 0 or args.k_max < 0:
        return _fail("sweep bounds must be non-negative")
    lines, ok = run_verification(args.l_max, args.n_max, args.k_max, args.tolerance)
    for line in lines:
        print(line)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# bench


def cmd_bench(args) -> int:
    if args.L < 0 or args.repeat < 1:
        return _fail("need L >= 0 and --repeat >= 1")
    op = TrigTerm(args.kind, args.n, args.k)
    timings = {}
    for name, method in _METHODS.items():
        best = math.inf
        for _ in range(args.repeat):
            start = time.perf_counter()
            coupling_matrix(op, args.L, method)
            best = min(best, time.perf_counter() - start)
        timings[name] = best
    size = basis_size(args.L)
    print(
        f"full {size}x{size} matrix of e^(i{args.k}phi){args.kind}({args.n}theta), "
        f"best of {args.repeat} run(s):"
    )
    for name, best in timings.items():
        print(f"  {name:12s} {best * 1e3:10.3f} ms")
    print(f"speedup main vs quadrature: {timings['quadrature'] / timings['main']:.2f}x")
    print(f"speedup main vs appendix-a: {timings['appendix-a'] / timings['main']:.2f}x")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shbraket",
        description="Spherical-harmonic bra-ket overlap integrals of trigonometric operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("overlap", help="evaluate a single overlap integral")
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    p.add_argument("--kind", choices=("cos", "sin"), required=True)
    p.add_argument("--n", type=int, required=True, help="polar multiple in trig(n theta)")
    p.add_argument("--k", type=int, required=True, help="azimuthal multiple in e^{i k phi}")
    p.add_argument("--method", choices=sorted(_METHODS), default="main")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p.set_defaults(handler=cmd_overlap)

    p = sub.add_parser("matrix", help="assemble a coupling matrix and write it to a file")
    p.add_argument("--L", type=int, required=True, help="basis truncation, dimension (L+1)^2")
    p.add_argument("--kind", choices=("cos", "sin"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--effective-mass", action="store_true",
                   help="build mu_r^2 sin^(2q) theta + mu_0^2 instead of a single operator")
    p.add_argument("--q", type=int)
    p.add_argument("--mu-r-sq", type=float)
    p.add_argument("--mu-0-sq", type=float)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("verify", help="cross-check all evaluation routes over a sweep")
    p.add_argument("--l-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bench", help="time full-matrix assembly under each route")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--kind", choices=("cos", "sin"), default="cos")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--repeat", type=int, default=3)
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
