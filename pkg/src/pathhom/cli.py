"""Command-line surface: one subcommand per counting operation, plus the
cross-verification harness and the method/backend benchmark.

Exit codes: 0 success, 1 verification or consistency failure, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field

from . import backend, congruence, lattice, oracle, verify
from .closedform import (
    end_count_closed,
    epi_count_ie,
    hom1_count_closed,
    hom_count_closed,
    hom_j_count_closed,
    lk_closed,
    lk_telescope,
    lk_via_hom,
)
from .core import (
    EnumerationLimitError,
    FormulaDomainError,
    InconsistencyError,
    PathHom,
    SetPartition,
)
from .lattice import BandSpec


@dataclass
class ResultRecord:
    op: str
    params: dict[str, int] = field(default_factory=dict)
    method: str = "direct"
    value: str = ""
    elapsed_ns: int = 0


def _emit(record: ResultRecord, fmt: str) -> None:
    if fmt == "plain":
        print(record.value)
    elif fmt == "json":
        print(json.dumps({
            "op": record.op,
            "params": record.params,
            "method": record.method,
            "value": record.value,
            "elapsed_ns": record.elapsed_ns,
        }))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["op", "n", "k", "j", "method", "value", "elapsed_ns"])
        writer.writerow([
            record.op,
            record.params.get("n", ""),
            record.params.get("k", ""),
            record.params.get("j", ""),
            record.method,
            record.value,
            record.elapsed_ns,
        ])


def _timed(fn):
    start = time.perf_counter_ns()
    value = fn()
    return value, time.perf_counter_ns() - start


def _run_count_op(op: str, params: dict[str, int], method: str, fmt: str, fn) -> int:
    value, elapsed = _timed(fn)
    _emit(ResultRecord(op, params, method, str(value), elapsed), fmt)
    return 0


# ---------------------------------------------------------------- handlers

def _cmd_hom(args) -> int:
    n, k = args.n, args.k
    if args.method == "closed":
        fn = lambda: hom_count_closed(n, k)
    elif args.method == "dp":
        fn = lambda: oracle.hom_count_dp(n, k)
    else:
        limit = args.limit_enum or oracle.DEFAULT_ENUM_LIMIT
        fn = lambda: oracle.hom_count_enum(n, k, limit=limit)
    return _run_count_op("hom", {"n": n, "k": k}, args.method, args.format, fn)


def _cmd_homj(args) -> int:
    n, k, j = args.n, args.k, args.j
    if args.method == "closed":
        fn = lambda: hom_j_count_closed(n, k, j)
    else:
        fn = lambda: oracle.hom_start_counts_dp(n, k)[j]
    return _run_count_op("homj", {"n": n, "k": k, "j": j}, args.method, args.format, fn)


def _cmd_hom1(args) -> int:
    n, k = args.n, args.k
    if args.method == "closed":
        fn = lambda: hom1_count_closed(n, k)
    elif args.method == "lattice":
        fn = lambda: lattice.hom1_via_lattice(n, k)
    else:
        fn = lambda: oracle.hom_start_counts_dp(n, k)[1]
    return _run_count_op("hom1", {"n": n, "k": k}, args.method, args.format, fn)


def _cmd_end(args) -> int:
    n = args.n
    if args.method == "closed":
        fn = lambda: end_count_closed(n)
    else:
        fn = lambda: oracle.hom_count_dp(n, n)
    return _run_count_op("end", {"n": n}, args.method, args.format, fn)


def _cmd_epi(args) -> int:
    n, k = args.n, args.k
    if args.method == "ie":
        fn = lambda: epi_count_ie(n, k)
    else:
        limit = args.limit_enum or oracle.DEFAULT_ENUM_LIMIT
        fn = lambda: oracle.epi_count_brute(n, k, limit=limit)
    return _run_count_op("epi", {"n": n, "k": k}, args.method, args.format, fn)


def _cmd_lk(args) -> int:
    n, k = args.n, args.k
    method = args.method
    if method == "auto":
        method = "closed" if n >= 2 * k else "hom"
    if method == "closed":
        fn = lambda: lk_closed(n, k)
    elif method == "hom":
        fn = lambda: lk_via_hom(n, k)
    elif method == "telescope":
        fn = lambda: lk_telescope(n, k).total
    else:
        limit = args.limit_enum or congruence.DEFAULT_CENSUS_LIMIT
        fn = lambda: congruence.epispectrum_brute(n, limit=limit).entry(k)
    return _run_count_op("lk", {"n": n, "k": k}, method, args.format, fn)


def _cmd_epispectrum(args) -> int:
    n = args.n
    if args.method == "formula":
        fn = lambda: congruence.epispectrum_formula(n)
    else:
        limit = args.limit_enum or congruence.DEFAULT_CENSUS_LIMIT
        fn = lambda: congruence.epispectrum_brute(n, limit=limit)
    spectrum, elapsed = _timed(fn)
    _emit(ResultRecord("epispectrum", {"n": n}, args.method,
                       spectrum.text_form(), elapsed), args.format)
    return 0


def _cmd_lattice(args) -> int:
    e, nn = args.e, args.nn
    band = BandSpec(args.t, args.s)
    if args.method == "reflection":
        fn = lambda: lattice.lattice_count_banded(e, nn, band)
    else:
        limit = args.limit_enum or lattice.DEFAULT_BAND_BRUTE_LIMIT
        fn = lambda: lattice.lattice_count_banded_brute(e, nn, band, limit=limit)
    value, elapsed = _timed(fn)
    _emit(ResultRecord("lattice", {"e": e, "nn": nn, "t": args.t, "s": args.s},
                       args.method, str(value), elapsed), args.format)
    return 0


def _parse_images(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"--images expects a comma-separated integer list, got {text!r}")


def _cmd_encode(args) -> int:
    images = _parse_images(args.images)
    k = args.k if args.k is not None else max(images)
    f = PathHom.from_images(images, k)
    word, elapsed = _timed(lambda: lattice.encode_hom(f))
    _emit(ResultRecord("encode", {"n": f.n, "k": k}, "direct", word, elapsed), args.format)
    return 0


def _cmd_decode(args) -> int:
    f, elapsed = _timed(lambda: lattice.decode_word(args.word, args.k))
    value = ",".join(map(str, f.images))
    _emit(ResultRecord("decode", {"n": f.n, "k": args.k}, "direct", value, elapsed), args.format)
    return 0


def _cmd_arrange(args) -> int:
    partition = SetPartition.parse(args.partition)
    result, elapsed = _timed(lambda: congruence.arrangements(partition))
    if not result.valid:
        value = "invalid"
    else:
        texts = []
        for ordering in result.orderings:
            texts.append("".join(
                "{" + ",".join(map(str, partition.blocks[i - 1])) + "}" for i in ordering
            ))
        value = "|".join(texts)
    if args.format == "plain":
        if result.valid:
            for line in value.split("|"):
                print(line)
        else:
            print(value)
    else:
        _emit(ResultRecord("arrange", {"n": partition.n}, "direct", value, elapsed),
              args.format)
    return 0


def _cmd_verify(args) -> int:
    limit = args.limit_enum or congruence.DEFAULT_CENSUS_LIMIT
    results = verify.run_all(args.max_n, args.max_k, enum_limit=limit)
    failed = 0
    for res in results:
        tag = "PASS" if res.ok else "FAIL"
        failed += 0 if res.ok else 1
        print(f"{tag} {res.name}: {res.detail}")
    print("polynomial threshold (first n with settled agreement against the binomial pair):")
    for k, settle in verify.threshold_table(args.max_n, args.max_k, enum_limit=limit):
        shown = settle if settle is not None else "not settled in range"
        print(f"  k={k}: n={shown}")
    if failed:
        print(f"{failed} of {len(results)} suites FAILED")
        return 1
    print(f"all {len(results)} suites passed")
    return 0


# ---------------------------------------------------------------- bench

def _parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(x) for x in text.split(",")]


_BENCH_METHODS = {
    "hom": ("closed", "dp", "enum"),
    "hom1": ("closed", "lattice", "dp"),
    "epi": ("ie", "brute"),
    "lk": ("closed", "hom", "telescope", "brute"),
}

# methods whose inner loops run on a selectable kernel backend
_BACKEND_METHODS = {"dp", "enum", "brute"}


def _bench_eval(op: str, method: str, n: int, k: int, limit: int, kernel: str):
    """Return the exact value, or None when the method does not apply."""
    if op == "hom":
        if method == "closed":
            return hom_count_closed(n, k)
        if method == "dp":
            return oracle.hom_count_dp(n, k, method=kernel)
        if n > limit:
            return None
        return oracle.hom_count_enum(n, k, limit=limit)
    if op == "hom1":
        if method == "closed":
            return hom1_count_closed(n, k)
        if method == "lattice":
            return lattice.hom1_via_lattice(n, k)
        return oracle.hom_start_counts_dp(n, k, method=kernel)[1]
    if op == "epi":
        if method == "ie":
            return epi_count_ie(n, k)
        if n > limit or k > n:
            return None
        return oracle.epi_count_brute(n, k, limit=limit)
    if method == "closed":
        return lk_closed(n, k) if n >= 2 * k else None
    if method == "telescope":
        return lk_telescope(n, k).total if n >= 2 * k else None
    if method == "hom":
        return lk_via_hom(n, k) if 1 <= k <= n - 1 else None
    if n > limit or not 1 <= k <= n - 1:
        return None
    return congruence.epispectrum_brute(n, limit=limit).entry(k)


def _cmd_bench(args) -> int:
    ns = _parse_int_list(args.n)
    methods = [m.strip() for m in args.methods.split(",")] if args.methods else list(_BENCH_METHODS[args.op])
    for m in methods:
        if m not in _BENCH_METHODS[args.op]:
            raise ValueError(f"method {m!r} not available for op {args.op!r} "
                             f"(choose from {', '.join(_BENCH_METHODS[args.op])})")
    if args.backends == "both":
        kernels = list(backend.available_backends())
    else:
        kernels = [args.backends]
    limit = args.limit_enum or oracle.DEFAULT_ENUM_LIMIT
    cells = []
    for n in ns:
        if args.k == "n":
            cells.append((n, n))
        else:
            for k in _parse_int_list(args.k):
                cells.append((n, k))
    rows = []
    for n, k in cells:
        for method in methods:
            for kernel in kernels:
                if method not in _BACKEND_METHODS and kernel != kernels[0]:
                    continue  # formula legs have no kernel dimension
                label = method if kernel == "auto" or method not in _BACKEND_METHODS \
                    else f"{method}[{kernel}]"
                start = time.perf_counter_ns()
                value = _bench_eval(args.op, method, n, k, limit, kernel)
                elapsed = time.perf_counter_ns() - start
                if value is not None:
                    rows.append((n, k, label, str(value), elapsed))
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    writer = csv.writer(sys.stdout)
    writer.writerow(["method", "n", "k", "value", "elapsed_ns"])
    for n, k, label, value, elapsed in rows:
        writer.writerow([label, n, k, value, elapsed])
    mismatches = 0
    seen: dict[tuple[int, int], str] = {}
    for n, k, label, value, _ in rows:
        if (n, k) not in seen:
            seen[(n, k)] = value
        elif seen[(n, k)] != value:
            print(f"MISMATCH at (n={n}, k={k}): {label} gives {value}, "
                  f"expected {seen[(n, k)]}", file=sys.stderr)
            mismatches += 1
    return 1 if mismatches else 0


# ---------------------------------------------------------------- parser

def _add_common(sub, *, limit: bool = True) -> None:
    sub.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    if limit:
        sub.add_argument("--limit-enum", type=int, default=None,
                         help="override the enumeration size cap for brute-force methods")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathhom",
        description="Exact homomorphism counting between undirected paths",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("hom", help="total homomorphism count n-path -> k-path")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("closed", "dp", "enum"), default="closed")
    _add_common(p)
    p.set_defaults(handler=_cmd_hom)

    p = subs.add_parser("homj", help="count with the first image pinned to j")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--method", choices=("closed", "dp"), default="closed")
    _add_common(p, limit=False)
    p.set_defaults(handler=_cmd_homj)

    p = subs.add_parser("hom1", help="count with the first image pinned to 1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("closed", "lattice", "dp"), default="closed")
    _add_common(p, limit=False)
    p.set_defaults(handler=_cmd_hom1)

    p = subs.add_parser("end", help="endomorphism count of the n-path")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("closed", "dp"), default="closed")
    _add_common(p, limit=False)
    p.set_defaults(handler=_cmd_end)

    p = subs.add_parser("epi", help="surjective homomorphism count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("ie", "brute"), default="ie")
    _add_common(p)
    p.set_defaults(handler=_cmd_epi)

    p = subs.add_parser("lk", help="epispectrum entry k of the n-path")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("auto", "closed", "hom", "telescope", "brute"),
                   default="auto")
    _add_common(p)
    p.set_defaults(handler=_cmd_lk)

    p = subs.add_parser("epispectrum", help="all epispectrum entries of the n-path")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("formula", "brute"), default="formula")
    _add_common(p)
    p.set_defaults(handler=_cmd_epispectrum)

    p = subs.add_parser("lattice", help="banded lattice-path count to (e, nn)")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--nn", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--method", choices=("reflection", "brute"), default="reflection")
    _add_common(p)
    p.set_defaults(handler=_cmd_lattice)

    p = subs.add_parser("encode", help="lattice word of an image sequence with f(1)=1")
    p.add_argument("--images", required=True, help="comma-separated image list, e.g. 1,2,1")
    p.add_argument("--k", type=int, default=None,
                   help="target path size (default: max image)")
    _add_common(p, limit=False)
    p.set_defaults(handler=_cmd_encode)

    p = subs.add_parser("decode", help="image sequence of a lattice word")
    p.add_argument("--word", required=True, help="string over E/N, e.g. EENEN")
    p.add_argument("--k", type=int, required=True)
    _add_common(p, limit=False)
    p.set_defaults(handler=_cmd_decode)

    p = subs.add_parser("arrange", help="reconstruct the two surjections inducing a partition")
    p.add_argument("--partition", required=True,
                   help="canonical text form, e.g. {1,3,5,9}{2,4,10}{6,8}{7}{11}")
    _add_common(p, limit=False)
    p.set_defaults(handler=_cmd_arrange)

    p = subs.add_parser("verify", help="run every cross-check suite")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--max-k", type=int, default=12)
    p.add_argument("--limit-enum", type=int, default=None)
    p.set_defaults(handler=_cmd_verify)

    p = subs.add_parser("bench", help="time the evaluation strategies against each other")
    p.add_argument("--op", choices=tuple(_BENCH_METHODS), default="hom")
    p.add_argument("--n", default="", help="comma-separated source sizes")
    p.add_argument("--k", default="n", help="comma-separated target sizes, or 'n' for k = n")
    p.add_argument("--methods", default="",
                   help="comma-separated subset of the op's methods (default: all)")
    p.add_argument("--backends", choices=("auto", "pure", "fast", "both"), default="auto")
    p.add_argument("--limit-enum", type=int, default=None)
    p.set_defaults(handler=_cmd_bench)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (FormulaDomainError, EnumerationLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
