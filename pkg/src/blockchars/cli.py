"""Command-line surface: exact character data, decompositions, sampling and
identity verification with machine-readable output.

Exit codes: 0 success, 1 a verification suite found a counterexample, 2 usage
error.  Rationals are printed as JSON integers when integral and as "p/q"
strings otherwise, so payloads round-trip exactly.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import characters, coinvariant, infinite, irreducibles, shapes
from .combinatorics import cycle_count, partitions_of, permutation_with_cycle_type

FAMILIES = ("sigma", "sigma-hat", "tau", "psi", "ewens")
SUITES = (
    "branching",
    "duality",
    "inversion",
    "regular",
    "coinvariant",
    "recursion",
    "extreme-identity",
    "gram",
)


def encode_rational(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def decode_rational(x) -> Fraction:
    return Fraction(x)


def partition_key(lam) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"


def _family_function(args, parser) -> characters.BlockFunction:
    if args.family == "ewens":
        if args.theta is None:
            parser.error("--theta is required for the ewens family")
        result = characters.ewens(args.n, Fraction(args.theta))
        return result.function
    if args.k is None:
        parser.error(f"--k is required for the {args.family} family")
    if args.family == "sigma":
        return characters.sigma(args.n, args.k)
    if args.family == "sigma-hat":
        return characters.sigma_hat(args.n, args.k)
    if args.family == "tau":
        return characters.tau(args.n, args.k)
    return characters.psi(args.n, args.k)


def cmd_char(args, parser) -> int:
    phi = _family_function(args, parser)
    gate = characters.is_character(phi)
    payload = {"is_character": gate.is_character}
    if gate.witness is not None:
        payload["first_negative_tau_index"] = gate.witness
    if args.family == "ewens":
        payload["degenerate"] = characters.ewens(args.n, Fraction(args.theta)).degenerate
    if args.basis == "values":
        payload["values"] = [encode_rational(v) for v in phi.values]
    elif args.basis == "sigma":
        payload["coefficients"] = [
            encode_rational(c) for c in characters.to_sigma_basis(phi)
        ]
    else:
        payload["coefficients"] = [encode_rational(c) for c in gate.tau_coefficients]
    _emit(args, payload)
    return 0


def cmd_decompose(args, parser) -> int:
    phi = _family_function(args, parser)
    decomposition = irreducibles.decompose(phi)
    payload = {
        "multiplicities": {
            partition_key(lam): encode_rational(b) for lam, b in decomposition.items()
        }
    }
    _emit(args, payload)
    return 0


def cmd_sample(args, parser) -> int:
    batch = shapes.sample_batch(args.n, args.k, args.kind, args.seed, args.count)
    if args.emit == "shapes":
        _emit(args, {"shapes": [list(lam) for lam in batch.shapes]})
        return 0
    grid = shapes.DEFAULT_PROFILE_GRID
    means, stderrs = shapes.mean_profile_with_stderr(batch, grid)
    sys.stdout.write(shapes.profile_csv(grid, means, stderrs))
    return 0


def _suite_items(suite: str, n_max: int):
    """(description, thunk) pairs; each thunk returns True on success."""
    items = []
    if suite == "branching":
        for n in range(2, n_max + 1):
            for k in range(1, n + 1):
                items.append(
                    ({"n": n, "k": k}, lambda n=n, k=k: characters.branching_check(n, k))
                )
    elif suite == "duality":
        for n in range(1, n_max + 1):
            items.append(({"n": n}, lambda n=n: irreducibles.verify_duality(n)))
    elif suite == "inversion":
        for n in range(1, n_max + 1):
            items.append(({"n": n}, lambda n=n: irreducibles.verify_ms_inversion(n)))
    elif suite == "regular":
        for n in range(1, n_max + 1):
            items.append(
                ({"n": n}, lambda n=n: characters.verify_regular_decomposition(n))
            )
    elif suite == "coinvariant":
        for n in range(1, min(n_max, coinvariant.COINVARIANT_DEFAULT_BOUND) + 1):
            for lam in partitions_of(n):
                items.append(
                    (
                        {"n": n, "cycle_type": list(lam)},
                        lambda n=n, lam=lam: _coinvariant_class_check(n, lam),
                    )
                )
    elif suite == "recursion":
        specs = [("T3", None), ("T1", 1), ("T1", 2), ("T1", 3), ("T2", 1), ("T2", 2), ("T2", 3)]
        for kind, big_k in specs:
            items.append(
                (
                    {"array": kind if big_k is None else f"{kind}(K={big_k})"},
                    lambda kind=kind, big_k=big_k: _recursion_check(kind, n_max, big_k),
                )
            )
    elif suite == "extreme-identity":
        for kind in ("T1", "T2", "T3"):
            for big_k in range(1, 6) if kind != "T3" else [None]:
                for n in range(1, n_max + 1):
                    items.append(
                        (
                            {"array": kind, "K": big_k, "n": n},
                            lambda kind=kind, n=n, big_k=big_k: infinite.verify_extreme_identity(
                                kind, n, big_k
                            ),
                        )
                    )
    elif suite == "gram":
        for n in range(1, min(n_max, characters.GRAM_ORACLE_BOUND) + 1):
            items.append(({"n": n}, lambda n=n: _gram_agreement_check(n)))
    return items


def _coinvariant_class_check(n: int, cycle_type) -> bool:
    s = permutation_with_cycle_type(tuple(cycle_type))
    traces = coinvariant.layer_traces(n, s)
    ell = cycle_count(s)
    return all(
        traces[k - 1] == characters.tau(n, k)(ell) for k in range(1, n + 1)
    )


def _recursion_check(kind: str, depth: int, big_k) -> bool:
    array = infinite.extreme_array(kind, depth, big_k)
    return infinite.verify_rows_normalized(array) and infinite.verify_backward_recursion(
        array
    )


def _gram_agreement_check(n: int, cases: int = 12) -> bool:
    from random import Random

    rng = Random(200 + n)
    for index in range(cases):
        if index % 2:
            coefficients = [Fraction(rng.randint(0, 6), rng.randint(1, 4)) for _ in range(n)]
            phi = characters.from_tau_basis(n, coefficients)
        else:
            phi = characters.BlockFunction(
                n, [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]
            )
        if characters.is_character(phi).is_character != characters.gram_psd_oracle(phi):
            return False
    return True


def cmd_verify(args, parser) -> int:
    items = _suite_items(args.suite, args.n_max)
    workers = max(1, int(os.environ.get("BLOCKCHAR_THREADS", "1")))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda item: item[1](), items))
    else:
        outcomes = [thunk() for _, thunk in items]
    failures = [desc for (desc, _), ok in zip(items, outcomes) if not ok]
    payload = {
        "suite": args.suite,
        "n_max": args.n_max,
        "checked": len(items),
        "passed": len(items) - len(failures),
    }
    if failures:
        payload["counterexample"] = failures[0]
        payload["failures"] = failures
    _emit(args, payload, status="fail" if failures else "ok")
    return 1 if failures else 0


def _emit(args, payload, status="ok"):
    result = {
        "command": args.command,
        "parameters": {
            key: value
            for key, value in sorted(vars(args).items())
            if key != "command" and not callable(value) and value is not None
        },
        "status": status,
        "payload": payload,
    }
    print(json.dumps(result, indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockchars",
        description="Exact block-character computations for symmetric groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("char", help="values or basis coefficients of a family member")
    p_char.add_argument("--n", type=int, required=True)
    p_char.add_argument("--family", choices=FAMILIES, required=True)
    p_char.add_argument("--k", type=int)
    p_char.add_argument("--theta", type=str, help="rational p/q for the ewens family")
    p_char.add_argument("--basis", choices=("values", "sigma", "tau"), default="values")

    p_dec = sub.add_parser("decompose", help="irreducible multiplicities of a family member")
    p_dec.add_argument("--n", type=int, required=True)
    p_dec.add_argument("--family", choices=FAMILIES, required=True)
    p_dec.add_argument("--k", type=int)
    p_dec.add_argument("--theta", type=str)

    p_sample = sub.add_parser("sample", help="random shapes under the tau or sigma measure")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--k", type=int, required=True)
    p_sample.add_argument("--kind", choices=shapes.MEASURE_KINDS, required=True)
    p_sample.add_argument("--count", type=int, default=1)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--emit", choices=("shapes", "profile-csv"), default="shapes")

    p_verify = sub.add_parser("verify", help="exhaustive identity checks")
    p_verify.add_argument("--suite", choices=SUITES, required=True)
    p_verify.add_argument("--n-max", dest="n_max", type=int, default=8)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "char":
            return cmd_char(args, parser)
        if args.command == "decompose":
            return cmd_decompose(args, parser)
        if args.command == "sample":
            return cmd_sample(args, parser)
        return cmd_verify(args, parser)
    except (ValueError, ZeroDivisionError) as error:
        parser.error(str(error))
        return 2


if __name__ == "__main__":
    sys.exit(main())
