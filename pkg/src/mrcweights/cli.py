"""Command-line interface: ``mrcweights <command> ...``.

Exit codes::

    0   success (and all routes agree)
    1   verify: the code is not maximally recoverable
    2   construct: no instance found within the attempt budget
    3   routes disagree coefficientwise
    64  usage error (bad flags or flag values)
    65  parameters out of scope, enumeration guard exceeded, or inconsistent input
    66  unreadable or malformed code file

``--json`` output is byte-stable for fixed inputs: keys are sorted and big
integers are decimal strings.  Wall-clock timings appear only with ``--timing``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable

from . import __version__
from .code import (
    WEIGHT_ENUM_LIMIT,
    CodeFormatError,
    EnumerationTooLarge,
    LinearCode,
    dual,
    enumerate_support_weight_distribution,
    enumerate_weight_distribution,
    enumeration_limit,
    ghw_brute,
    min_distance,
    read_code,
)
from .formulas import (
    SOutOfRange,
    data_local_ell_weight_enumerators,
    data_local_two_dual_weight_enumerators,
    data_local_two_ghw,
    data_local_two_hsw,
    first_difference,
    local_two_ghw,
    local_two_hsw,
    local_two_weight_enumerators,
    data_local_two_weight_enumerators,
    singleton_locality_bound,
)
from .gf import FieldError, FieldSpec
from .matroid import (
    DATA_LOCAL,
    LOCAL,
    CodeMatroid,
    MrcParams,
    ParamsOutOfScope,
    UniformMatroid,
    ghw_from_matroid,
    mrc_matroid,
    rank_size_counts_closed_form,
    rank_size_distribution,
)
from .mrc import ConstructionFailed, LayoutMismatch, MrcInstance, construct_mrc, load_instance, save_instance, verify_mrc
from .tutte import (
    NegativeCoefficient,
    NotDivisible,
    britz_support_weight_enumerator,
    greene_weight_enumerator,
    macwilliams_transform,
    tutte_from_distribution,
    tutte_mds,
)

EXIT_OK = 0
EXIT_NOT_MRC = 1
EXIT_CONSTRUCTION_FAILED = 2
EXIT_DISAGREE = 3
EXIT_USAGE = 64
EXIT_SCOPE = 65
EXIT_BAD_FILE = 66

METHODS = ("formula", "greene", "brute")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --------------------------------------------------------------------------
# Input resolution


def parse_params(text: str, variant: str) -> MrcParams:
    try:
        fields = dict(part.split("=", 1) for part in text.split(",") if part)
        values = {key.strip(): int(val) for key, val in fields.items()}
    except ValueError as exc:
        raise UsageError(f"--params expects k=..,r=..,h=.. (got {text!r})") from exc
    if set(values) != {"k", "r", "h"}:
        raise UsageError(f"--params needs exactly k, r and h (got {sorted(values)})")
    return MrcParams(values["k"], values["r"], values["h"], variant)


def parse_poly(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--poly expects comma-separated integers (got {text!r})") from exc


class Inputs:
    """Parameters, field and (lazily) a concrete code for one invocation."""

    def __init__(self, args):
        self.args = args
        self.seed = args.seed
        self._instance: MrcInstance | None = None
        self.code: LinearCode | None = None
        self.code_path = getattr(args, "code", None)
        self.params: MrcParams | None = None
        if getattr(args, "params", None):
            self.params = parse_params(args.params, args.variant)
        if self.code_path:
            self.code = read_code(self.code_path)
            self.spec = self.code.spec
            sidecar = Path(self.code_path + ".json")
            if self.params is None and sidecar.exists():
                self._instance = load_instance(self.code_path)
                self.params = self._instance.params
                self.seed = self._instance.seed
        else:
            if self.params is None:
                raise UsageError("give --params or --code")
            self.spec = FieldSpec.from_q(args.q, parse_poly(args.poly))
        if self.params and self.code and (self.code.n, self.code.k) != (self.params.n, self.params.k):
            raise LayoutMismatch(f"code is [{self.code.n}, {self.code.k}] but {self.params} needs [{self.params.n}, {self.params.k}]")

    @property
    def q(self) -> int:
        return self.spec.q

    def need_params(self) -> MrcParams:
        if self.params is None:
            raise ParamsOutOfScope("this route needs MRC parameters (--params or a sidecar file)")
        return self.params

    def instance_code(self) -> LinearCode:
        if self.code is None:
            p = self.need_params()
            self._instance = construct_mrc(p, self.spec, self.seed, self.args.max_attempts)
            self.code = self._instance.code
        return self.code

    def matroid_counts(self):
        if self.params is not None:
            return rank_size_distribution(mrc_matroid(self.params))
        return rank_size_distribution(CodeMatroid(self.code))

    def echo(self) -> dict:
        out = {"field": str(self.spec)}
        if self.params:
            p = self.params
            out["params"] = {"k": p.k, "r": p.r, "h": p.h, "variant": p.variant, "n": p.n}
        if self.code_path:
            out["code"] = self.code_path
        else:
            out["seed"] = self.seed
        return out


def _brute_guard(inputs: Inputs):
    k = inputs.code.k if inputs.code is not None else inputs.need_params().k
    limit = enumeration_limit(WEIGHT_ENUM_LIMIT)
    if inputs.q**k > limit:
        raise EnumerationTooLarge(f"brute force needs q^k = {inputs.q ** k} codewords (guard {limit})")


# --------------------------------------------------------------------------
# Routes


def _is_two_group(p: MrcParams) -> bool:
    return p.ell == 2 and (p.variant == DATA_LOCAL or p.r + 1 <= p.k < 2 * p.r)


def weights_formula(inputs: Inputs):
    p, q = inputs.need_params(), inputs.q
    if p.variant == DATA_LOCAL:
        if p.ell == 2:
            return data_local_two_weight_enumerators(p.r, p.h, q)
        return data_local_ell_weight_enumerators(p.ell, p.r, p.h, q, check=False)
    if p.ell != 2:
        raise ParamsOutOfScope("no closed form for local MRC with more than two groups")
    return local_two_weight_enumerators(p.k, p.r, p.h, q)


def weights_greene(inputs: Inputs):
    return greene_weight_enumerator(inputs.matroid_counts(), inputs.q)


def weights_brute(inputs: Inputs):
    _brute_guard(inputs)
    return enumerate_weight_distribution(inputs.instance_code())


def dual_formula(inputs: Inputs):
    p = inputs.need_params()
    if p.variant != DATA_LOCAL or p.ell != 2:
        raise ParamsOutOfScope("dual closed form covers data-local MRC with two groups only")
    return data_local_two_dual_weight_enumerators(p.r, p.h, inputs.q)


def dual_greene(inputs: Inputs):
    N = inputs.matroid_counts()
    return macwilliams_transform(greene_weight_enumerator(N, inputs.q), N.n, N.k, inputs.q)


def dual_brute(inputs: Inputs):
    code = inputs.instance_code()
    limit = enumeration_limit(WEIGHT_ENUM_LIMIT)
    if inputs.q ** (code.n - code.k) > limit:
        raise EnumerationTooLarge(f"dual brute force needs q^(n-k) = {inputs.q ** (code.n - code.k)} codewords")
    return enumerate_weight_distribution(dual(code))


def ghw_formula(inputs: Inputs):
    p = inputs.need_params()
    if not _is_two_group(p):
        raise ParamsOutOfScope("GHW closed form covers two-group MRCs only")
    return data_local_two_ghw(p.r, p.h) if p.variant == DATA_LOCAL else local_two_ghw(p.k, p.r, p.h)


def ghw_greene(inputs: Inputs):
    m = mrc_matroid(inputs.params) if inputs.params else CodeMatroid(inputs.code)
    return ghw_from_matroid(m)


def ghw_brute_route(inputs: Inputs):
    return ghw_brute(inputs.instance_code())


def _s_values(inputs: Inputs) -> list[int]:
    k = inputs.code.k if inputs.code is not None else inputs.need_params().k
    if inputs.args.s is None:
        return list(range(1, k + 1))
    if not 1 <= inputs.args.s <= k:
        raise SOutOfRange(f"s={inputs.args.s} outside 1..{k}")
    return [inputs.args.s]


def hsw_formula(inputs: Inputs):
    p = inputs.need_params()
    if not _is_two_group(p):
        raise ParamsOutOfScope("support-weight closed forms cover two-group MRCs only")
    if p.variant == DATA_LOCAL:
        return {s: data_local_two_hsw(p.r, p.h, inputs.q, s) for s in _s_values(inputs)}
    return {s: local_two_hsw(p.k, p.r, p.h, inputs.q, s) for s in _s_values(inputs)}


def hsw_greene(inputs: Inputs):
    N = inputs.matroid_counts()
    return {s: britz_support_weight_enumerator(N, inputs.q, s) for s in _s_values(inputs)}


def hsw_brute(inputs: Inputs):
    code = inputs.instance_code()
    return {s: enumerate_support_weight_distribution(code, s) for s in _s_values(inputs)}


ROUTES: dict[str, dict[str, Callable]] = {
    "weights": {"formula": weights_formula, "greene": weights_greene, "brute": weights_brute},
    "dual": {"formula": dual_formula, "greene": dual_greene, "brute": dual_brute},
    "ghw": {"formula": ghw_formula, "greene": ghw_greene, "brute": ghw_brute_route},
    "hsw": {"formula": hsw_formula, "greene": hsw_greene, "brute": hsw_brute},
}


# --------------------------------------------------------------------------
# Comparison and rendering


def _as_layers(value) -> dict:
    """Normalise a route result to {s: coefficient list}; s = None for plain sequences."""
    if isinstance(value, dict):
        return {s: list(v) for s, v in value.items()}
    return {None: list(value)}


def compare_routes(results: dict) -> dict:
    """Agreement verdict from coefficientwise comparison against the first route."""
    names = list(results)
    verdict = {"equal": True, "first_difference": None}
    if len(names) < 2:
        return verdict
    ref = _as_layers(results[names[0]])
    for other in names[1:]:
        layers = _as_layers(results[other])
        for s in sorted(set(ref) | set(layers), key=lambda x: -1 if x is None else x):
            diff = first_difference(ref.get(s, []), layers.get(s, []))
            if diff:
                w, a, b = diff
                verdict = {
                    "equal": False,
                    "first_difference": {
                        "routes": [names[0], other],
                        "s": s,
                        "index": w,
                        "values": [str(a), str(b)],
                    },
                }
                return verdict
    return verdict


def _json_value(value):
    if isinstance(value, dict):
        return {str(s): [str(a) for a in v] for s, v in value.items()}
    return [str(a) for a in value]


def _text_value(value) -> list[str]:
    if isinstance(value, dict):
        return [f"  s={s}: " + " ".join(str(a) for a in v) for s, v in value.items()]
    return [" ".join(str(a) for a in value)]


def run_routes(command: str, inputs: Inputs, methods: list[str], skip_unavailable: bool):
    results, timing, skipped = {}, {}, {}
    for name in methods:
        start = time.perf_counter()
        try:
            results[name] = ROUTES[command][name](inputs)
        except (ParamsOutOfScope, EnumerationTooLarge) as exc:
            if not skip_unavailable:
                raise
            skipped[name] = str(exc)
            continue
        timing[name] = round(time.perf_counter() - start, 6)
    return results, timing, skipped


def _emit(args, report: dict, text_lines: list[str]):
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(text_lines))


def _methods(args) -> tuple[list[str], bool]:
    if args.check or args.method == "all":
        return list(METHODS), True
    return [args.method], False


def cmd_routes(args) -> int:
    inputs = Inputs(args)
    methods, multi = _methods(args)
    results, timing, skipped = run_routes(args.command, inputs, methods, multi)
    if not results:
        raise ParamsOutOfScope("; ".join(f"{k}: {v}" for k, v in skipped.items()))
    verdict = compare_routes(results)
    report = {
        "command": args.command,
        "inputs": inputs.echo(),
        "routes": {name: _json_value(value) for name, value in results.items()},
        "agreement": verdict,
        "version": __version__,
    }
    if skipped:
        report["skipped"] = skipped
    if args.timing:
        report["timing"] = timing
    lines = []
    for name, value in results.items():
        body = _text_value(value)
        if len(body) == 1:
            lines.append(f"{name}: {body[0]}" if len(results) > 1 else body[0])
        else:
            lines.append(f"{name}:")
            lines += body
    for name, why in skipped.items():
        lines.append(f"{name}: skipped ({why})")
    if len(results) > 1:
        lines.append(_verdict_text(verdict))
    _emit(args, report, lines)
    return EXIT_OK if verdict["equal"] else EXIT_DISAGREE


def _verdict_text(verdict: dict) -> str:
    if verdict["equal"]:
        return "agreement: exact"
    d = verdict["first_difference"]
    where = f"w={d['index']}" if d["s"] is None else f"s={d['s']}, w={d['index']}"
    return f"agreement: MISMATCH between {d['routes'][0]} and {d['routes'][1]} at {where} ({d['values'][0]} vs {d['values'][1]})"


# --------------------------------------------------------------------------
# Other commands


def cmd_construct(args) -> int:
    if not args.params:
        raise UsageError("construct needs --params")
    params = parse_params(args.params, args.variant)
    spec = FieldSpec.from_q(args.q, parse_poly(args.poly))
    inst = construct_mrc(params, spec, args.seed, args.max_attempts)
    report = {"command": "construct", "field": str(spec), **inst.sidecar(), "version": __version__}
    if args.out:
        code_path, side_path = save_instance(inst, args.out)
        report["files"] = [str(code_path), str(side_path)]
    lines = [f"{params} over GF({spec.q}): verified after {inst.attempts} attempt(s) (seed {inst.seed})"]
    if args.out:
        lines.append(f"wrote {report['files'][0]} and {report['files'][1]}")
    else:
        lines.append(str(inst.code).rstrip())
    _emit(args, report, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.code:
        raise UsageError("verify needs --code")
    inputs = Inputs(args)
    params = inputs.need_params()
    ok = verify_mrc(inputs.code, params)
    report = {"command": "verify", "inputs": inputs.echo(), "verified": ok, "version": __version__}
    lines = [f"{params}: {'maximally recoverable' if ok else 'NOT maximally recoverable'}"]
    if ok and inputs.q**params.k <= enumeration_limit(WEIGHT_ENUM_LIMIT):
        d = min_distance(inputs.code)
        bound = singleton_locality_bound(params.n, params.k, params.r)
        report["d_min"] = d
        report["optimal"] = d == bound
        lines.append(f"d_min = {d}, locality bound = {bound}")
    _emit(args, report, lines)
    return EXIT_OK if ok else EXIT_NOT_MRC


def _parse_uniform(text: str) -> tuple[int, int]:
    try:
        n, k = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--uniform expects N,K (got {text!r})") from exc
    return n, k


def cmd_tutte(args) -> int:
    results = {}
    if args.uniform:
        n, k = _parse_uniform(args.uniform)
        if not 0 <= k <= n:
            raise ParamsOutOfScope("need 0 <= k <= n")
        inputs_echo = {"uniform": {"n": n, "k": k}}
        results["formula"] = tutte_mds(n, k)
        results["greene"] = tutte_from_distribution(rank_size_distribution(UniformMatroid(n, k)))
    else:
        inputs = Inputs(args)
        inputs_echo = inputs.echo()
        if inputs.params is not None:
            p = inputs.params
            try:
                results["formula"] = tutte_from_distribution(rank_size_counts_closed_form(p))
            except ParamsOutOfScope:
                pass
            results["greene"] = tutte_from_distribution(rank_size_distribution(mrc_matroid(p)))
        if inputs.code is not None or args.check:
            results["brute"] = tutte_from_distribution(rank_size_distribution(CodeMatroid(inputs.instance_code())))
    if not (args.check or len(results) == 1):
        # without --check, show a single route: the first available
        first = next(iter(results))
        results = {first: results[first]}
    polys = list(results.values())
    equal = all(p == polys[0] for p in polys)
    report = {
        "command": "tutte",
        "inputs": inputs_echo,
        "routes": {name: [[i, j, str(c)] for i, j, c in poly.triples()] for name, poly in results.items()},
        "agreement": {"equal": equal},
        "version": __version__,
    }
    lines = []
    for name, poly in results.items():
        prefix = f"{name}: " if len(results) > 1 else ""
        lines.append(prefix + str(poly))
        lines.append(" " * len(prefix) + " ".join(f"({i},{j},{c})" for i, j, c in poly.triples()))
    if len(results) > 1:
        lines.append("agreement: exact" if equal else "agreement: MISMATCH")
    _emit(args, report, lines)
    return EXIT_OK if equal else EXIT_DISAGREE


def cmd_report(args) -> int:
    inputs = Inputs(args)
    sections, lines, all_equal = {}, [f"{inputs.params or 'code'} over {inputs.spec}"], True
    for command in ("weights", "dual", "ghw", "hsw"):
        results, timing, skipped = run_routes(command, inputs, list(METHODS), True)
        verdict = compare_routes(results)
        all_equal &= verdict["equal"]
        section = {
            "routes": {name: _json_value(value) for name, value in results.items()},
            "agreement": verdict,
        }
        if skipped:
            section["skipped"] = skipped
        if args.timing:
            section["timing"] = timing
        sections[command] = section
        lines.append(f"[{command}] routes: {', '.join(results) or 'none'}")
        for name, value in results.items():
            body = _text_value(value)
            lines += [f"  {name}: {body[0]}"] if len(body) == 1 else [f"  {name}:"] + ["  " + b for b in body]
        for name, why in skipped.items():
            lines.append(f"  {name}: skipped ({why})")
        lines.append("  " + _verdict_text(verdict))
    report = {"command": "report", "inputs": inputs.echo(), "sections": sections, "version": __version__}
    report["agreement"] = {"equal": all_equal}
    _emit(args, report, lines)
    return EXIT_OK if all_equal else EXIT_DISAGREE


# --------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mrcweights", description="Weight enumerators and support weights of maximally recoverable codes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *, code=True, method=False, s=False):
        p.add_argument("--params", help="MRC parameters as k=..,r=..,h=..")
        p.add_argument("--variant", choices=(DATA_LOCAL, LOCAL), default=DATA_LOCAL)
        p.add_argument("--q", type=int, default=16, help="field size (default 16)")
        p.add_argument("--poly", help="field modulus coefficients, lowest degree first")
        p.add_argument("--seed", type=int, default=1, help="construction seed (default 1)")
        p.add_argument("--max-attempts", type=int, default=1000)
        if code:
            p.add_argument("--code", help="code file (a <file>.json sidecar supplies parameters)")
        if method:
            p.add_argument("--method", choices=METHODS + ("all",), default="formula")
        if s:
            p.add_argument("-s", type=int, help="support dimension (default: every s)")
        p.add_argument("--check", action="store_true", help="run every route and compare")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--timing", action="store_true", help="include wall-clock timings in --json output")

    p = sub.add_parser("construct", help="search for a verified MRC instance")
    common(p, code=False)
    p.add_argument("--out", help="write the code file here plus a .json sidecar")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check maximal recoverability of a code file")
    common(p)
    p.set_defaults(func=cmd_verify)

    for name, help_text, extra in (
        ("weights", "weight distribution", {}),
        ("dual", "weight distribution of the dual code", {}),
        ("ghw", "generalized Hamming weights", {}),
        ("hsw", "higher support weights", {"s": True}),
    ):
        p = sub.add_parser(name, help=help_text)
        common(p, method=True, **extra)
        if "s" not in extra:
            p.set_defaults(s=None)
        p.set_defaults(func=cmd_routes)

    p = sub.add_parser("tutte", help="Tutte polynomial")
    common(p)
    p.add_argument("--uniform", help="uniform matroid N,K instead of an MRC")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("report", help="cross-check every route for every quantity")
    common(p)
    p.set_defaults(func=cmd_report, s=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mrcweights: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FieldError as exc:
        print(f"mrcweights: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionFailed as exc:
        print(f"mrcweights: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION_FAILED
    except (CodeFormatError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"mrcweights: bad file: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE
    except (ParamsOutOfScope, EnumerationTooLarge, SOutOfRange, LayoutMismatch, NegativeCoefficient, NotDivisible) as exc:
        print(f"mrcweights: out of scope: {exc}", file=sys.stderr)
        return EXIT_SCOPE


if __name__ == "__main__":
    sys.exit(main())
