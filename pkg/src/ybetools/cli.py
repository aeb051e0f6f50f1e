"""Command-line front end.

Exit status: 0 on success, 1 on I/O or parse errors, 2 on domain errors
(for instance a non-involutive input where involutivity is required, or an
exceeded closure cap).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import braces as br
from . import brace_enum, intlin, promislow, solutions, structure_group
from .perm import ClosureCapExceeded, DEFAULT_CLOSURE_CAP, PermError, prime_divisors, sylow_cyclic
from .solutions import Solution


class UsageError(Exception):
    """I/O or parse problem (exit status 1)."""


@dataclass
class Config:
    closure_cap: int = DEFAULT_CLOSURE_CAP
    format: str = "json"
    threads: int = 1
    fixtures_dir: Path | None = None

    def __post_init__(self):
        if self.closure_cap <= 0:
            raise UsageError("--closure-cap must be positive")
        if self.threads <= 0:
            raise UsageError("--threads must be positive")


def _threads(value: str) -> int:
    if value == "auto":
        return os.cpu_count() or 1
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'auto' or a positive integer") from None


def _resolve(path: str, cfg: Config) -> Path:
    p = Path(path)
    if p.exists():
        return p
    candidates = []
    if cfg.fixtures_dir is not None:
        candidates.append(cfg.fixtures_dir / p.name)
    bundled = resources.files(__package__).joinpath("fixtures")
    candidates += [Path(str(bundled)) / p.name, Path(str(bundled)) / f"{p.name}.json"]
    for c in candidates:
        if c.exists():
            return c
    raise UsageError(f"no such file: {path}")


def _load_solution(path: str, cfg: Config) -> Solution:
    try:
        return solutions.load_solution(_resolve(path, cfg))
    except (json.JSONDecodeError, PermError, solutions.SolutionError, ValueError) as exc:
        raise UsageError(f"cannot read solution {path}: {exc}") from None


def _load_brace(path: str, cfg: Config) -> br.SkewBrace:
    try:
        data = json.loads(_resolve(path, cfg).read_text())
        return br.brace_from_json(data)
    except (json.JSONDecodeError, br.BraceError, ValueError) as exc:
        raise UsageError(f"cannot read brace {path}: {exc}") from None


def _emit(obj, cfg: Config, out) -> None:
    if cfg.format == "json":
        out.write(json.dumps(obj) + "\n")
        return
    if isinstance(obj, dict):
        for k, v in obj.items():
            out.write(f"{k}: {v if isinstance(v, (str, int, bool)) or v is None else json.dumps(v)}\n")
    else:
        out.write(f"{obj}\n")


def _word(text: str) -> list[int]:
    try:
        return structure_group.parse_word(text)
    except structure_group.StructureGroupError as exc:
        raise UsageError(str(exc)) from None


def _subset(s) -> list[int]:
    return sorted(s)


# -- solution commands --------------------------------------------------------

def cmd_verify(args, cfg):
    s = _load_solution(args.solution, cfg)
    rep = solutions.verify(s)
    return {"bijective_r": rep.bijective_r, "braid": rep.braid, "nondegenerate": rep.nondegenerate}


def cmd_involutive(args, cfg):
    return {"involutive": solutions.is_involutive(_load_solution(args.solution, cfg))}


def cmd_retract(args, cfg):
    s = _load_solution(args.solution, cfg)
    ret, cls = solutions.retract(s)
    return {"retraction": ret.to_json_dict(), "class_map": cls}


def cmd_mp_level(args, cfg):
    level = solutions.mp_level(_load_solution(args.solution, cfg))
    if level is None:
        return {"multipermutation": False}
    return {"multipermutation": True, "level": level}


def cmd_perm_group(args, cfg):
    s = _load_solution(args.solution, cfg)
    g = solutions.permutation_group(s, cap=cfg.closure_cap)
    return {"order": g.order, "exponent": g.exponent(),
            "generators": [p.to_cycles() for p in s.sigma],
            "sylow_cyclic": {str(p): sylow_cyclic(g, p) for p in prime_divisors(g.order)}}


def cmd_rep(args, cfg):
    s = _load_solution(args.solution, cfg)
    if args.word is not None:
        items = {args.word: structure_group.eval_word(s, _word(args.word))}
    else:
        items = {str(x + 1): structure_group.generator(s, x) for x in range(s.n)}
    if args.matrix:
        return {k: e.to_matrix() for k, e in items.items()}
    return {k: e.to_json_dict() for k, e in items.items()}


def cmd_lattice(args, cfg):
    s = _load_solution(args.solution, cfg)
    lat = structure_group.translation_lattice(s, cap=cfg.closure_cap)
    return {"ambient_dim": lat.ambient_dim, "rank": lat.rank,
            "basis": [[str(x) for x in row] for row in lat.basis],
            "index": lat.index()}


def cmd_find_promislow(args, cfg):
    s = _load_solution(args.solution, cfg)
    rep = promislow.find_promislow(s, cap=cfg.closure_cap, threads=cfg.threads)
    return rep.to_json_dict()


def cmd_upp_witness(args, cfg):
    s = _load_solution(args.solution, cfg)
    x = structure_group.eval_word(s, _word(args.x))
    y = structure_group.eval_word(s, _word(args.y))
    S = promislow.promislow_set(x, y)
    table = promislow.product_table(S)
    out = {"witness": min(table.values()) >= 2, "set_size": len(S), "products": len(table)}
    if args.verbose:
        out["min_factorizations"] = min(table.values())
        out["set"] = {lbl: e.to_json_dict() for lbl, e in zip(promislow.SET_LABELS, S)}
        out["factorization_counts"] = sorted(table.values())
    return out


def cmd_enumerate(args, cfg):
    sols = solutions.enumerate_solutions(args.n, threads=cfg.threads)
    not_mp = sum(solutions.mp_level(s) is None for s in sols)
    out = {"total": len(sols), "not_mp": not_mp}
    if not args.count_only:
        out["solutions"] = [s.to_json_dict() for s in sols]
    return out


def cmd_iso(args, cfg):
    a = _load_solution(args.first, cfg)
    b = _load_solution(args.second, cfg)
    f = solutions.is_isomorphic(a, b)
    return {"isomorphic": f is not None, "bijection": f}


# -- brace commands -------------------------------------------------------------

def cmd_brace_verify(args, cfg):
    data = json.loads(_resolve(args.brace, cfg).read_text())
    try:
        rep = br.verify_brace_tables(data["add"], data["circ"])
    except KeyError as exc:
        raise UsageError(f"missing key {exc} in brace JSON") from None
    return rep.to_json_dict()


def cmd_brace_series(args, cfg):
    b = _load_brace(args.brace, cfg)
    out = {
        "order": b.order,
        "abelian_type": b.is_abelian_type(),
        "nilpotent_type": b.is_nilpotent_type(),
        "socle": _subset(br.socle(b)),
        "soc_series": [_subset(t) for t in br.soc_series(b)],
        "right_series": [_subset(t) for t in br.right_series(b)],
        "left_series": [_subset(t) for t in br.left_series(b)],
        "right_nilpotent": br.is_right_nilpotent(b),
        "left_nilpotent": br.is_left_nilpotent(b),
    }
    return out


def cmd_brace_pnilp(args, cfg):
    b = _load_brace(args.brace, cfg)
    p = args.p
    return {"p": p,
            "sylow": _subset(br.sylow_additive(b, p)),
            "hall_p_prime": _subset(br.hall_p_prime(b, p)),
            "right_p_nilpotent": br.is_right_p_nilpotent(b, p),
            "left_p_nilpotent": br.is_left_p_nilpotent(b, p),
            "circ_p_nilpotent": b.circ.is_p_nilpotent(p),
            "circ_abelian_normal_sylow": b.circ.has_abelian_normal_sylow(p)}


def cmd_brace_to_solution(args, cfg):
    s = br.solution_from_brace(_load_brace(args.brace, cfg))
    return {"solution": s.to_json_dict(), "involutive": solutions.is_involutive(s)}


def cmd_brace_perm_brace(args, cfg):
    b = br.permutation_brace(_load_solution(args.solution, cfg), cap=cfg.closure_cap)
    return b.to_json_dict()


def cmd_brace_enumerate(args, cfg):
    bs = brace_enum.enumerate_braces(args.order, threads=cfg.threads)
    out = {"order": args.order, "count": len(bs),
           "abelian_type": sum(b.is_abelian_type() for b in bs)}
    if not args.count_only:
        out["braces"] = [b.to_json_dict() for b in bs]
    return out


EXAMPLES = {
    "c6": lambda: br.twisted_cyclic_brace(6),
    "d8": lambda: br.twisted_cyclic_brace(8),
    "z8": br.power_brace_z8,
}


def cmd_brace_example(args, cfg):
    return EXAMPLES[args.name]().to_json_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ybetools", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--threads", type=_threads, default=1, help="'auto' or a count")
    parser.add_argument("--closure-cap", type=int, default=DEFAULT_CLOSURE_CAP)
    parser.add_argument("--fixtures-dir", type=Path, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def solution_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("solution", help="solution JSON or cycle-text file, or a bundled fixture name")
        p.set_defaults(func=func)
        return p

    solution_cmd("verify", cmd_verify, "check bijectivity and the braid relation")
    solution_cmd("involutive", cmd_involutive, "check r^2 = id")
    solution_cmd("retract", cmd_retract, "retraction of an involutive solution")
    solution_cmd("mp-level", cmd_mp_level, "multipermutation level")
    solution_cmd("perm-group", cmd_perm_group, "permutation group generated by the sigma_x")
    p = solution_cmd("rep", cmd_rep, "affine images of generators or of a word")
    p.add_argument("--word", help="signed word such as '1,-2'")
    p.add_argument("--matrix", action="store_true", help="print (n+1)x(n+1) matrices")
    solution_cmd("lattice", cmd_lattice, "translation lattice of the structure group")
    solution_cmd("find-promislow", cmd_find_promislow, "search for a Promislow subgroup")
    p = solution_cmd("upp-witness", cmd_upp_witness, "check the 14-element Promislow set")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("enumerate-solutions", help="involutive solutions of size n <= 4")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("iso", help="isomorphism test between two solutions")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    bp = sub.add_parser("brace", help="skew brace commands")
    bsub = bp.add_subparsers(dest="brace_command", required=True)
    for name, func in (("verify", cmd_brace_verify), ("series", cmd_brace_series),
                       ("to-solution", cmd_brace_to_solution)):
        q = bsub.add_parser(name)
        q.add_argument("brace", help="brace JSON file")
        q.set_defaults(func=func)
    q = bsub.add_parser("pnilp")
    q.add_argument("brace")
    q.add_argument("--p", type=int, required=True)
    q.set_defaults(func=cmd_brace_pnilp)
    q = bsub.add_parser("perm-brace")
    q.add_argument("solution")
    q.set_defaults(func=cmd_brace_perm_brace)
    q = bsub.add_parser("enumerate")
    q.add_argument("--order", type=int, required=True)
    q.add_argument("--count-only", action="store_true")
    q.set_defaults(func=cmd_brace_enumerate)
    q = bsub.add_parser("example", help="emit one of the built-in example braces")
    q.add_argument("name", choices=sorted(EXAMPLES))
    q.set_defaults(func=cmd_brace_example)
    return parser


DOMAIN_ERRORS = (solutions.SolutionError, structure_group.StructureGroupError,
                 promislow.PromislowError, br.BraceError, intlin.IntLinError,
                 ClosureCapExceeded)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        cfg = Config(args.closure_cap, args.format, args.threads, args.fixtures_dir)
        result = args.func(args, cfg)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except DOMAIN_ERRORS as exc:
        err.write(f"error: {exc}\n")
        return 2
    _emit(result, cfg, out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
