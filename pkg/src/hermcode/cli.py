"""Command line front end: ``hermcode <command> --t T [options]``.

Exit status is 0 on success, 2 when a verified claim fails and 1 for usage
or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import comb

from . import __version__
from .analysis import (
    bounds,
    construct_min_weight,
    construct_second_weight_witness,
    intersection_size,
    quadric_census,
)
from .checks import CHECKS, run_check
from .codes import DEFAULT_BUDGET, build_generator_matrix, weight_distribution
from .errors import BudgetExceeded, InvariantViolation, TheoremViolation
from .gf import prime_power
from .hermitian import SUPPORTED_T, build_surface

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    t: int
    h: int = 2
    mode: str = "exhaustive"
    samples: int = 10**6
    seed: int | None = None
    workers: int = 1
    out: str | None = None
    format: str = "text"
    allow_large: bool = False
    check: str | None = None
    kind: str | None = None

    @property
    def budget(self) -> int:
        return 1 << 62 if self.allow_large else DEFAULT_BUDGET

    def validate(self) -> None:
        if prime_power(self.t) is None:
            raise UsageError(f"t={self.t} is not a prime power")
        if self.t not in SUPPORTED_T:
            raise UsageError(f"t={self.t} is not supported (choose from {SUPPORTED_T})")
        if self.h < 1:
            raise UsageError("h must be >= 1")
        if self.mode == "sampled" and self.command in ("weights", "census"):
            if self.seed is None:
                raise UsageError("sampled mode needs --seed")
            if self.samples < 1:
                raise UsageError("--samples must be positive")
        if self.workers < 1:
            raise UsageError("--workers must be >= 1")
        if self.command == "census" and self.h != 2:
            raise UsageError("the quadric census is defined for h=2 only")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hermcode", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hermcode {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *, h=True, sampling=False):
        p.add_argument("--t", type=int, required=True, help="prime power, q = t^2")
        if h:
            p.add_argument("--h", type=int, default=2, help="form degree")
        if sampling:
            p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
            p.add_argument("--samples", type=int, default=10**6)
            p.add_argument("--seed", type=int, default=None)
            p.add_argument("--workers", "--threads", type=int, default=1, dest="workers")
            p.add_argument("--allow-large", action="store_true",
                           help="acknowledge an exhaustive sweep beyond the default budget")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
        p.add_argument("--format", choices=["text", "json"], default="text")

    common(sub.add_parser("params", help="code parameters and bounds"))
    common(sub.add_parser("weights", help="weight distribution"), sampling=True)
    common(sub.add_parser("census", help="quadric section census"), h=False, sampling=True)
    p = sub.add_parser("verify", help="run a named check")
    common(p, h=False, sampling=True)
    p.add_argument("--check", choices=CHECKS, required=True)
    p.set_defaults(seed=1)
    p = sub.add_parser("witness", help="forms reaching the two largest section sizes")
    common(p, h=False)
    p.add_argument("--kind", choices=["min", "A", "B", "C"], default="min")
    common(sub.add_parser("export", help="generator matrix as text"))
    return parser


def _config(args) -> RunConfig:
    return RunConfig(
        command=args.command, t=args.t, h=getattr(args, "h", 2),
        mode=getattr(args, "mode", "exhaustive"), samples=getattr(args, "samples", 10**6),
        seed=getattr(args, "seed", None), workers=getattr(args, "workers", 1),
        out=args.out, format=args.format, allow_large=getattr(args, "allow_large", False),
        check=getattr(args, "check", None), kind=getattr(args, "kind", None),
    )


def _dump(data: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    lines = []
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, separators=(",", ":"))
        lines.append(f"{key}={value}")
    return "\n".join(lines) + "\n"


def _params(cfg: RunConfig):
    X = build_surface(cfg.t)
    b = bounds(cfg.t, cfg.h)
    G = build_generator_matrix(X, cfg.h)
    t = cfg.t
    data = {"tool": f"hermcode {__version__}", "t": t, "h": cfg.h, "q": X.q, "n": G.n, "k": G.k}
    if cfg.h == 1:
        data.update(d=t**5, second=t**5 + t * t)
    elif cfg.h == 2:
        data.update(d=b.min_distance, second=b.second_weight)
    data.update(s=bounds(t, 2).s, s2=bounds(t, 2).s2, sorensen=b.sorensen, lachaud=b.lachaud)
    if cfg.h <= t:
        data["k_formula"] = comb(3 + cfg.h, cfg.h)
    return _dump(data, cfg.format), EXIT_OK


def _weights(cfg: RunConfig):
    G = build_generator_matrix(build_surface(cfg.t), cfg.h)
    dist = weight_distribution(G, cfg.mode, samples=cfg.samples, seed=cfg.seed,
                               workers=cfg.workers, budget=cfg.budget)
    if cfg.format == "json":
        return dist.to_json(), EXIT_OK
    d = dist.to_dict()
    head = {k: v for k, v in d.items() if k != "weights"}
    text = _dump(head, "text") + "".join(f"{w} {c}\n" for w, c in d["weights"].items())
    return text, EXIT_OK


def _census(cfg: RunConfig):
    X = build_surface(cfg.t)
    report = quadric_census(X, cfg.mode, samples=cfg.samples, seed=cfg.seed,
                            workers=cfg.workers, budget=cfg.budget,
                            bezout_limit=None if cfg.mode == "exhaustive" else 64)
    return _dump(report.to_dict(), cfg.format), EXIT_OK if report.passed() else EXIT_FAILED


def _verify(cfg: RunConfig):
    result = run_check(cfg.check, cfg.t, samples=cfg.samples, seed=cfg.seed,
                       workers=cfg.workers, budget=cfg.budget)
    data = {"tool": f"hermcode {__version__}", **result.to_dict()}
    data["verdict"] = "VERIFIED" if result.passed else "FAILED"
    return _dump(data, cfg.format), EXIT_OK if result.passed else EXIT_FAILED


def _witness(cfg: RunConfig):
    X = build_surface(cfg.t)
    if cfg.kind == "min":
        p1 = int(X.points[0])
        h1 = X.tangent_plane(p1)
        p2 = int(next(p for p in X.points if not X.pg.incidence[h1.index, p]))
        f = construct_min_weight(X, p1, p2)
        size = intersection_size(f, X)
        data = {"kind": "min", "form": str(f), "points": [X.pg.format_point(p1), X.pg.format_point(p2)],
                "intersection": size, "weight": X.n - size}
        ok = size == bounds(cfg.t).s
    else:
        w = construct_second_weight_witness(X, cfg.kind)
        data = w.to_dict()
        ok = w.size == bounds(cfg.t).s2 and w.details.get("structure_ok", True)
    data = {"tool": f"hermcode {__version__}", "t": cfg.t, **data}
    return _dump(data, cfg.format), EXIT_OK if ok else EXIT_FAILED


def _export(cfg: RunConfig):
    return build_generator_matrix(build_surface(cfg.t), cfg.h).export_text(), EXIT_OK


_COMMANDS = {"params": _params, "weights": _weights, "census": _census, "verify": _verify,
             "witness": _witness, "export": _export}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _config(args)
    try:
        cfg.validate()
        text, code = _COMMANDS[cfg.command](cfg)
    except (UsageError, BudgetExceeded, ValueError) as exc:
        print(f"hermcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantViolation, TheoremViolation) as exc:
        print(f"hermcode: check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
