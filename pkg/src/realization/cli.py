"""Command line front end.

    realization validate FILE
    realization distance FILE POINT POINT
    realization act FILE HOMEO POINT
    realization subdivide FILE --r R [--mode sd|sde] [--point POINT]
    realization fixed-points FILE --r R --group D|C
    realization verify {axioms,metric,products,sdr,fixed-points} [...]
    realization verify axioms --word "w d0 s1 t" --level 2 [--flavor C|D --r R]

FILE is a presentation path or the name of a bundled presentation
(``delta2``, ``dih1_mod_d2``, ...).  Grammars for presentations, points and
homeomorphisms are documented in :mod:`realization.literals`.

Generator words are space separated tokens ``d<i>``, ``s<i>``, ``t`` and ``w``,
read as a composite with the leftmost token applied last.  ``--level`` is the
codomain of the leftmost token; the levels of the others follow from it.
``verify axioms --word`` rewrites the word to normal form and checks the result
against composition of integer grid maps.

Exit codes: 0 pass, 1 mathematical violation, 2 usage or parse error.
``REALIZATION_CAP`` and ``REALIZATION_BOUND`` override the default dimension
cap and subset-search bound; command line flags override both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import literals as lit
from .crossed import Flavor, WordError, from_integer_map, morphism_word, normal_form, parse_word, word_model
from .drinfeld import CapacityError, distance, normalize
from .homeo import act
from .sset import (
    CappedObjectError,
    FlavorError,
    PresentationError,
    check_relations,
    standard,
    validate,
)
from .subdiv import DerivedSet, SubdivisionError, fixed_points, realize_point_map_Dr
from . import suites

MAX_DIM = 8
MAX_CUTS = 14
DEFAULT_CAP = 6


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _jsonable(v):
    if isinstance(v, Fraction):
        return lit.format_q(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    return str(v)


class Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def record(self, record_type: str, text: str, **fields) -> None:
        if self.fmt == "json-lines":
            rec = {"record": record_type, **{k: _jsonable(v) for k, v in fields.items()}}
            print(json.dumps(rec, sort_keys=True, ensure_ascii=False), file=self.stream)
        else:
            print(text, file=self.stream)


# --------------------------------------------------------------------------
# argument handling


def load(path: str, cap: int | None = None):
    p = Path(path)
    if p.is_file():
        X = lit.load_presentation(p)
    elif path in lit.bundled_names():
        X = lit.bundled(path)
    else:
        raise UsageError(f"no such presentation file or bundled name: {path}")
    if cap is not None and X.cap is not None and X.cap > cap:
        X.cap = cap
    return X


def _check_cuts(*points) -> None:
    for p in points:
        if len(p.cuts.points) > MAX_CUTS:
            raise UsageError(f"a point has {len(p.cuts.points)} cuts; the limit is {MAX_CUTS}")


# --------------------------------------------------------------------------
# verbs


def cmd_validate(args, out: Output) -> int:
    X = load(args.file, args.cap)
    top = args.max_level if args.max_level is not None else min(args.cap, X.max_dim + 1)
    rep = validate(X, top)
    if rep.ok:
        out.record("validate", f"{X.name}: ok ({rep.checked} checks up to level {top})",
                   name=X.name, status="pass", checks=rep.checked, max_level=top)
        return 0
    v = rep.first
    out.record("validate", f"{X.name}: {v.relation} fails on generator {v.generator}: {v.detail}",
               name=X.name, status="fail", relation=v.relation, generator=v.generator, detail=v.detail)
    return 1


def cmd_distance(args, out: Output) -> int:
    X = load(args.file, args.cap)
    p, q = lit.parse_point(args.a, X), lit.parse_point(args.b, X)
    _check_cuts(p, q)
    d = distance(p, q, args.bound)
    out.record("distance", lit.format_q(d), distance=d, a=lit.format_point(p), b=lit.format_point(q))
    return 0


def cmd_act(args, out: Output) -> int:
    X = load(args.file, args.cap)
    a = lit.parse_homeo(args.homeo)
    p = lit.parse_point(args.point, X)
    _check_cuts(p)
    q = normalize(act(a, p))
    out.record("act", lit.format_point(q), point=lit.format_point(q), homeo=str(a))
    return 0


def cmd_subdivide(args, out: Output) -> int:
    X = load(args.file, args.cap)
    Y = DerivedSet(X, args.mode, args.r)
    top = 0
    while Y.base_level(top + 1) <= args.cap:
        top += 1
    sizes = [len(Y.elements(n)) for n in range(top + 1)]
    out.record("subdivide", f"{Y.name}: {Y.kind} object, level sizes {sizes}",
               name=Y.name, kind=Y.kind, r=Y.r, sizes=sizes)
    if args.point:
        p = _derived_point(args.point, Y, X)
        q = normalize(realize_point_map_Dr(p))
        out.record("image", f"D({lit.format_point(p)}) = {lit.format_point(q)}",
                   point=lit.format_point(p), image=lit.format_point(q))
    return 0


def _derived_point(text: str, Y: DerivedSet, X):
    """A point of the subdivision: cuts in its own frame, element named in X."""
    import re

    from .drinfeld import CutSet, RealizationPoint

    m = re.fullmatch(r'@\s*\{\s*cuts\s*:\s*\[([^\]]*)\]\s*,\s*elem\s*:\s*"([^"]*)"\s*\}\s*', text.strip())
    if not m:
        raise lit.LiteralError("subdivision points are written @ {cuts: [...], elem: \"...\"}")
    cuts = lit._q_list(m.group(1))
    elem = lit.parse_element(m.group(2), X)
    if Y.transform == "sd" and X.kind != "simplicial":
        F = CutSet.periodic(cuts, Y.r)
    else:
        F = CutSet("interval", tuple(cuts))
    try:
        return RealizationPoint(Y, F, elem)
    except ValueError as exc:
        raise lit.LiteralError(str(exc)) from None


def cmd_fixed_points(args, out: Output) -> int:
    X = load(args.file, args.cap)
    dim = min(args.dim, args.cap)
    pres, obj = fixed_points(X, args.r, args.group, dim)
    sizes = [len(obj.elements(n)) for n in range(dim + 1)]
    out.record("fixed-points", f"(sd^e_{args.r} {X.name})^{args.group}_{args.r}: level sizes {sizes}",
               name=X.name, group=args.group, r=args.r, sizes=sizes)
    if args.show:
        out.record("presentation", lit.format_presentation(pres).rstrip(),
                   presentation=lit.format_presentation(pres))
    if args.group == "C":
        rep = check_relations(obj, dim)
        if rep.ok:
            rep = validate(pres, dim)
        if not rep.ok:
            v = rep.first
            out.record("validate", f"not a dihedral set: {v.relation}: {v.detail}", status="fail",
                       relation=v.relation, detail=v.detail)
            return 1
        out.record("validate", "dihedral structure ok", status="pass")
    return 0


def _verify_word(args, out: Output) -> int:
    fl = Flavor(args.flavor or "D", args.r)
    if args.word_level is None:
        raise UsageError("--word needs --level")
    word = parse_word(args.word, args.word_level)
    if not word:
        raise UsageError("empty word")
    if fl.kind == "C" and any(x.kind == "w" for x in word):
        raise UsageError("w is not a cyclic generator")
    nf = normal_form(word, fl)
    oracle = from_integer_map(word_model(word, fl.r), fl)
    ok = nf == oracle
    nf_text = " ".join(map(repr, morphism_word(nf))) or "id"
    out.record("word", f"{args.word} = {nf_text}", word=args.word, level=args.word_level,
               flavor=str(fl), normal_form=nf_text, phi=list(nf.phi.values),
               power=nf.g.power, reflected=nf.g.reflected, status="pass" if ok else "fail")
    return 0 if ok else 1


def cmd_verify(args, out: Output) -> int:
    s = args.suite
    if s == "axioms" and args.word is not None:
        return _verify_word(args, out)
    if s == "axioms":
        kinds = (args.flavor,) if args.flavor else ("C", "D")
        rep = suites.suite_axioms(kinds, group_levels=min(args.max_level + 2, 5),
                                  relation_level=args.max_level, r_max=args.r_max,
                                  word_level=min(args.max_level, 3), word_len=args.word_len)
    elif s == "metric":
        rep = suites.suite_metric(args.max_level, args.samples * 2, args.samples, args.seed)
    elif s == "products":
        rep = suites.suite_products()
    elif s == "sdr":
        objs = [load(f, args.cap) for f in args.files] if args.files else [standard("cyclic", 1)]
        rep = suites.suite_sdr(objs, (args.r,), samples=args.samples, seed=args.seed)
    elif s == "fixed-points":
        X = load(args.files[0], args.cap) if args.files else lit.bundled("dih1_mod_d2")
        rep = suites.suite_fixed_points(X, args.r, min(3, args.cap))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown suite {s}")
    for key in sorted(rep.checks):
        out.record("check", f"  {key}: {rep.checks[key]}", suite=rep.name, check=key, count=rep.checks[key])
    for key in sorted(rep.facts):
        out.record("fact", f"  {key}: {_jsonable(rep.facts[key])}", suite=rep.name, fact=key,
                   value=rep.facts[key])
    for f in rep.failures:
        out.record("failure", f"  FAIL {f}", suite=rep.name, detail=f)
    status = "pass" if rep.ok else "fail"
    out.record("summary", f"{rep.name}: {status.upper()}", suite=rep.name, status=status)
    return 0 if rep.ok else 1


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("--cap", type=int, default=None, help=f"dimension cap (<= {MAX_DIM})")
    common.add_argument("--bound", type=int, default=None, help=f"subset-search bound (<= {MAX_CUTS})")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="realization", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("validate", parents=[common], help="check the crossed simplicial identities")
    v.add_argument("file")
    v.add_argument("--max-level", type=int, default=None)
    v.set_defaults(func=cmd_validate)

    d = sub.add_parser("distance", parents=[common], help="distance between two points")
    d.add_argument("file")
    d.add_argument("a")
    d.add_argument("b")
    d.set_defaults(func=cmd_distance)

    a = sub.add_parser("act", parents=[common], help="apply a PL homeomorphism to a point")
    a.add_argument("file")
    a.add_argument("homeo")
    a.add_argument("point")
    a.set_defaults(func=cmd_act)

    s = sub.add_parser("subdivide", parents=[common], help="edgewise subdivision and its point map")
    s.add_argument("file")
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--mode", choices=("sd", "sde"), default="sd")
    s.add_argument("--point", default=None)
    s.set_defaults(func=cmd_subdivide)

    f = sub.add_parser("fixed-points", parents=[common], help="fixed points of sd^e_r under D_r or C_r")
    f.add_argument("file")
    f.add_argument("--r", type=int, default=2)
    f.add_argument("--group", choices=("D", "C"), default="D")
    f.add_argument("--dim", type=int, default=3)
    f.add_argument("--show", action="store_true", help="print the fixed-point presentation")
    f.set_defaults(func=cmd_fixed_points)

    y = sub.add_parser("verify", parents=[common], help="run a verification suite")
    y.add_argument("suite", choices=("axioms", "metric", "products", "sdr", "fixed-points"))
    y.add_argument("files", nargs="*")
    y.add_argument("--flavor", choices=("C", "D"), default=None)
    y.add_argument("--max-level", type=int, default=3)
    y.add_argument("--r", type=int, default=None, help="2 for sdr and fixed-points, 1 for --word")
    y.add_argument("--r-max", type=int, default=3)
    y.add_argument("--word-len", type=int, default=4)
    y.add_argument("--samples", type=int, default=100)
    y.add_argument("--word", default=None, help="with axioms: a generator word to normalize")
    y.add_argument("--level", dest="word_level", type=int, default=None)
    y.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.format)
    try:
        if args.cap is None:
            args.cap = _env_int("REALIZATION_CAP", DEFAULT_CAP)
        if args.bound is None:
            args.bound = _env_int("REALIZATION_BOUND", MAX_CUTS)
        if not 0 <= args.cap <= MAX_DIM:
            raise UsageError(f"dimension cap must lie in 0..{MAX_DIM}")
        if not 1 <= args.bound <= MAX_CUTS:
            raise UsageError(f"subset-search bound must lie in 1..{MAX_CUTS}")
        if getattr(args, "r", None) is None:
            args.r = 1 if getattr(args, "word", None) is not None else 2
        if args.r < 1:
            raise UsageError("r must be positive")
        if getattr(args, "max_level", None) is not None and args.max_level > 5:
            raise UsageError("--max-level is at most 5")
        return args.func(args, out)
    except (UsageError, PresentationError, SubdivisionError, FlavorError, CapacityError,
            CappedObjectError, WordError, ValueError) as exc:
        if out.fmt == "text":
            print(f"error: {exc}", file=sys.stderr)
        else:
            out.record("error", f"error: {exc}", status="error", detail=str(exc))
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
