"""Command-line interface: ``apartment-fan <command> [options]``.

Every command except ``render`` prints one JSON document.  Rationals are
strings ``"p/q"`` in lowest terms (integers as ``"p"``), weights and roots are
integer arrays in fundamental-weight coordinates, and roots are referred to by
their index in the ``roots`` listing: positive roots by height, then
coordinates descending, followed by their negatives in the same order.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from importlib import resources
from fractions import Fraction
from typing import Sequence

from . import exact
from .boundary import (BoundaryPoint, Ray, classify_f, ray_limit, express_on,
                       stabilizer_shadow, stratum_parabolic_type)
from .fan import (Face, Fan, SupportPattern, compactification_family, enumerate_faces,
                  face_of_point, same_compactification, support_pattern)
from .render import RenderError, render_svg
from .repweights import (FaithfulnessError, RepData, WeightError, admissible_subsets,
                         validate_faithful)
from .rootsys import ClassificationError, RootSystem, SizeLimitError, build_root_system

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GUARD = 3

COMMANDS = ("roots", "weights", "admissible", "fan", "face-of", "limit", "classify",
            "compare", "family", "render")


def load_schema() -> dict:
    """The JSON schema every command output validates against."""
    return json.loads(resources.files(__package__).joinpath("schema.json").read_text("utf-8"))


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="apartment-fan",
                description="Faces and boundary strata of an apartment from a representation.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--family", required=True,
                   help="Cartan type letter (with --rank) or full type such as A1xA1")
    p.add_argument("--rank", type=int)
    p.add_argument("--weight", help="highest weight, comma-separated integers "
                                    "(default: sum of fundamental weights)")
    p.add_argument("--weight2", help="second highest weight for compare")
    p.add_argument("--origin", help="ray origin, comma-separated rationals")
    p.add_argument("--direction", help="ray direction, comma-separated rationals")
    p.add_argument("--point", help="apartment point, comma-separated rationals")
    p.add_argument("--base", help="Weyl word naming a base, e.g. 0,1 (empty: standard)")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--guard", type=int, help="maximum Weyl group order for base enumeration")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for points or directions that are not given")
    p.add_argument("--threads", type=int, default=1, help="worker threads for fan enumeration")
    return p


# -- parsing --------------------------------------------------------------------------

def _parse_vector(text: str, n: int, what: str, integral: bool = False) -> tuple:
    parts = [t.strip() for t in text.split(",")] if text.strip() else []
    if len(parts) != n:
        raise InputError(f"{what} needs {n} coordinates, got {len(parts)}")
    try:
        vals = tuple(Fraction(t) for t in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad {what} {text!r}: {exc}") from None
    if integral:
        if any(v.denominator != 1 for v in vals):
            raise InputError(f"{what} must have integer coordinates")
        return tuple(int(v) for v in vals)
    return vals


def _parse_word(text: str | None, rs: RootSystem) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        word = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"bad base word {text!r}") from None
    if any(not 0 <= i < rs.rank for i in word):
        raise InputError(f"base word {text!r} uses letters outside 0..{rs.rank - 1}")
    return word


def _random_vector(rng: random.Random, n: int, nonzero: bool = False) -> tuple[Fraction, ...]:
    while True:
        v = tuple(Fraction(rng.randint(-12, 12), rng.randint(1, 5)) for _ in range(n))
        if not nonzero or any(v):
            return v


# -- serialization ------------------------------------------------------------------

def _q(x) -> str:
    return exact.format_rational(x)


def _ints(v) -> list[int]:
    return [int(c) for c in v]


def _face_name(F: Face) -> dict:
    return {"base_word": list(F.base.word), "Y_indices": list(F.indices)}


def _face_record(fan: Fan, c) -> dict:
    rep = fan.rep
    return {
        "id": c.id,
        "index": c.index,
        "base_word": list(c.representative.base.word),
        "Y_indices": list(c.representative.indices),
        "span_dim": c.span_dim,
        "stratum_dim": c.stratum_dim,
        "parabolic_type": sorted(stratum_parabolic_type(rep, c.representative)),
        "member_count": len(c.members),
    }


def _located(rep: RepData, F: Face, coords, guard) -> dict:
    """A boundary point written over its canonical representative when the fan fits the guard.

    With ``coords=None`` only the face is located.
    """
    out = {"face": _face_name(F), "coords": [_q(c) for c in coords or []], "canonical": None}
    try:
        fan = enumerate_faces(rep, guard)
    except SizeLimitError:
        return out
    c = fan.canonical(F)
    out["canonical"] = {"face_id": c.id, "index": c.index,
                        "base_word": list(c.representative.base.word),
                        "Y_indices": list(c.representative.indices)}
    if coords is not None:
        q = express_on(BoundaryPoint(F, coords), c.representative)
        out["canonical"]["coords"] = [_q(v) for v in q.coords]
    return out


def _classification(rep: RepData, p: BoundaryPoint) -> list[dict]:
    shadow = stabilizer_shadow(rep, p)
    return [{"root": i, "f": str(classify_f(rep, p, i)), "root_group": shadow[i].kind}
            for i in range(len(rep.rs.all_roots))]


def _system(rs: RootSystem) -> dict:
    return {"type": rs.name, "rank": rs.rank}


def _pattern(sp: SupportPattern) -> dict:
    return {"indices": sorted(sp.indices), "witness": _ints(sp.witness.as_ints())}


# -- commands -----------------------------------------------------------------------

def _rep(args, rs: RootSystem, text: str | None = None, faithful: bool = True) -> RepData:
    text = args.weight if text is None else text
    lam = (1,) * rs.rank if text is None else _parse_vector(text, rs.rank, "weight", True)
    rep = RepData(rs, lam)
    if faithful and not validate_faithful(rep):
        raise FaithfulnessError(f"highest weight {rep.lambda0} is perpendicular to a whole "
                                "Dynkin component")
    return rep


def cmd_roots(args, rs):
    n_pos = len(rs.positive_roots)
    return {
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "weyl_order": rs.weyl_order,
        "components": [list(c) for c in rs.dynkin_components],
        "roots": [{"index": i, "coords": list(a), "simple_coords": _ints(rs.to_root_coords(a)),
                   "positive": i < n_pos, "squared_length": _q(rs.inner(a, a))}
                  for i, a in enumerate(rs.all_roots)],
    }


def cmd_weights(args, rs):
    rep = _rep(args, rs, faithful=False)
    return {"highest_weight": list(rep.lambda0),
            "weights": [{"weight": list(mu), "support": sorted(rep.support_indices_std(mu))}
                        for mu in rep.sorted_weights]}


def cmd_admissible(args, rs):
    rep = _rep(args, rs)
    base = rs.base_from_word(_parse_word(args.base, rs))
    return {"highest_weight": list(rep.lambda0),
            "base_word": list(base.word),
            "base_roots": [list(r) for r in base.roots],
            "admissible": [sorted(Y) for Y in admissible_subsets(rep, base)]}


def cmd_fan(args, rs):
    rep = _rep(args, rs)
    fan = enumerate_faces(rep, args.guard, n_jobs=max(1, args.threads))
    return {"highest_weight": list(rep.lambda0),
            "faces": [_face_record(fan, c) for c in fan],
            "closure_edges": [list(e) for e in fan.closure_edges()]}


def cmd_face_of(args, rs):
    rep = _rep(args, rs)
    rng = random.Random(args.seed)
    x = (_parse_vector(args.point, rs.rank, "point") if args.point is not None
         else _random_vector(rng, rs.rank))
    F = face_of_point(rep, x)
    loc = _located(rep, F, None, args.guard)
    return {"highest_weight": list(rep.lambda0), "point": [_q(c) for c in x],
            "face": loc["face"], "canonical": loc["canonical"]}


def _ray(args, rs) -> Ray:
    rng = random.Random(args.seed)
    o = (_parse_vector(args.origin, rs.rank, "origin") if args.origin is not None
         else _random_vector(rng, rs.rank))
    d = (_parse_vector(args.direction, rs.rank, "direction") if args.direction is not None
         else _random_vector(rng, rs.rank, nonzero=True))
    if not any(d):
        raise InputError("ray direction must be nonzero")
    return Ray(o, d)


def cmd_limit(args, rs):
    rep = _rep(args, rs)
    ray = _ray(args, rs)
    p = ray_limit(rep, ray)
    loc = _located(rep, p.face, p.coords, args.guard)
    canon = loc["canonical"]
    return {"highest_weight": list(rep.lambda0),
            "origin": [_q(c) for c in ray.origin], "direction": [_q(c) for c in ray.direction],
            "face_id": canon["face_id"] if canon else None,
            "coords": canon["coords"] if canon else loc["coords"],
            "limit": loc,
            "classification": _classification(rep, p)}


def cmd_classify(args, rs):
    """Root-group classification at an interior point (``--point``) or at a ray limit."""
    rep = _rep(args, rs)
    if args.point is not None:
        if args.direction is not None or args.origin is not None:
            raise InputError("give either --point or --origin/--direction")
        p = BoundaryPoint.from_apartment(rs, _parse_vector(args.point, rs.rank, "point"))
    else:
        p = ray_limit(rep, _ray(args, rs))
    return {"highest_weight": list(rep.lambda0),
            "location": _located(rep, p.face, p.coords, args.guard),
            "parabolic_type": sorted(stratum_parabolic_type(rep, p.face)),
            "classification": _classification(rep, p)}


def cmd_compare(args, rs):
    if args.weight2 is None:
        raise InputError("compare needs --weight2")
    lam = (1,) * rs.rank if args.weight is None else _parse_vector(args.weight, rs.rank,
                                                                     "weight", True)
    mu = _parse_vector(args.weight2, rs.rank, "weight2", True)
    equal = same_compactification(rs, lam, mu)
    return {"weights": [list(lam), list(mu)], "equal": equal,
            "support_patterns": [sorted(support_pattern(rs, lam)), sorted(support_pattern(rs, mu))],
            "family_size": len(compactification_family(rs))}


def cmd_family(args, rs):
    fam = compactification_family(rs)
    return {"family_size": len(fam), "patterns": [_pattern(sp) for sp in fam]}


HANDLERS = {
    "roots": cmd_roots, "weights": cmd_weights, "admissible": cmd_admissible, "fan": cmd_fan,
    "face-of": cmd_face_of, "limit": cmd_limit, "classify": cmd_classify,
    "compare": cmd_compare, "family": cmd_family,
}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


_VECTOR_FLAGS = ("--weight", "--weight2", "--origin", "--direction", "--point")
_NEGATIVE = re.compile(r"-\d")


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--point -1,2`` as ``--point=-1,2`` so argparse does not read an option."""
    argv = list(argv)
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VECTOR_FLAGS and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str | None]:
    """Execute a command; returns ``(exit code, text, --out path)`` without writing."""
    out = None
    try:
        argv = _attach_negative_values(sys.argv[1:] if argv is None else argv)
        args = _parser().parse_args(argv)
        out = args.out
        try:
            rs = build_root_system(args.family, args.rank)
        except (ClassificationError, ValueError) as exc:
            raise InputError(str(exc)) from None
        if args.command == "render":
            return EXIT_OK, render_svg(_rep(args, rs), args.guard), out
        body = HANDLERS[args.command](args, rs)
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command,
               "system": _system(rs), **body}
        return EXIT_OK, dumps(doc), out
    except SizeLimitError as exc:
        return EXIT_GUARD, f"error: {exc}\n", None
    except (InputError, WeightError, FaithfulnessError, ClassificationError, RenderError,
            ValueError) as exc:
        return EXIT_INPUT, f"error: {exc}\n", None


def main(argv: Sequence[str] | None = None) -> int:
    code, text, out = run(argv)
    if code != EXIT_OK:
        sys.stderr.write(text)
        return code
    if out:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"error: cannot write {out}: {exc}\n")
            return EXIT_INPUT
    else:
        sys.stdout.buffer.write(text.encode("utf-8"))
        sys.stdout.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
