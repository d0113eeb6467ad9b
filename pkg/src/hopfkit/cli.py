"""Command line front end: hopfkit <command> [presentation.json] [flags]."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Dict, List, Optional, Tuple

from .cyclo import RootOfUnity
from .presentations import InvalidParams, Presentation, emit_rules

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2

# each command returns (payload, ok, text)
Result = Tuple[dict, bool, str]


class CliError(Exception):
    pass


def _jsonable(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def canonical_dumps(payload) -> str:
    return json.dumps(_jsonable(payload), sort_keys=True, indent=2, ensure_ascii=False)


def load_presentation(path: str) -> Presentation:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise CliError(f"malformed JSON in {path}: {e}")
    if isinstance(data, dict) and isinstance(data.get("presentation"), dict):
        data = data["presentation"]
    if not isinstance(data, dict):
        raise CliError(f"{path} does not hold a presentation object")
    try:
        return Presentation.from_json(data)
    except (KeyError, TypeError, ValueError) as e:
        raise CliError(f"invalid presentation in {path}: {e}")


class Context:
    def __init__(self, args):
        self.args = args
        self.cache_dir = args.cache_dir or os.environ.get("HOPFKIT_CACHE_DIR") or None
        self.conductor = args.conductor
        self._p: Optional[Presentation] = None
        self._h = None

    @property
    def p(self) -> Presentation:
        if self._p is None:
            if not getattr(self.args, "presentation", None):
                raise CliError("this command needs a presentation file")
            self._p = load_presentation(self.args.presentation)
        return self._p

    @property
    def h(self):
        if self._h is None:
            from .hopf import build_cached
            self._h = build_cached(self.p, self.cache_dir)
        return self._h


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_build(ctx: Context) -> Result:
    h = ctx.h
    ok = h.dim == ctx.p.dim
    payload = h.to_json() if ctx.args.json else {"dim": h.dim}
    return payload, ok, f"{ctx.p.name()}: {h.dim}-dimensional (expected {ctx.p.dim})"


def cmd_verify_axioms(ctx: Context) -> Result:
    from .hopf import verify_hopf_axioms
    rep = verify_hopf_axioms(ctx.h, stop_early=False)
    payload = dict(rep.to_json(), dim=ctx.h.dim)
    if rep.passed:
        text = f"{ctx.h.dim}-dimensional, all axioms pass"
    else:
        bad = ", ".join(f"{k}: {w}" for k, w in sorted(rep.witnesses.items()))
        text = f"{ctx.h.dim}-dimensional, axiom failure ({bad})"
    return payload, rep.passed, text


def cmd_integrals(ctx: Context) -> Result:
    from .invariants import IntegralDimensionAnomaly, integrals
    try:
        data = integrals(ctx.h)
    except IntegralDimensionAnomaly as e:
        return {"error": str(e)}, False, f"integral space anomaly: {e}"
    payload = data.to_json(ctx.h)
    checks = [v for v in (data.formula_left, data.formula_two_sided, data.psi_formula) if v is not None]
    text = (f"left integral {payload['lambda_l']}\nright integral {payload['lambda_r']}\n"
            f"unimodular: {data.unimodular}")
    return payload, all(checks), text


def cmd_characters(ctx: Context) -> Result:
    from .invariants import characters, expected_character_count
    chars = characters(ctx.h)
    p = ctx.p
    payload = {"count": len(chars), "characters": [c.to_json() for c in chars]}
    ok = True
    if p.family in ("H", "HA"):
        expected = expected_character_count(p.N, p.nu, p.n, not p.alpha)
        payload["expected"] = expected
        ok = expected == len(chars)
    lines = [f"{len(chars)} characters"]
    for c in chars:
        lines.append("  " + ", ".join(f"{g} -> {v}" for g, v in sorted(c.images.items())))
    return payload, ok, "\n".join(lines)


def cmd_skew_primitives(ctx: Context) -> Result:
    from .invariants import skew_primitives
    sp = skew_primitives(ctx.h, ctx.args.g, ctx.args.h)
    payload = {"g": ctx.args.g, "h": ctx.args.h, "dim": sp.dim,
               "nontrivial": [ctx.h.element_str(v) for v in sp.complement]}
    text = f"P_(a^{ctx.args.g}, a^{ctx.args.h}) has dimension {sp.dim}"
    if sp.complement:
        text += "; nontrivial part spanned by " + ", ".join(payload["nontrivial"])
    return payload, True, text


def cmd_coradical_h1(ctx: Context) -> Result:
    from .invariants import coradical_h1
    dim, _ = coradical_h1(ctx.h)
    return {"dim": dim}, True, f"H_1 has dimension {dim}"


def cmd_dualize(ctx: Context) -> Result:
    from .dual import dualize, pairing_compatibility
    from .hopf import verify_hopf_axioms
    hd = dualize(ctx.h)
    ax = verify_hopf_axioms(hd)
    pair = pairing_compatibility(ctx.h, hd)
    payload = {"axioms": ax.to_json(), "pairing_compatible": pair}
    if ctx.args.json:
        payload["structure"] = hd.to_json()
    ok = ax.passed and pair
    return payload, ok, f"dual of dim {hd.dim}: axioms {'pass' if ax.passed else 'fail'}, pairing {'ok' if pair else 'broken'}"


def cmd_dual_generators(ctx: Context) -> Result:
    from .dual import dual_generators
    dg = dual_generators(ctx.h, _omega(ctx))
    payload = dg.to_json()
    failed = [k for k, v in dg.checks.items() if not v]
    text = f"A, X built (mu = {dg.mu}); " + ("all checks pass" if not failed else "failed: " + ", ".join(failed))
    return payload, dg.passed, text


def cmd_self_dual(ctx: Context) -> Result:
    from .dual import self_duality_search
    res = self_duality_search(ctx.h)
    verdict = "self-dual" if res.self_dual else "not self-dual"
    return res.to_json(), True, f"{verdict} ({res.tried} candidate maps tried)"


def cmd_dual_pointed(ctx: Context) -> Result:
    from .reps import dual_pointedness
    rep = dual_pointedness(ctx.h, _omega(ctx, required=False))
    payload = rep.to_json()
    return payload, True, f"dual is {payload['verdict'].replace('_', ' ')}"


def cmd_reps(ctx: Context) -> Result:
    from .reps import is_irreducible, make_V_omega, matrix_coefficients
    om = _omega(ctx)
    m = make_V_omega(ctx.h, om, ctx.conductor)
    irr = is_irreducible(m)
    mc = matrix_coefficients(ctx.h, m)
    payload = {"omega": om.to_json(), "module_dim": m.dim, "beta": m.beta.to_json(),
               "irreducible": irr.irreducible, "subcoalgebra_dim": mc.dim,
               "subcoalgebra": mc.subcoalgebra, "simple": mc.simple}
    if irr.witness:
        payload["witness"] = [str(v) for v in irr.witness]
    ok = irr.irreducible and mc.simple
    return payload, ok, (f"V_omega of dim {m.dim}: irreducible {irr.irreducible}; "
                         f"matrix coefficients span a {mc.dim}-dim subcoalgebra (simple {mc.simple})")


def _convention(ctx: Context):
    from .doubleqt import CONVENTIONS
    name = ctx.args.convention
    if name not in CONVENTIONS:
        raise CliError(f"unknown convention {name!r}; choose from {sorted(CONVENTIONS)}")
    return CONVENTIONS[name]


def cmd_double(ctx: Context) -> Result:
    from .doubleqt import NoConventionWorks, build_double, canonical_R, double_embeddings, verify_qt
    from .hopf import verify_hopf_axioms
    dd = build_double(ctx.h, _convention(ctx))
    ax = verify_hopf_axioms(dd, stop_early=False)
    emb = double_embeddings(dd)
    payload = {"dim": dd.dim, "axioms": ax.to_json(), "embeddings": emb, "convention": dd.convention.to_json()}
    try:
        R, orders = canonical_R(dd)
        qt = verify_qt(dd, R)
        payload.update({"R_orders": orders, "qt": qt.to_json()})
        qt_ok = qt.passed
    except NoConventionWorks as e:
        payload["qt"] = {"passed": False, "error": str(e)}
        qt_ok = False
    emb_ok = all(v for v in emb.values() if isinstance(v, bool))
    ok = ax.passed and qt_ok and emb_ok
    return payload, ok, (f"D(H) of dim {dd.dim}: axioms {'pass' if ax.passed else 'fail'}, "
                         f"canonical R {'is' if qt_ok else 'is not'} quasitriangular")


def cmd_double_relation(ctx: Context) -> Result:
    from .doubleqt import double_relation_check
    res = double_relation_check(ctx.h, _omega(ctx, required=False), _convention(ctx))
    text = f"relation {'holds' if res['holds'] else 'fails'}\n  lhs = {res['lhs']}\n  rhs = {res['rhs']}"
    return res, res["holds"], text


def cmd_qt_search(ctx: Context) -> Result:
    from .doubleqt import qt_search_group_ansatz
    res = qt_search_group_ansatz(ctx.h, _omega(ctx, required=False))
    return res.to_json(), True, f"passing l: {res.passing}; screen: {res.screen}"


def cmd_minimality(ctx: Context) -> Result:
    from .doubleqt import build_double, canonical_R, minimality_check, pushforward_to_U
    p = ctx.p
    if p.family == "U":
        push = pushforward_to_U(_base_for_U(p), ctx.h)
        if not push["found"]:
            return {"found": False}, False, "no pushforward R found"
        rep = push["minimal"]
        source = "pushforward"
    else:
        dd = build_double(ctx.h, _convention(ctx))
        R, _ = canonical_R(dd)
        rep = minimality_check(dd, R)
        source = "canonical R of the double"
    payload = dict(rep.to_json(), source=source)
    return payload, rep.minimal, f"{source}: minimal {rep.minimal} (generated dim {rep.generated_dim})"


def _base_for_U(p: Presentation):
    from .hopf import build
    from .presentations import make_presentation
    return build(make_presentation("H", n=p.n, N=p.N, nu=p.nu, q=p.q))


def cmd_pushforward(ctx: Context) -> Result:
    from .doubleqt import pushforward_to_U
    p = ctx.p
    if p.family != "U":
        raise CliError("pushforward-u needs a U presentation")
    push = pushforward_to_U(_base_for_U(p), ctx.h, _convention(ctx))
    if not push["found"]:
        return {"found": False, "attempts": push["attempts"]}, False, "no surjection D(B) -> U found"
    payload = {"found": True, "m": push["m"], "beta": push["beta"].to_json(), "beta_free": push["beta_free"],
               "map": push["map"].to_json(), "qt": push["qt"].to_json(), "minimal": push["minimal"].to_json(),
               "attempts": push["attempts"]}
    ok = push["qt"].passed and push["minimal"].minimal
    return payload, ok, (f"pi: D(B) -> U with m = {push['m']}, beta = {push['beta']}; "
                         f"QT {push['qt'].passed}, minimal {push['minimal'].minimal}")


def cmd_kaplansky(ctx: Context) -> Result:
    from .atlas import kaplansky_generate
    a = ctx.args
    entries = kaplansky_generate(a.N, a.n, a.count, nu=a.nu, cache_dir=ctx.cache_dir, threads=a.threads)
    invs = [e.invariant.to_json() for e in entries]
    distinct = len({json.dumps(v, sort_keys=True) for v in invs}) == len(invs)
    verified = all(e.summary.get("axioms") and e.summary.get("unimodular") for e in entries)
    ok = distinct and verified
    lines = [f"{len(entries)} entries, pairwise distinct invariants: {distinct}"]
    for e in entries:
        lines.append(f"  {e.presentation.name()}  dim {e.dim}  invariant {e.invariant}  "
                     f"axioms {e.summary.get('axioms')}  unimodular {e.summary.get('unimodular')}")
    return [e.to_json() for e in entries], ok, "\n".join(lines)


def cmd_iso(ctx: Context) -> Result:
    from .atlas import iso_construct, rescaling_iso
    other = load_presentation(ctx.args.other)
    cond = ctx.conductor or 1
    if ctx.p.family == "HA":
        res = rescaling_iso(ctx.p, other, conductor=cond)
    else:
        res = iso_construct(ctx.p, other, conductor=cond)
    ok = res.kind != "isomorphic" or (res.map is not None and res.map.accepted)
    return res.to_json(), ok, f"{res.kind} ({res.provenance})"


def cmd_confluence(ctx: Context) -> Result:
    rs = emit_rules(ctx.p)
    rep = rs.check_confluence()
    words = len(rs.irreducible_words())
    payload = dict(rep.to_json(), irreducible_words=words, expected_dim=ctx.p.dim)
    ok = rep.confluent and words == ctx.p.dim
    text = (f"{len(rep.ambiguities)} overlap ambiguities, {len(rep.unresolved)} unresolved; "
            f"{words} irreducible words (expected {ctx.p.dim})")
    return payload, ok, text


def cmd_report(ctx: Context) -> Result:
    from .atlas import verify_entry
    rep = verify_entry(ctx.p, ctx.cache_dir)
    ok = rep["axioms"] and rep["dim"] == rep["dim_expected"]
    return rep, ok, f"{ctx.p.name()}: axioms {rep['axioms']}, dim {rep['dim']}"


def _omega(ctx: Context, required: bool = True) -> Optional[RootOfUnity]:
    e = getattr(ctx.args, "omega", None)
    if e is None:
        return RootOfUnity(ctx.p.N, 1) if required else None
    om = RootOfUnity(ctx.p.N, e)
    if om.order != ctx.p.N:
        raise CliError(f"zeta_{ctx.p.N}^{e} is not a primitive {ctx.p.N}th root of unity")
    return om


COMMANDS: Dict[str, Tuple[Callable[[Context], Result], str]] = {
    "build": (cmd_build, "build structure constants"),
    "verify-axioms": (cmd_verify_axioms, "check every Hopf algebra axiom on basis elements"),
    "integrals": (cmd_integrals, "left and right integrals and the distinguished grouplike"),
    "characters": (cmd_characters, "algebra maps H -> k"),
    "skew-primitives": (cmd_skew_primitives, "the space P_(a^g, a^h)"),
    "coradical-h1": (cmd_coradical_h1, "dimension of the first coradical term"),
    "dualize": (cmd_dualize, "dual Hopf algebra and pairing check"),
    "dual-generators": (cmd_dual_generators, "generators A, X of the dual"),
    "self-dual-check": (cmd_self_dual, "search for an isomorphism H -> H*"),
    "dual-pointed": (cmd_dual_pointed, "is the dual pointed"),
    "reps": (cmd_reps, "the module V_omega and its matrix coefficients"),
    "double": (cmd_double, "Drinfeld double and its canonical R"),
    "double-relation-check": (cmd_double_relation, "the (e#x)(X#1) relation in the double"),
    "qt-search": (cmd_qt_search, "group-ansatz quasitriangular structures"),
    "minimality": (cmd_minimality, "is the R-matrix minimal"),
    "pushforward-u": (cmd_pushforward, "push the double's R to U_(N,nu,omega)"),
    "kaplansky": (cmd_kaplansky, "pairwise non-isomorphic algebras of one dimension"),
    "iso": (cmd_iso, "isomorphism between two presentations"),
    "confluence": (cmd_confluence, "overlap ambiguities of the rewriting system"),
    "report": (cmd_report, "family-appropriate verification suite"),
}

NO_PRESENTATION = {"kaplansky"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="canonical JSON output")
    common.add_argument("--cache-dir", default=None, help="structure-constant cache (env HOPFKIT_CACHE_DIR)")
    common.add_argument("--conductor", type=int, default=None, help="enlarge the working cyclotomic field")
    common.add_argument("--threads", type=int, default=1, help="worker processes where supported")

    parser = argparse.ArgumentParser(prog="hopfkit", description="Exact computations with pointed Hopf algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if name not in NO_PRESENTATION:
            sp.add_argument("presentation", help="presentation JSON file")
        if name == "skew-primitives":
            sp.add_argument("--g", type=int, required=True)
            sp.add_argument("--h", type=int, required=True)
        if name in ("reps", "dual-generators", "dual-pointed", "double-relation-check", "qt-search"):
            sp.add_argument("--omega", type=int, default=None, help="omega = zeta_N^E")
        if name in ("double", "double-relation-check", "minimality", "pushforward-u"):
            sp.add_argument("--convention", default="dual-op")
        if name == "kaplansky":
            sp.add_argument("--N", type=int, required=True)
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--count", type=int, required=True)
            sp.add_argument("--nu", type=int, default=None)
        if name == "iso":
            sp.add_argument("--other", required=True, help="second presentation JSON file")
    return parser


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    from .dual import NotApplicable
    from .reps import RootUnavailable, UnsupportedShape

    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    if args.threads < 1:
        print("error: --threads must be positive", file=err)
        return EXIT_INVALID
    if args.conductor is not None and args.conductor < 1:
        print("error: --conductor must be positive", file=err)
        return EXIT_INVALID
    ctx = Context(args)
    fn = COMMANDS[args.command][0]
    try:
        payload, ok, text = fn(ctx)
    except (CliError, InvalidParams, NotApplicable, RootUnavailable, UnsupportedShape) as e:
        print(f"error: {e}", file=err)
        return EXIT_INVALID
    if args.json:
        print(canonical_dumps(payload), file=out)
    else:
        print(text, file=out)
    if not ok and not args.json:
        print("FAILED", file=err)
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
