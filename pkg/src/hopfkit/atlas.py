"""Family catalog: Kaplansky counterexamples, the alpha beta / gamma^n invariant, isomorphisms, reports."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .cyclo import FieldElement, RootOfUnity, nth_root_in_field, zeta
from .dual import HopfMapResult, NotApplicable, check_hopf_map, dual_exact_sequence_check, \
    exact_sequence_check, self_duality_search, u_selfdual_cop_check
from .hopf import HopfData, build, build_cached, verify_hopf_axioms, vscale
from .invariants import characters, coradical_h1, grouplike_census, integrals, expected_character_count, skew_primitives
from .presentations import InvalidParams, Presentation, make_presentation

__all__ = [
    "InvariantValue",
    "CatalogEntry",
    "IsoResult",
    "invariant",
    "kaplansky_nu",
    "kaplansky_generate",
    "iso_construct",
    "rescaling_iso",
    "verify_entry",
]

ZERO_GAMMA = "ZeroGamma"


@dataclass(frozen=True)
class InvariantValue:
    value: Optional[FieldElement]

    @property
    def zero_gamma(self) -> bool:
        return self.value is None

    def to_json(self):
        return ZERO_GAMMA if self.value is None else self.value.to_json()

    def __str__(self) -> str:
        return ZERO_GAMMA if self.value is None else str(self.value)


def invariant(p: Presentation) -> InvariantValue:
    """alpha beta / gamma^n, or ZeroGamma."""
    if p.family not in ("U", "UA"):
        raise NotApplicable("the invariant is defined for the U families")
    if not p.gamma:
        return InvariantValue(None)
    return InvariantValue(p.alpha * p.beta / p.gamma ** p.n)


@dataclass
class CatalogEntry:
    presentation: Presentation
    dim: int
    summary: Dict[str, object]
    invariant: InvariantValue
    hash: str

    def sort_key(self):
        v = self.invariant.value
        if v is None:
            inv = (2, 0, "")
        elif v.is_rational():
            inv = (0, v.to_fraction(), "")
        else:
            inv = (1, 0, str(v))
        return (self.dim, inv, self.hash)

    def to_json(self) -> dict:
        return {"presentation": self.presentation.to_json(), "dim": self.dim,
                "summary": dict(sorted(self.summary.items())), "invariant": self.invariant.to_json(),
                "hash": self.hash}


def kaplansky_nu(N: int, n: int) -> int:
    for nu in range(1, N):
        if math.gcd(n, nu) == 1 and (nu * n) % N:
            return nu
    raise InvalidParams(f"no nu with gcd(n, nu) = 1 and N not dividing nu n for N={N}, n={n}")


def _summary(h: HopfData) -> Dict[str, object]:
    ax = verify_hopf_axioms(h)
    integ = integrals(h)
    return {
        "axioms": ax.passed,
        "unimodular": integ.unimodular,
        "dual_grouplikes": len(characters(h)),
        "h1_dim": coradical_h1(h)[0],
    }


def _kaplansky_entry(args) -> CatalogEntry:
    N, n, nu, t, verify, cache_dir = args
    p = make_presentation("UA", n=n, N=N, nu=nu, q=RootOfUnity(n, 1), alpha=t, beta=1, gamma=1)
    if verify:
        h = build_cached(p, cache_dir)
        return CatalogEntry(p, h.dim, _summary(h), invariant(p), p.content_hash())
    return CatalogEntry(p, p.dim, {}, invariant(p), p.content_hash())


def kaplansky_generate(N: int, n: int, count: int, nu: Optional[int] = None, verify: bool = True,
                       cache_dir: Optional[str] = None, threads: int = 1) -> List[CatalogEntry]:
    """count pairwise non-isomorphic U_{alpha=t, beta=1, gamma=1}, t = 1..count, of dim N n^2."""
    if not (2 < n < N) or N % n:
        raise InvalidParams("needs 2 < n < N with n | N")
    if count < 2:
        raise InvalidParams("count must be at least 2")
    if nu is None:
        nu = kaplansky_nu(N, n)
    elif math.gcd(n, nu) != 1 or (nu * n) % N == 0:
        raise InvalidParams("nu needs gcd(n, nu) = 1 and N not dividing nu n")
    jobs = [(N, n, nu, t, verify, cache_dir) for t in range(1, count + 1)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            entries = list(pool.map(_kaplansky_entry, jobs))
    else:
        entries = [_kaplansky_entry(j) for j in jobs]
    entries.sort(key=CatalogEntry.sort_key)
    return entries


# ---------------------------------------------------------------------------
# isomorphisms
# ---------------------------------------------------------------------------

@dataclass
class IsoResult:
    kind: str  # "isomorphic", "distinct", "inconclusive"
    provenance: str
    map: Optional[HopfMapResult] = None
    images: Dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, "provenance": self.provenance,
                "map": self.map.to_json() if self.map else None, "images": dict(self.images)}


def iso_construct(p1: Presentation, p2: Presentation, h1: Optional[HopfData] = None,
                  h2: Optional[HopfData] = None, conductor: int = 1) -> IsoResult:
    """Decide U_{alpha,beta,gamma} vs U_{alpha',beta',gamma'} for equal (n, N, nu, q).

    conductor enlarges the field searched for the nth roots of alpha/alpha', beta/beta'.
    """
    for p in (p1, p2):
        if p.family != "UA":
            raise InvalidParams("iso_construct compares UA presentations")
    if (p1.n, p1.N, p1.nu) != (p2.n, p2.N, p2.nu) or p1.q != p2.q:
        raise InvalidParams("presentations differ in (n, N, nu, q)")
    zero_case = not p1.gamma and not p2.gamma
    if not zero_case and (2 * p1.nu) % p1.N == 0:
        raise InvalidParams("N divides 2 nu: no isomorphism criterion is available")
    if not zero_case and (not p1.gamma or not p2.gamma):
        # one gamma zero and one not: the invariants are different kinds
        return IsoResult("distinct", "paper-backed (invariant alpha beta / gamma^n vs ZeroGamma)")
    n = p1.n
    if not zero_case:
        i1, i2 = invariant(p1), invariant(p2)
        if i1.value != i2.value:
            return IsoResult("distinct", f"paper-backed (invariants {i1} != {i2})")
    if not all(s for s in (p1.alpha, p1.beta, p2.alpha, p2.beta)):
        return IsoResult("inconclusive", "only nonzero alpha, beta are handled")
    M = math.lcm(p1.conductor, p2.conductor, conductor)
    c0 = nth_root_in_field(p1.alpha / p2.alpha, n, M)
    d0 = nth_root_in_field(p1.beta / p2.beta, n, M)
    if c0 is None or d0 is None:
        return IsoResult("inconclusive", f"nth roots of the scalar ratios are not available over Q(zeta_{M})")
    h1 = h1 or build(p1)
    h2 = h2 or build(p2)
    roots = [zeta(n, k) for k in range(n)]
    for u in roots:
        for v in roots:
            c, d = c0 * u, d0 * v
            if not zero_case and c * d != p1.gamma / p2.gamma:
                continue
            images = {"a": h2.gen("a"), "x": vscale(h2.gen("x"), c), "y": vscale(h2.gen("y"), d)}
            f = check_hopf_map(h1, h2, images)
            if f.accepted and f.bijective:
                return IsoResult("isomorphic", "constructed and verified", f,
                                 {"a": "a", "x": f"({c})*x", "y": f"({d})*y"})
    return IsoResult("inconclusive", "no scaled generator assignment was accepted")


def rescaling_iso(p1: Presentation, p2: Presentation, conductor: int = 1) -> IsoResult:
    """HA_alpha -> HA_beta with a -> a, x -> (alpha/beta)^{1/n} x."""
    if p1.family != "HA" or p2.family != "HA" or not p1.alpha or not p2.alpha:
        raise InvalidParams("rescaling compares HA presentations with nonzero alpha")
    M = math.lcm(p1.conductor, p2.conductor, conductor)
    c = nth_root_in_field(p1.alpha / p2.alpha, p1.n, M)
    if c is None:
        return IsoResult("inconclusive", f"(alpha/beta)^(1/n) not available over Q(zeta_{M})")
    h1, h2 = build(p1), build(p2)
    f = check_hopf_map(h1, h2, {"a": h2.gen("a"), "x": vscale(h2.gen("x"), c)})
    kind = "isomorphic" if f.accepted and f.bijective else "inconclusive"
    return IsoResult(kind, "constructed and verified", f, {"a": "a", "x": f"({c})*x"})


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def verify_entry(e, cache_dir: Optional[str] = None, heavy: bool = True) -> dict:
    """Family-appropriate suite for one presentation (or CatalogEntry)."""
    from .doubleqt import pushforward_to_U, qt_search_group_ansatz
    from .reps import dual_pointedness

    p = e.presentation if isinstance(e, CatalogEntry) else e
    h = build_cached(p, cache_dir)
    rep: Dict[str, object] = {"presentation": p.to_json(), "hash": p.content_hash()}
    ax = verify_hopf_axioms(h)
    rep["axioms"] = ax.passed
    rep["dim"] = h.dim
    rep["dim_expected"] = p.dim
    if p.r > 1:
        rep["P_nu_1_dim"] = skew_primitives(h, p.nu, 0).dim
        other = next(v for v in range(p.N) if v != p.nu % p.N)
        rep["P_other_1_dim"] = skew_primitives(h, other, 0).dim
    rep["grouplikes"] = grouplike_census(h, trials=10)
    rep["h1_dim"] = coradical_h1(h)[0]
    integ = integrals(h)
    rep["integrals"] = integ.to_json(h)
    chars = characters(h)
    rep["characters"] = [c.to_json() for c in chars]
    if p.family in ("H", "HA"):
        rep["expected_character_count"] = expected_character_count(p.N, p.nu, p.n, not p.alpha)
        rep["characters_match_expected"] = len(chars) == rep["expected_character_count"]
        rep["dual_pointedness"] = dual_pointedness(h).to_json()
        if p.alpha:
            rep["exact_sequence"] = exact_sequence_check(h)
            rep["dual_exact_sequence"] = dual_exact_sequence_check(h)
        if heavy and h.dim <= 64:
            rep["self_dual"] = self_duality_search(h).to_json()
    else:
        rep["invariant"] = invariant(p).to_json()
        if p.family == "U" and p.N == 2 * p.nu and p.nu % 2 == 1:
            rep["u_selfdual_cop"] = u_selfdual_cop_check(h).to_json()
    qt = qt_search_group_ansatz(h)
    rep["qt_search"] = qt.to_json()
    if heavy and p.family == "U" and p.N * p.r <= 8:
        B = build(make_presentation("H", n=p.n, N=p.N, nu=p.nu, q=p.q))
        push = pushforward_to_U(B, h)
        rep["pushforward"] = {"found": push["found"]}
        if push["found"]:
            rep["pushforward"].update({"m": push["m"], "beta": push["beta"].to_json(),
                                       "qt": push["qt"].passed, "minimal": push["minimal"].minimal})
    return rep
