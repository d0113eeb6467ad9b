"""Grouplikes, characters, skew primitives, H_1, integrals and related checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .cyclo import (ONE, ZERO, FieldElement, RootOfUnity, Subspace, linear_kernel,
                    proportional, zeta)
from .hopf import HopfData, Tensor, Vector, vadd, vscale

__all__ = [
    "Character",
    "SkewPrimitiveSpace",
    "IntegralData",
    "IntegralDimensionAnomaly",
    "characters",
    "is_character",
    "is_grouplike",
    "grouplike_census",
    "skew_primitives",
    "skew_primitive_space",
    "coradical_h1",
    "integrals",
    "lemma13_check",
    "expected_character_count",
    "yx_commutation_check",
    "canonical_scale",
]


class IntegralDimensionAnomaly(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# characters and grouplikes
# ---------------------------------------------------------------------------

@dataclass
class Character:
    """An algebra map H -> k, stored by its values on the basis."""

    images: Dict[str, FieldElement]
    values: List[FieldElement]
    exponent: Optional[int] = None  # a -> omega^exponent

    def as_vector(self) -> Vector:
        return {k: c for k, c in enumerate(self.values) if c}

    def __call__(self, v: Vector) -> FieldElement:
        out = ZERO
        for k, c in v.items():
            if self.values[k]:
                out = out + c * self.values[k]
        return out

    def to_json(self) -> dict:
        return {"exponent": self.exponent,
                "images": {g: c.to_json() for g, c in sorted(self.images.items())}}


def is_character(h: HopfData, values: List[FieldElement]) -> bool:
    """phi(e_i e_j) = phi(e_i) phi(e_j) on all basis pairs and phi(1) = 1."""
    if sum((c * values[k] for k, c in h.unit.items()), ZERO) != 1:
        return False
    for i in range(h.dim):
        vi = values[i]
        for j in range(h.dim):
            prod = ZERO
            for k, c in h.mult[i][j].items():
                if values[k]:
                    prod = prod + c * values[k]
            if prod != vi * values[j]:
                return False
    return True


def _functional_from_images(h: HopfData, images: Dict[str, FieldElement]) -> List[FieldElement]:
    vals = []
    for w in h.words:
        v = ONE
        for c in w:
            v = v * images[c]
        vals.append(v)
    return vals


def characters(h: HopfData, omega: Optional[RootOfUnity] = None) -> List[Character]:
    """All algebra maps H -> k for a family member.

    a must go to an Nth root of unity omega^i; x and y must go to 0 (xa = q ax
    forces it when q != 1, and x = 0 in H when r = 1).  Each candidate is
    accepted only if it is multiplicative on every basis pair.
    """
    p = h.presentation
    om = omega or RootOfUnity(p.N, 1)
    out = []
    for i in range(p.N):
        images = {"a": p.root(om, i), "x": ZERO, "y": ZERO}
        vals = _functional_from_images(h, images)
        if is_character(h, vals):
            out.append(Character({g: images[g] for g in h.generators}, vals, i))
    return out


def expected_character_count(N: int, nu: int, n: int, alpha_zero: bool) -> int:
    if alpha_zero:
        return N
    return sum(1 for i in range(N) if (nu * n * i) % N == 0)


def is_grouplike(h: HopfData, g: Vector) -> bool:
    if h.eps(g) != 1:
        return False
    gg: Tensor = {}
    for i, a in g.items():
        for j, b in g.items():
            gg[i, j] = a * b
    return h.comultiply(g) == gg


def grouplike_census(h: HopfData, trials: int = 20, seed: int = 0) -> dict:
    """Verify each a^i is grouplike and run a randomized search for others.

    The search intersects random 2-dimensional slices s*u + t*v with the
    grouplike equations; a linearisation in (s, t, s^2, st, t^2) gives the
    candidates, which are then checked exactly.  Finding nothing is evidence,
    not proof; G(H) = (a) itself rests on the generator lemma.
    """
    p = h.presentation
    powers = [h.index(i) for i in range(p.N)]
    known_ok = all(is_grouplike(h, {k: ONE}) for k in powers)
    distinct = len(set(powers)) == p.N
    rng = random.Random(seed)
    extra = []
    known = set(powers)
    for _ in range(trials):
        u = {k: FieldElement.rational(rng.randint(-3, 3)) for k in rng.sample(range(h.dim), min(3, h.dim))}
        base = rng.choice(powers)
        # slices through a known grouplike make the search non-vacuous
        slices = [({base: ONE}, u)]
        for g0, v in slices:
            for cand in _grouplikes_in_slice(h, g0, v):
                if set(cand) - known or len(cand) != 1:
                    if is_grouplike(h, cand):
                        extra.append(cand)
    return {
        "a_powers_grouplike": known_ok and distinct,
        "order": p.N,
        "extra_found": len(extra),
        "trials": trials,
        "assumed": "G(H) = (a) by the generator lemma",
    }


def _grouplikes_in_slice(h: HopfData, u: Vector, v: Vector) -> List[Vector]:
    du, dv = h.comultiply(u), h.comultiply(v)

    def outer(x, y):
        return {(i, j): a * b for i, a in x.items() for j, b in y.items()}

    uu, uv, vu, vv = outer(u, u), outer(u, v), outer(v, u), outer(v, v)
    cross = vadd(dict(uv), vu)
    # unknowns m = (s, t, s^2, st, t^2); equations Delta(g) - g (x) g = 0, eps(g) = 1
    cols = [du, dv, vscale(uu, -1), vscale(cross, -1), vscale(vv, -1)]
    images = [dict(c) for c in cols]
    eu, ev = h.eps(u), h.eps(v)
    images[0]["eps"] = eu
    images[1]["eps"] = ev
    # homogenise eps(g) = 1 with a sixth unknown fixed to -1
    images.append({"eps": ONE})
    ker = linear_kernel(images, 6)
    out = []
    for vec in ker:
        if 5 not in vec:
            continue
        z = vec[5]
        s = vec.get(0, ZERO) / -z
        t = vec.get(1, ZERO) / -z
        g = vadd(vscale(u, s), v, t)
        if g:
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# skew primitives and H_1
# ---------------------------------------------------------------------------

@dataclass
class SkewPrimitiveSpace:
    g: Vector
    h: Vector
    basis: List[Vector]
    trivial_part: List[Vector]
    complement: List[Vector] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)


def skew_primitive_space(H: HopfData, g: Vector, hh: Vector) -> SkewPrimitiveSpace:
    """Kernel of z -> Delta(z) - z (x) g - hh (x) z."""
    images = []
    for k in range(H.dim):
        img = dict(H.comult[k])
        for j, c in g.items():
            vadd(img, {(k, j): c}, -ONE)
        for j, c in hh.items():
            vadd(img, {(j, k): c}, -ONE)
        images.append(img)
    basis = linear_kernel(images, H.dim)
    triv = vadd(dict(g), hh, -ONE)
    trivial = [triv] if triv else []
    space = Subspace()
    for t in trivial:
        space.add(t)
    complement = [b for b in basis if space.add(b)]
    return SkewPrimitiveSpace(g, hh, basis, trivial, complement)


def skew_primitives(h: HopfData, g: int, hh: int) -> SkewPrimitiveSpace:
    """P_{a^g, a^hh}(H)."""
    return skew_primitive_space(h, {h.index(g): ONE}, {h.index(hh): ONE})


def coradical_h1(h: HopfData, exhaustive: bool = False) -> Tuple[int, List[Vector]]:
    """dim and a basis of H_1 = kG(H) + sum over (g, h) of P'_{g,h}, G(H) = (a).

    Left multiplication by a^j maps P_{a^i,1} onto P_{a^{i+j},a^j}, so by
    default only the spaces P_{a^i,1} are solved for and the rest are
    translated; exhaustive=True solves every pair directly instead.
    """
    N = h.presentation.N
    basis: List[Vector] = [{h.index(i): ONE} for i in range(N)]
    base_spaces = {}
    if not exhaustive:
        for i in range(N):
            base_spaces[i] = skew_primitives(h, i, 0).complement
    for gi in range(N):
        for hi in range(N):
            if exhaustive:
                comp = skew_primitives(h, gi, hi).complement
            else:
                shift = {h.index(hi): ONE}
                comp = [h.multiply(shift, v) for v in base_spaces[(gi - hi) % N]]
            basis.extend(comp)
    space = Subspace()
    indep = [v for v in basis if space.add(v)]
    return len(indep), indep


# ---------------------------------------------------------------------------
# integrals
# ---------------------------------------------------------------------------

def canonical_scale(v: Vector) -> Vector:
    """Scale so the coefficient of the smallest basis index is 1."""
    if not v:
        return v
    c = v[min(v)]
    return {k: x / c for k, x in v.items()}


@dataclass
class IntegralData:
    left_basis: List[Vector]
    right_basis: List[Vector]
    lambda_l: Vector
    lambda_r: Vector
    psi: Optional[Character]
    unimodular: bool
    formula_left: Optional[bool] = None
    formula_two_sided: Optional[bool] = None
    psi_formula: Optional[bool] = None

    def to_json(self, h: HopfData) -> dict:
        return {
            "lambda_l": h.element_str(self.lambda_l),
            "lambda_r": h.element_str(self.lambda_r),
            "unimodular": self.unimodular,
            "psi": self.psi.to_json() if self.psi else None,
            "formula_left": self.formula_left,
            "formula_two_sided": self.formula_two_sided,
            "psi_formula": self.psi_formula,
        }


def _integral_space(h: HopfData, side: str) -> List[Vector]:
    gens = [(name, v) for name, v in sorted(h.generators.items()) if v]
    images = []
    for k in range(h.dim):
        img: Dict[Tuple[int, int], FieldElement] = {}
        for gi, (_, g) in enumerate(gens):
            prod = h.multiply(g, {k: ONE}) if side == "left" else h.multiply({k: ONE}, g)
            prod = vadd(prod, {k: h.eps(g)}, -ONE)
            for j, c in prod.items():
                img[gi, j] = c
        images.append(img)
    return linear_kernel(images, h.dim)


def integrals(h: HopfData) -> IntegralData:
    left = _integral_space(h, "left")
    right = _integral_space(h, "right")
    if len(left) != 1 or len(right) != 1:
        raise IntegralDimensionAnomaly(f"integral spaces of dims {len(left)}, {len(right)}")
    lam_l, lam_r = canonical_scale(left[0]), canonical_scale(right[0])
    unimodular = proportional(lam_l, lam_r) is not None
    # distinguished grouplike: lambda_l * g = psi(g) lambda_l
    psi = None
    if h.words is not None:
        images = {}
        for name, g in h.generators.items():
            if not g:
                images[name] = ZERO
                continue
            prod = h.multiply(lam_l, g)
            c = ZERO if not prod else proportional(prod, lam_l)
            if c is None:
                raise IntegralDimensionAnomaly(f"lambda_l * {name} is not a multiple of lambda_l")
            images[name] = c
        vals = _functional_from_images(h, images)
        for k in range(h.dim):
            if h.multiply(lam_l, {k: ONE}) != vscale(lam_l, vals[k]):
                raise IntegralDimensionAnomaly(f"psi fails on basis element {h.labels[k]}")
        psi = Character(images, vals)
    data = IntegralData(left, right, lam_l, lam_r, psi, unimodular)
    p = h.presentation
    if p is not None:
        avg = {h.index(i): FieldElement.rational(Fraction(1, p.N)) for i in range(p.N)}
        xr = h.power(h.gen("x"), p.r - 1) if p.r > 1 else h.one()
        formula = h.multiply(avg, xr)
        if p.has_y:
            yr = h.power(h.gen("y"), p.r - 1) if p.r > 1 else h.one()
            formula = h.multiply(formula, yr)
            data.formula_two_sided = (proportional(lam_l, formula) is not None
                                      and proportional(lam_r, formula) is not None)
        else:
            data.formula_left = proportional(lam_l, formula) is not None
        if psi is not None:
            want_a = p.qpow(p.r - 1)
            want = psi.images["a"] == (ONE if p.has_y else want_a)
            data.psi_formula = want and all(psi.images.get(g, ZERO) == 0 for g in ("x", "y") if g in psi.images)
    return data


# ---------------------------------------------------------------------------
# further checks
# ---------------------------------------------------------------------------

def lemma13_check(h: HopfData, g: int) -> dict:
    """P_{a^g,1} intersected with the centralizer of a^g equals span{a^g - 1}."""
    ag = {h.index(g): ONE}
    one = h.one()
    images = []
    for k in range(h.dim):
        img: Dict[object, FieldElement] = {}
        delta = dict(h.comult[k])
        vadd(delta, {(k, h.index(g)): ONE}, -ONE)
        for j, c in one.items():
            vadd(delta, {(j, k): c}, -ONE)
        for key, c in delta.items():
            img[("d",) + key] = c
        comm = vadd(h.multiply(ag, {k: ONE}), h.multiply({k: ONE}, ag), -ONE)
        for j, c in comm.items():
            img[("c", j)] = c
        images.append(img)
    ker = linear_kernel(images, h.dim)
    expected = vadd(dict(ag), one, -ONE)
    ok = (len(ker) == (1 if expected else 0)
          and (not expected or proportional(ker[0], expected) is not None))
    return {"g": g, "dim": len(ker), "matches_span": ok}


def yx_commutation_check(h: HopfData) -> bool:
    """Engine y^i x against the closed form, for 1 <= i < r."""
    p = h.presentation
    x, y = h.gen("x"), h.gen("y")
    nu, g = p.nu, p.gamma
    a2nu = h.power(h.gen("a"), 2 * nu)
    for i in range(1, p.r):
        yi = h.power(y, i)
        lhs = h.multiply(yi, x)
        geo = sum((p.qpow(-j * nu) for j in range(i)), FieldElement.rational(0, p.conductor))
        rhs = vscale(h.multiply(x, yi), p.qpow(-i * nu))
        yi1 = h.power(y, i - 1)
        vadd(rhs, h.multiply(a2nu, yi1), g * p.qpow(-(i - 1) * nu) * geo)
        vadd(rhs, yi1, -(g * geo))
        if lhs != rhs:
            return False
    return True
