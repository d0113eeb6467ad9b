"""Dual Hopf algebras, Hopf-map checking, explicit dual generators and subalgebras."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclo import ONE, ZERO, FieldElement, RootOfUnity, Subspace, nth_root_in_field, proportional
from .hopf import HopfData, Tensor, Vector, build, vadd, vscale
from .invariants import characters, is_grouplike, skew_primitive_space
from .presentations import InvalidParams, Presentation, make_presentation

__all__ = [
    "DualHopfData",
    "HopfMapResult",
    "ClosureResult",
    "NotApplicable",
    "dualize",
    "pairing_compatibility",
    "check_hopf_map",
    "subalgebra_closure",
    "is_hopf_subspace",
    "dual_generators",
    "self_duality_search",
    "u_selfdual_cop_check",
    "exact_sequence_check",
    "dual_exact_sequence_check",
]


class NotApplicable(ValueError):
    pass


class DualHopfData(HopfData):
    """H* on the dual basis e^0..e^{d-1}."""

    def __init__(self, source: HopfData, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.source = source


def dualize(h: HopfData) -> DualHopfData:
    d = h.dim
    mult: List[List[Vector]] = [[{} for _ in range(d)] for _ in range(d)]
    for k in range(d):
        for (i, j), c in h.comult[k].items():
            mult[i][j][k] = c
    comult: List[Tensor] = [{} for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k, c in h.mult[i][j].items():
                comult[k][i, j] = c
    antipode: List[Vector] = [{} for _ in range(d)]
    for i in range(d):
        for j, c in h.antipode[i].items():
            antipode[j][i] = c
    counit = [h.unit.get(i, ZERO) for i in range(d)]
    unit = {i: c for i, c in enumerate(h.counit) if c}
    labels = [f"({lab})*" for lab in h.labels]
    return DualHopfData(h, d, mult, comult, antipode, counit, unit, labels, None, {}, None,
                        f"({h.name})*")


def pairing_compatibility(h: HopfData, hd: HopfData, triples: bool = True) -> bool:
    """<fg, c> = <f (x) g, Delta c> and <Delta f, c (x) c'> = <f, c c'> on basis elements."""
    d = h.dim
    for i in range(d):
        for j in range(d):
            fg = hd.mult[i][j]
            for k in range(d):
                if fg.get(k, ZERO) != h.comult[k].get((i, j), ZERO):
                    return False
    if triples:
        for k in range(d):
            dk = hd.comult[k]
            for i in range(d):
                for j in range(d):
                    if dk.get((i, j), ZERO) != h.mult[i][j].get(k, ZERO):
                        return False
    return True


# ---------------------------------------------------------------------------
# subalgebras
# ---------------------------------------------------------------------------

@dataclass
class ClosureResult:
    basis: List[Vector]
    is_hopf_subalgebra: bool
    space: Subspace

    @property
    def dim(self) -> int:
        return len(self.basis)


def _in_tensor_square(space: Subspace, t: Tensor) -> bool:
    left: Dict[int, Vector] = {}
    right: Dict[int, Vector] = {}
    for (i, j), c in t.items():
        left.setdefault(j, {})[i] = c
        right.setdefault(i, {})[j] = c
    return all(space.contains(v) for v in left.values()) and all(space.contains(v) for v in right.values())


def is_hopf_subspace(h: HopfData, space: Subspace, basis: Sequence[Vector]) -> bool:
    for v in basis:
        if not _in_tensor_square(space, h.comultiply(v)):
            return False
        if not space.contains(h.S(v)):
            return False
    return True


def subalgebra_closure(h: HopfData, seeds: Sequence[Vector], antipode: bool = False) -> ClosureResult:
    """Smallest unital subalgebra containing the seeds (and S-stable if antipode=True)."""
    space = Subspace(h.dim)
    basis: List[Vector] = []
    queue: List[Vector] = []

    def push(v: Vector) -> None:
        if v and space.add(v):
            basis.append(v)
            queue.append(v)

    push(h.one())
    gens = [s for s in seeds if s]
    if antipode:
        gens = gens + [h.S(s) for s in gens]
    while queue:
        v = queue.pop()
        for s in gens:
            push(h.multiply(s, v))
        if antipode:
            push(h.S(v))
    return ClosureResult(basis, is_hopf_subspace(h, space, basis), space)


# ---------------------------------------------------------------------------
# Hopf maps
# ---------------------------------------------------------------------------

@dataclass
class HopfMapResult:
    accepted: bool
    reasons: List[str] = field(default_factory=list)
    matrix: Optional[List[Vector]] = None  # matrix[k] = f(e_k)
    rank: int = 0
    injective: bool = False
    surjective: bool = False
    images: Dict[str, Vector] = field(default_factory=dict)

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        for k, c in v.items():
            vadd(out, self.matrix[k], c)
        return out

    def to_json(self) -> dict:
        return {"accepted": self.accepted, "bijective": self.bijective, "injective": self.injective,
                "surjective": self.surjective, "rank": self.rank, "reasons": list(self.reasons)}


def check_hopf_map(src: HopfData, dst: HopfData, images: Dict[str, Vector]) -> HopfMapResult:
    """Decide whether generator images extend to a Hopf algebra map src -> dst.

    The graph {(w, f(w))} of the would-be algebra map is grown from (1, 1) by
    left multiplication with the pairs (g, f(g)).  The map is well defined and
    multiplicative exactly when that span meets 0 (+) dst trivially.  Delta,
    epsilon and S are then compared on generators.
    """
    res = HopfMapResult(False, images=dict(images))
    d1, d2 = src.dim, dst.dim
    gens = [(name, src.generators[name], images.get(name, {})) for name in sorted(src.generators)
            if src.generators[name]]
    missing = [name for name, v in src.generators.items() if v and name not in images]
    if missing:
        res.reasons.append(f"no image for generators {missing}")
        return res

    def joint(u: Vector, v: Vector) -> Vector:
        out = dict(u)
        for k, c in v.items():
            out[d1 + k] = c
        return out

    space = Subspace(d1 + d2)
    queue = []
    start = joint(src.one(), dst.one())
    space.add(start)
    queue.append((src.one(), dst.one()))
    while queue:
        u, v = queue.pop()
        for _, g, fg in gens:
            nu_, nv_ = src.multiply(g, u), dst.multiply(fg, v)
            if not nu_ and not nv_:
                continue
            if space.add(joint(nu_, nv_)):
                queue.append((nu_, nv_))
        if any(p >= d1 for p in space.rows):
            res.reasons.append("relations not preserved (images violate a dependency)")
            return res
    if len(space.rows) != d1:
        res.reasons.append("generators do not span the source")
        return res
    matrix: List[Vector] = []
    for k in range(d1):
        row = space.rows[k]
        matrix.append({j - d1: c for j, c in row.items() if j >= d1})
    res.matrix = matrix

    def f_tensor(t: Tensor) -> Tensor:
        out: Tensor = {}
        for (i, j), c in t.items():
            for a, ca in matrix[i].items():
                for b, cb in matrix[j].items():
                    vadd(out, {(a, b): ca * cb * c})
        return out

    for name, g, fg in gens:
        if dst.comultiply(fg) != f_tensor(src.comultiply(g)):
            res.reasons.append(f"Delta not preserved on {name}")
        if dst.eps(fg) != src.eps(g):
            res.reasons.append(f"epsilon not preserved on {name}")
        if dst.S(fg) != res.apply(src.S(g)):
            res.reasons.append(f"S not preserved on {name}")
    space_img = Subspace(d2)
    for v in matrix:
        if v:
            space_img.add(v)
    res.rank = space_img.rank
    res.injective = res.rank == d1
    res.surjective = res.rank == d2
    res.accepted = not res.reasons
    return res


# ---------------------------------------------------------------------------
# explicit dual generators
# ---------------------------------------------------------------------------

def _root_exponent(p: Presentation, omega: RootOfUnity, target: FieldElement) -> Optional[int]:
    for m in range(p.N):
        if p.root(omega, m) == target:
            return m
    return None


def dual_element_order(hd: HopfData, g: Vector, bound: int) -> Optional[int]:
    cur = dict(g)
    for k in range(1, bound + 1):
        if cur == hd.unit:
            return k
        cur = hd.multiply(cur, g)
    return None


@dataclass
class DualGenerators:
    A: Vector
    X: Vector
    mu: int
    checks: Dict[str, bool]
    target: Optional[Presentation]
    iso: Optional[HopfMapResult]
    dual: HopfData

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"mu": self.mu, "checks": dict(self.checks),
                "target": self.target.to_json() if self.target else None,
                "iso": self.iso.to_json() if self.iso else None}


def dual_generators(h: HopfData, omega: Optional[RootOfUnity] = None,
                    hd: Optional[HopfData] = None) -> DualGenerators:
    """A, X in H* with <A, a^i x^j> = d_{j,0} w^i and <X, a^i x^j> = d_{j,1}."""
    p = h.presentation
    if p is None or p.family not in ("H", "HA") or p.alpha or p.r == 1:
        raise NotApplicable("dual generators need H_{n,q,N,nu} with alpha = 0, other than kZ_N")
    om = omega or RootOfUnity(p.N, 1)
    if om.order != p.N:
        raise NotApplicable("omega must be a primitive Nth root of unity")
    hd = hd or dualize(h)
    A = {h.index(i, 0): p.root(om, i) for i in range(p.N)}
    X = {h.index(i, 1): ONE for i in range(p.N)}
    mu = _root_exponent(p, om, p.qpow(1))
    checks: Dict[str, bool] = {}
    checks["A_grouplike"] = is_grouplike(hd, A)
    checks["A_order_N"] = dual_element_order(hd, A, p.N) == p.N
    A_mu = hd.power(A, mu)
    expected = {}
    for i, c in X.items():
        for j, e in A_mu.items():
            vadd(expected, {(i, j): c * e})
    for j, e in hd.unit.items():
        for i, c in X.items():
            vadd(expected, {(j, i): e * c})
    checks["X_skew_primitive"] = hd.comultiply(X) == expected
    r_star = (om ** (p.nu * mu)).order
    checks["X_power_zero"] = not hd.power(X, r_star)
    w_nu = p.root(om, p.nu)
    checks["XA_relation"] = hd.multiply(X, A) == vscale(hd.multiply(A, X), w_nu)
    checks["generate"] = subalgebra_closure(hd, [A, X]).dim == hd.dim
    target = None
    iso = None
    try:
        n_star = p.N // math.gcd(p.N, p.nu)
        target = make_presentation("H", n=n_star, N=p.N, nu=mu, q=om ** p.nu)
        tgt = build(target)
        iso = check_hopf_map(tgt, hd, {"a": A, "x": X})
        checks["iso_to_target"] = iso.accepted and iso.bijective
    except InvalidParams:
        checks["iso_to_target"] = False
    return DualGenerators(A, X, mu, checks, target, iso, hd)


@dataclass
class SelfDualityResult:
    count_test: bool
    grouplikes: int
    accepted: Optional[HopfMapResult]
    tried: int

    @property
    def self_dual(self) -> bool:
        return self.accepted is not None

    def to_json(self) -> dict:
        return {"self_dual": self.self_dual, "count_test": self.count_test,
                "dual_grouplikes": self.grouplikes, "candidates_tried": self.tried}


def self_duality_search(h: HopfData, hd: Optional[HopfData] = None) -> SelfDualityResult:
    """Search a -> grouplike of H*, x -> scaled skew-primitive complement vector."""
    p = h.presentation
    hd = hd or dualize(h)
    chars = characters(h)
    count_ok = len(chars) == p.N
    tried = 0
    for ch in chars:
        G = ch.as_vector()
        if p.r == 1:
            tried += 1
            res = check_hopf_map(h, hd, {"a": G})
            if res.accepted and res.bijective:
                return SelfDualityResult(count_ok, len(chars), res, tried)
            continue
        Gnu = hd.power(G, p.nu)
        sp = skew_primitive_space(hd, Gnu, dict(hd.unit))
        for z in sp.complement:
            if p.alpha:
                zn = hd.power(z, p.n)
                rhs = vadd(hd.power(G, p.nu * p.n), hd.unit, -ONE)
                rhs = vscale(rhs, p.alpha)
                kappa = proportional(zn, rhs) if zn and rhs else None
                if kappa is None:
                    tried += 1
                    continue
                c = nth_root_in_field(1 / kappa, p.n, _lcm(p.conductor, kappa.M, 8))
                if c is None:
                    tried += 1
                    continue
                z = vscale(z, c)
            tried += 1
            res = check_hopf_map(h, hd, {"a": G, "x": z})
            if res.accepted and res.bijective:
                return SelfDualityResult(count_ok, len(chars), res, tried)
    return SelfDualityResult(count_ok, len(chars), None, tried)


def _lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def u_selfdual_cop_check(u: HopfData) -> HopfMapResult:
    """a -> A, x -> X, y -> Y as a Hopf map U -> U*^cop for U = U_{(2 nu, nu, omega)}, nu odd."""
    p = u.presentation
    if p is None or p.family != "U" or p.N != 2 * p.nu or p.nu % 2 == 0:
        raise NotApplicable("needs U_{(N,nu,omega)} with N = 2 nu and nu odd")
    om = p.omega
    hd = dualize(u).cop()
    A = {u.index(i, 0, 0): p.root(om, i) for i in range(p.N)}
    X = {u.index(i, 1, 0): p.root(om, p.nu * i) for i in range(p.N)}
    Y = {u.index(i, 0, 1): p.root(om, p.nu * i) for i in range(p.N)}
    return check_hopf_map(u, hd, {"a": A, "x": X, "y": Y})


# ---------------------------------------------------------------------------
# exact sequences
# ---------------------------------------------------------------------------

def exact_sequence_check(h: HopfData) -> dict:
    """k(a^n) is a central Hopf subalgebra of dim N/n and H / H k(a^n)^+ = H_{n,q,n,nu}."""
    p = h.presentation
    n, N = p.n, p.N
    an = {h.index(n % N): ONE}
    K = subalgebra_closure(h, [an])
    central = all(h.multiply(v, {k: ONE}) == h.multiply({k: ONE}, v)
                  for v in K.basis for k in range(h.dim))
    out = {"K_dim": K.dim, "K_expected": N // n, "central": central, "K_hopf": K.is_hopf_subalgebra}
    if p.has_y or n == 1 or p.nu % n == 0:
        out["quotient"] = None
        return out
    quo = make_presentation("H", n=n, N=n, nu=p.nu % n, q=p.q)
    B = build(quo)
    f = check_hopf_map(h, B, {"a": B.gen("a"), "x": B.gen("x")})
    # kernel of f must equal the ideal H K^+
    ideal = Subspace(h.dim)
    for v in K.basis:
        kp = vadd(dict(v), h.one(), -h.eps(v))
        for k in range(h.dim):
            w = h.multiply({k: ONE}, kp)
            if w:
                ideal.add(w)
    kernel_ok = False
    if f.accepted:
        kernel_ok = all(not f.apply(row) for row in ideal.echelon()) and ideal.rank == h.dim - f.rank
    out.update({"quotient": quo.to_json(), "map_accepted": f.accepted, "surjective": f.surjective,
                "kernel_is_HK+": kernel_ok})
    return out


def dual_exact_sequence_check(h: HopfData, hd: Optional[HopfData] = None) -> dict:
    """For alpha != 0: H* contains a Hopf subalgebra isomorphic to H_{n,q,n,nu} of codim factor N/n."""
    p = h.presentation
    hd = hd or dualize(h)
    n, N = p.n, p.N
    quo = make_presentation("H", n=n, N=n, nu=p.nu % n, q=p.q)
    B = build(quo)
    pi = check_hopf_map(h, B, {"a": B.gen("a"), "x": B.gen("x")})
    if not pi.accepted:
        return {"accepted": False, "reason": "projection rejected"}
    # pi^*: B* -> H*, e^b -> sum_k <e^b, pi(e_k)> e^k
    def pi_star(f: Vector) -> Vector:
        out: Vector = {}
        for k, img in enumerate(pi.matrix):
            c = ZERO
            for b, coef in img.items():
                if b in f:
                    c = c + coef * f[b]
            if c:
                out[k] = c
        return out
    # B = H_{n,q,n,nu} is self dual through omega' with omega'^nu = q
    inv = pow(p.nu, -1, n)
    om = RootOfUnity(p.q.M, p.q.e * inv)
    dg = dual_generators(B, om)
    images = {"a": pi_star(dg.A), "x": pi_star(dg.X)}
    emb = check_hopf_map(B, hd, images)
    image = subalgebra_closure(hd, list(images.values()))
    return {"accepted": emb.accepted, "injective": emb.injective, "image_dim": image.dim,
            "image_hopf": image.is_hopf_subalgebra, "index": hd.dim // max(image.dim, 1),
            "expected_index": N // n}
