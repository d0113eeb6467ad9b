"""Finite-dimensional modules: V_omega, irreducibility, matrix coefficients, dual pointedness."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .cyclo import ONE, ZERO, ExactMatrix, FieldElement, RootOfUnity, Subspace, field_element, \
    kernel, nth_root_in_field, zeta
from .dual import NotApplicable, _in_tensor_square, dualize
from .hopf import HopfData, Vector, build
from .presentations import Presentation, make_presentation

__all__ = [
    "ModuleRep",
    "RootUnavailable",
    "UnsupportedShape",
    "make_V_omega",
    "regular_module",
    "trivial_module",
    "x_part",
    "is_irreducible",
    "matrix_coefficients",
    "MatrixCoefficients",
    "simple_subcoalgebra_census",
    "dual_pointedness",
    "PointednessReport",
]

# conductor multipliers tried when looking for beta
_ENLARGE = (1, 2, 3, 4, 6, 8, 12, 16, 24)


class RootUnavailable(ValueError):
    pass


class UnsupportedShape(ValueError):
    pass


class ModuleRep:
    """Matrices for the generators a, x (and y) acting on k^dim."""

    def __init__(self, dim: int, mats: Dict[str, ExactMatrix], conductor: int = 1, name: str = ""):
        self.dim = dim
        self.mats = dict(mats)
        self.conductor = conductor
        self.name = name

    def act_word(self, word: str) -> ExactMatrix:
        out = ExactMatrix.identity(self.dim)
        for c in word:
            out = out @ self.mats[c.lower()]
        return out

    def act_free(self, e: Dict[str, FieldElement]) -> ExactMatrix:
        out = ExactMatrix(self.dim, self.dim)
        for w, c in e.items():
            out = out + self.act_word(w).scale(c)
        return out

    def satisfies(self, p: Presentation) -> bool:
        letters = set(self.mats)
        for lhs, rhs in p.relations():
            used = {c.lower() for w in list(lhs) + list(rhs) for c in w}
            if not used <= letters:
                continue
            if self.act_free(lhs) != self.act_free(rhs):
                return False
        return True

    def basis_matrices(self, h: HopfData) -> List[ExactMatrix]:
        cache: Dict[str, ExactMatrix] = {"": ExactMatrix.identity(self.dim)}
        out = []
        for w in h.words:
            if w not in cache:
                cache[w] = cache[w[:-1]] @ self.mats[w[-1]]
            out.append(cache[w])
        return out

    def __repr__(self) -> str:
        return f"ModuleRep({self.name or '?'}, dim={self.dim})"


def x_part(p: Presentation) -> Presentation:
    """The presentation of the Hopf subalgebra k<a, x> of a UA algebra."""
    if p.family in ("H", "HA"):
        return p
    if p.family == "UA":
        return make_presentation("HA", n=p.n, N=p.N, nu=p.nu, q=p.q, alpha=p.alpha)
    return make_presentation("H", n=p.n, N=p.N, nu=p.nu, q=p.q)


def make_V_omega(h, omega: RootOfUnity, conductor: Optional[int] = None) -> ModuleRep:
    """a v_i = q^{-i} w v_i and x v_i = beta v_{i+1} (indices mod n), beta^n = alpha(w^{nu n} - 1).

    For a UA algebra the module is over its subalgebra k<a, x>.
    """
    p = h.presentation if isinstance(h, HopfData) else h
    if not p.alpha:
        raise NotApplicable("V_omega needs alpha != 0")
    if omega.order != p.N:
        raise ValueError("omega must be a primitive Nth root of unity")
    n, nu = p.n, p.nu
    base = conductor or math.lcm(p.conductor, omega.M)
    beta = None
    M = base
    for k in _ENLARGE:
        M = base * k
        w = zeta(M, omega.e * (M // omega.M))
        radicand = p.alpha * (w ** (nu * n) - ONE)
        beta = nth_root_in_field(radicand, n, M)
        if beta is not None:
            break
    if beta is None:
        raise RootUnavailable("no nth root of alpha(w^(nu n) - 1) found in the allowed fields")
    q = zeta(M, p.q.e * (M // p.q.M))
    qinv = q.inverse()
    a = ExactMatrix(n, n, {(i, i): qinv ** i * w for i in range(n)})
    x = ExactMatrix(n, n, {((i + 1) % n, i): beta for i in range(n)})
    m = ModuleRep(n, {"a": a, "x": x}, M, f"V_w(w=z{omega.M}^{omega.e})")
    m.beta = beta
    if not m.satisfies(x_part(p)):
        raise AssertionError("V_omega violates a relation")
    return m


def regular_module(h: HopfData) -> ModuleRep:
    mats = {}
    for name, g in h.generators.items():
        if not g:
            mats[name] = ExactMatrix(h.dim, h.dim)
            continue
        ent = {}
        for k in range(h.dim):
            for i, c in h.multiply(g, {k: ONE}).items():
                ent[i, k] = c
        mats[name] = ExactMatrix(h.dim, h.dim, ent)
    return ModuleRep(h.dim, mats, h.presentation.conductor if h.presentation else 1, "regular")


def trivial_module(h: HopfData) -> ModuleRep:
    mats = {name: ExactMatrix(1, 1, {(0, 0): h.eps(g)}) for name, g in h.generators.items()}
    return ModuleRep(1, mats, 1, "trivial")


# ---------------------------------------------------------------------------
# irreducibility
# ---------------------------------------------------------------------------

@dataclass
class IrreducibilityReport:
    irreducible: bool
    witness: Optional[List[Vector]] = None  # basis of a proper submodule

    def __bool__(self) -> bool:
        return self.irreducible


def _eigenvectors(mat: ExactMatrix, order: int, M: int) -> List[List[Vector]]:
    """Eigenspaces of a matrix with mat^order = 1, over Q(zeta_lcm)."""
    L = math.lcm(M, order)
    spaces = []
    n = mat.rows
    for e in range(order):
        lam = zeta(L, e * (L // order))
        shifted = mat - ExactMatrix.identity(n).scale(lam)
        rows = [[shifted[i, j] for j in range(n)] for i in range(n)]
        ker = kernel(ExactMatrix.from_rows(rows))
        if ker:
            spaces.append([{j: c for j, c in enumerate(v) if c} for v in ker])
    return spaces


def _closure(m: ModuleRep, v: Vector) -> Subspace:
    space = Subspace(m.dim)
    queue = [v]
    space.add(v)
    while queue:
        u = queue.pop()
        for mat in m.mats.values():
            w = mat.apply(u)
            if w and space.add(w):
                queue.append(w)
    return space


def is_irreducible(m: ModuleRep, a_order: Optional[int] = None) -> IrreducibilityReport:
    if m.dim == 1:
        return IrreducibilityReport(True)
    a = m.mats["a"]
    order = a_order
    if order is None:
        cur = a
        for k in range(1, 1000):
            if cur == ExactMatrix.identity(m.dim):
                order = k
                break
            cur = cur @ a
        else:
            raise UnsupportedShape("a has no finite order")
    spaces = _eigenvectors(a, order, m.conductor)
    if sum(len(s) for s in spaces) != m.dim or any(len(s) > 1 for s in spaces):
        raise UnsupportedShape("a is not diagonalizable with distinct eigenvalues")
    for s in spaces:
        sub = _closure(m, s[0])
        if sub.rank < m.dim:
            return IrreducibilityReport(False, sub.echelon())
    return IrreducibilityReport(True)


# ---------------------------------------------------------------------------
# matrix coefficients
# ---------------------------------------------------------------------------

@dataclass
class MatrixCoefficients:
    dim: int
    basis: List[Vector]
    subcoalgebra: bool
    image_algebra_dim: int
    module_dim: int
    space: Subspace = field(repr=False, default=None)

    @property
    def simple(self) -> bool:
        # density: the image of H is the full matrix algebra
        return self.subcoalgebra and self.image_algebra_dim == self.module_dim ** 2 == self.dim


def matrix_coefficients(h: HopfData, m: ModuleRep, hd: Optional[HopfData] = None) -> MatrixCoefficients:
    """span{ b -> rho(b)_{st} } inside H*."""
    mats = m.basis_matrices(h)
    d = m.dim
    coeffs = []
    for s in range(d):
        for t in range(d):
            f = {}
            for k, mat in enumerate(mats):
                c = mat[s, t]
                if c:
                    f[k] = c
            coeffs.append(f)
    space = Subspace(h.dim)
    for f in coeffs:
        if f:
            space.add(f)
    hd = hd or dualize(h)
    basis = space.echelon()
    sub = all(_in_tensor_square(space, hd.comultiply(f)) for f in basis)
    img = Subspace(d * d)
    for mat in mats:
        v = {i * d + j: c for (i, j), c in mat.entries.items()}
        if v:
            img.add(v)
    return MatrixCoefficients(len(basis), basis, sub, img.rank, d, space)


def simple_subcoalgebra_census(h: HopfData, hd: Optional[HopfData] = None) -> dict:
    """Distinct n^2-dimensional simple subcoalgebras coming from the V_omega, with a room bound.

    Simple subcoalgebras are independent, so once #characters + k n^2 + n^2 > dim H
    no further n^2-dimensional simple subcoalgebra can exist.
    """
    from .invariants import characters

    p = h.presentation
    hd = hd or dualize(h)
    found: List[MatrixCoefficients] = []
    for e in range(1, p.N):
        if math.gcd(e, p.N) != 1:
            continue
        try:
            V = make_V_omega(h, RootOfUnity(p.N, e))
        except RootUnavailable:
            continue
        mc = matrix_coefficients(h, V, hd)
        if not mc.simple:
            continue
        if not any(all(o.space.contains(v) for v in mc.basis) for o in found):
            found.append(mc)
    nchars = len(characters(h))
    n2 = p.n ** 2
    return {
        "count": len(found),
        "dim": n2,
        "characters": nchars,
        "complete": nchars + (len(found) + 1) * n2 > h.dim,
    }


# ---------------------------------------------------------------------------
# dual pointedness
# ---------------------------------------------------------------------------

@dataclass
class PointednessReport:
    pointed: Optional[bool]
    certificate: dict

    def to_json(self) -> dict:
        return {"pointed": self.pointed, "verdict": {True: "pointed", False: "not_pointed", None: "undetermined"}[self.pointed],
                "certificate": self.certificate}


def _ideal(h: HopfData, seeds: Sequence[Vector]) -> Subspace:
    gens = [g for g in h.generators.values() if g]
    space = Subspace(h.dim)
    queue = []
    for s in seeds:
        if s and space.add(s):
            queue.append(s)
    while queue:
        v = queue.pop()
        for g in gens:
            for w in (h.multiply(g, v), h.multiply(v, g)):
                if w and space.add(w):
                    queue.append(w)
    return space


def _ideal_product(h: HopfData, I: List[Vector], J: List[Vector]) -> Subspace:
    space = Subspace(h.dim)
    for u in I:
        for v in J:
            w = h.multiply(u, v)
            if w:
                space.add(w)
    return space


def dual_pointedness(h: HopfData, omega: Optional[RootOfUnity] = None) -> PointednessReport:
    p = h.presentation
    if p is None or p.family not in ("H", "HA"):
        raise NotApplicable("dual pointedness is decided for the H and HA families")
    if not p.alpha:
        I = _ideal(h, [h.gen("x")])
        ideal = I.echelon()
        powers = [len(ideal)]
        cur = ideal
        while cur:
            cur = _ideal_product(h, cur, ideal).echelon()
            powers.append(len(cur))
            if len(powers) > h.dim + 1:
                break
        nilpotent = powers[-1] == 0
        quotient_dim = h.dim - len(ideal)
        # H/I is the commutative semisimple algebra k Z_N, I nilpotent: simples are 1-dimensional
        ok = nilpotent and quotient_dim == p.N
        return PointednessReport(ok, {"kind": "ideal_nilpotency", "ideal_dim": len(ideal),
                                      "power_dims": powers, "nilpotency_index": len(powers) - 1,
                                      "quotient_dim": quotient_dim})
    omegas = [omega] if omega else [RootOfUnity(p.N, e) for e in range(1, p.N) if math.gcd(e, p.N) == 1]
    last_error = None
    for om in omegas:
        try:
            V = make_V_omega(h, om)
        except RootUnavailable as exc:
            last_error = str(exc)
            continue
        irr = is_irreducible(V, p.N)
        mc = matrix_coefficients(h, V)
        cert = {"kind": "simple_subcoalgebra", "omega": om.to_json(), "module_dim": V.dim,
                "beta": V.beta.to_json(), "irreducible": irr.irreducible,
                "subcoalgebra_dim": mc.dim, "subcoalgebra": mc.subcoalgebra, "simple": mc.simple}
        if irr.irreducible and mc.simple and mc.dim > 1:
            return PointednessReport(False, cert)
        last_error = "certificate incomplete"
    # no certificate either way
    return PointednessReport(None, {"kind": "undetermined", "reason": last_error})
