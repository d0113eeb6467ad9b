"""Validated parameter records for the four families and their rewriting data.

Families:
  H   H_{n,q,N,nu}                  a^N = 1, x^r = 0, xa = q ax
  HA  calH_{n,q,N,nu,alpha}         as H but x^n = alpha (a^{nu n} - 1)
  U   U_{(N,nu,omega)}              = UA with (N/(N,nu), N, nu, omega^nu, 0, 0, 1)
  UA  calU_{(n,N,nu,q,alpha,beta,gamma)}
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .cyclo import ONE, FieldElement, RootOfUnity, field_element, zeta
from .rewrite import FreeElement, RewriteSystem, Rule

__all__ = [
    "InvalidParams",
    "Presentation",
    "GeneratorSet",
    "make_presentation",
    "emit_rules",
    "FAMILIES",
]

FAMILIES = ("H", "HA", "U", "UA")


class InvalidParams(ValueError):
    """A parameter tuple violates one of the family constraints."""


def _lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def _as_root(q) -> RootOfUnity:
    if isinstance(q, RootOfUnity):
        return q
    if isinstance(q, dict):
        return RootOfUnity.from_json(q)
    if isinstance(q, (tuple, list)) and len(q) == 2:
        return RootOfUnity(int(q[0]), int(q[1]))
    if q == 1:
        return RootOfUnity(1, 0)
    if q == -1:
        return RootOfUnity(2, 1)
    raise InvalidParams(f"cannot read {q!r} as a root of unity")


def _canonical_root(u: RootOfUnity) -> RootOfUnity:
    """Same root written with conductor equal to its order."""
    g = math.gcd(u.M, u.e % u.M)
    n = u.M // g
    return RootOfUnity(n, (u.e % u.M) // g if n > 1 else 0)


def _scalar(v) -> Optional[FieldElement]:
    if v is None:
        return None
    if isinstance(v, dict):
        return FieldElement.from_json(v)
    return field_element(v)


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of T(C) in the order A < B < D < X < Y."""

    names: Tuple[str, ...]
    grouplike: Tuple[str, ...]
    # Delta(Z) = Z (x) B + D (x) Z for each skew generator Z
    skew: Tuple[str, ...]


@dataclass(frozen=True)
class Presentation:
    family: str
    n: int
    N: int
    nu: int
    q: RootOfUnity
    alpha: FieldElement
    beta: FieldElement
    gamma: FieldElement
    omega: Optional[RootOfUnity] = None

    # -- derived ----------------------------------------------------------
    @property
    def r(self) -> int:
        return (self.q ** self.nu).order

    @property
    def has_y(self) -> bool:
        return self.family in ("U", "UA")

    @property
    def dim(self) -> int:
        return self.N * self.r ** 2 if self.has_y else self.N * self.r

    @property
    def conductor(self) -> int:
        ms = [self.N, self.q.M]
        for s in (self.alpha, self.beta, self.gamma):
            ms.append(s.M)
        if self.omega is not None:
            ms.append(self.omega.M)
        return _lcm(*ms)

    @property
    def is_group_algebra(self) -> bool:
        return self.r == 1

    def root(self, u: RootOfUnity, k: int = 1) -> FieldElement:
        """u^k as an element of the working field."""
        M = self.conductor
        return zeta(M, (u.e * k * (M // u.M)) % M)

    def qpow(self, k: int) -> FieldElement:
        return self.root(self.q, k)

    def default_omega(self) -> RootOfUnity:
        return self.omega if self.omega is not None else RootOfUnity(self.N, 1)

    @property
    def generators(self) -> GeneratorSet:
        skew = ("X", "Y") if self.has_y else ("X",)
        return GeneratorSet(("A", "B", "D") + skew, ("A", "B", "D"), skew)

    @property
    def letters(self) -> str:
        """Letters of the normal words (B and D never survive)."""
        if self.r == 1:
            return "A"
        return "AXY" if self.has_y else "AX"

    # -- relations as pairs of free elements in A, X, Y ------------------
    def relations(self) -> List[Tuple[FreeElement, FreeElement]]:
        N, nu, r = self.N, self.nu, self.r
        rels: List[Tuple[FreeElement, FreeElement]] = [({"A" * N: ONE}, {"": ONE})]
        skews = [("X", self.alpha, 1)] + ([("Y", self.beta, -1)] if self.has_y else [])
        for s, coef, sign in skews:
            rels.append(({s + "A": ONE}, {"A" + s: self.qpow(sign)}))
            if coef:
                rels.append(({s * self.n: ONE}, _poly_a(nu * self.n, coef)))
            else:
                rels.append(({s * r: ONE}, {}))
        if self.has_y:
            rhs = {"XY": self.qpow(-nu)}
            for w, c in _poly_a(2 * nu, self.gamma).items():
                rhs[w] = rhs.get(w, 0) + c
            rels.append(({"YX": ONE}, {w: c for w, c in rhs.items() if c}))
        return rels

    # -- serialisation ----------------------------------------------------
    def to_json(self) -> dict:
        d = {
            "family": self.family,
            "n": self.n,
            "N": self.N,
            "nu": self.nu,
            "q": self.q.to_json(),
            "alpha": self.alpha.to_json() if self.family in ("HA", "UA") else None,
            "beta": self.beta.to_json() if self.family == "UA" else None,
            "gamma": self.gamma.to_json() if self.family == "UA" else None,
        }
        if self.family == "U":
            d["omega"] = self.omega.to_json()
        return d

    def canonical_json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def content_hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()[:16]

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        fam = data.get("family")
        if fam == "U":
            return make_presentation("U", N=data["N"], nu=data["nu"], omega=data.get("omega"),
                                     n=data.get("n"), q=data.get("q"))
        return make_presentation(fam, n=data.get("n"), N=data.get("N"), nu=data.get("nu"),
                                 q=data.get("q"), alpha=data.get("alpha"),
                                 beta=data.get("beta"), gamma=data.get("gamma"))

    def name(self) -> str:
        q = f"z{self.q.M}^{self.q.e}" if self.q.M > 2 else str(-1 if self.q.M == 2 else 1)
        if self.family == "H":
            return f"H_{{{self.n},{q},{self.N},{self.nu}}}"
        if self.family == "HA":
            return f"HA_{{{self.n},{q},{self.N},{self.nu},{self.alpha}}}"
        if self.family == "U":
            return f"U_{{({self.N},{self.nu},z{self.omega.M}^{self.omega.e})}}"
        return f"UA_{{({self.n},{self.N},{self.nu},{q},{self.alpha},{self.beta},{self.gamma})}}"

    def __str__(self) -> str:
        return self.name()


def _poly_a(k: int, coef: FieldElement) -> FreeElement:
    """coef * (A^k - 1) with k already reducible mod N by the caller's rules."""
    if not coef:
        return {}
    out: FreeElement = {}
    if k:
        out["A" * k] = coef
        out[""] = -coef
    return out


def make_presentation(family: str, n: Optional[int] = None, N: Optional[int] = None,
                      nu: Optional[int] = None, q=None, alpha=None, beta=None, gamma=None,
                      omega=None) -> Presentation:
    """Validate a parameter tuple and return the Presentation."""
    if family not in FAMILIES:
        raise InvalidParams(f"unknown family {family!r}")
    if N is None or nu is None:
        raise InvalidParams("N and nu are required")
    N, nu = int(N), int(nu)
    if N < 2:
        raise InvalidParams("N must be at least 2")
    if not 1 <= nu < N:
        raise InvalidParams("need 1 <= nu < N")
    zero = FieldElement.rational(0)

    if family == "U":
        if omega is None:
            raise InvalidParams("family U needs a primitive Nth root omega")
        om = _as_root(omega)
        if om.order != N:
            raise InvalidParams("omega must be a primitive Nth root of unity")
        if (nu * nu) % N == 0:
            raise InvalidParams("N divides nu^2")
        qq = _canonical_root(om ** nu)
        nn = N // math.gcd(N, nu)
        if n is not None and int(n) != nn:
            raise InvalidParams("n must equal N/(N,nu) for family U")
        if q is not None and _canonical_root(_as_root(q)) != qq:
            raise InvalidParams("q must equal omega^nu for family U")
        return Presentation("U", nn, N, nu, qq, zero, zero, ONE, om)

    if n is None or q is None:
        raise InvalidParams("n and q are required")
    n = int(n)
    qq = _canonical_root(_as_root(q))
    if n < 1 or N % n:
        raise InvalidParams("n must divide N")
    if qq.order != n:
        raise InvalidParams("q must be a primitive nth root of unity")
    a = _scalar(alpha) or zero
    b = _scalar(beta) or zero
    g = _scalar(gamma) or zero

    if family == "H":
        if a or b or g:
            raise InvalidParams("family H takes no alpha, beta, gamma")
        return Presentation("H", n, N, nu, qq, zero, zero, zero)

    if family == "HA":
        if b or g:
            raise InvalidParams("family HA takes no beta, gamma")
        if a:
            if n == 1:
                raise InvalidParams("alpha != 0 needs n > 1")
            if math.gcd(n, nu) != 1:
                raise InvalidParams("alpha != 0 needs gcd(n, nu) = 1")
            if (nu * n) % N == 0:
                raise InvalidParams("N divides nu*n but alpha != 0")
        return Presentation("HA", n, N, nu, qq, a, zero, zero)

    # UA
    if n == 1:
        raise InvalidParams("family UA needs n > 1")
    if a or b:
        if math.gcd(n, nu) != 1:
            raise InvalidParams("(alpha, beta) != (0, 0) needs gcd(n, nu) = 1")
        if (nu * n) % N == 0:
            raise InvalidParams("N divides nu*n but (alpha, beta) != (0, 0)")
    p = Presentation("UA", n, N, nu, qq, a, b, g)
    if p.r == 1:
        raise InvalidParams("q^nu = 1 (r = 1) would force x = y = 0")
    return p


def emit_rules(p: Presentation) -> RewriteSystem:
    """The oriented substitution rules on k{A,B,D,X,Y} for a presentation."""
    N, nu, n, r = p.N, p.nu, p.n, p.r
    M = p.conductor
    one = FieldElement.rational(1, M)

    def a_poly(k: int, coef: FieldElement) -> Dict[str, FieldElement]:
        k %= N
        if not coef or k == 0:
            return {}
        return {"A" * k: coef, "": -coef}

    rules = [
        Rule.make("A" * N, {"": one}),
        Rule.make("B", {"A" * nu: one}),
        Rule.make("D", {"": one}),
    ]
    named: Dict[str, str] = {}
    alphabet = "ABDXY" if p.has_y else "ABDX"
    weights = {"A": 1, "B": nu, "D": 1, "X": nu + 1, "Y": nu + 1}
    if r == 1:
        rules.append(Rule.make("X", {}))
        if p.has_y:
            rules.append(Rule.make("Y", {}))
        return RewriteSystem(rules, alphabet=alphabet, weights=weights)

    rules.append(Rule.make("XA", {"AX": p.qpow(1)}))
    if p.has_y:
        rules.append(Rule.make("YA", {"AY": p.qpow(-1)}))
    if p.alpha:
        rules.append(Rule.make("X" * n, a_poly(nu * n, p.alpha)))
        xpow = n
    else:
        rules.append(Rule.make("X" * r, {}))
        xpow = r
    named["XnA"] = "X" * xpow + "A"
    if p.has_y:
        if p.beta:
            rules.append(Rule.make("Y" * n, a_poly(nu * n, p.beta)))
        else:
            rules.append(Rule.make("Y" * r, {}))
        rhs = {"XY": p.qpow(-nu)}
        for w, c in a_poly(2 * nu, p.gamma).items():
            rhs[w] = c
        rules.append(Rule.make("YX", rhs))
        named["YXn"] = "Y" + "X" * xpow
    return RewriteSystem(rules, alphabet=alphabet, weights=weights, named=named)
