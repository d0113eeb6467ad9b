"""Exact arithmetic in cyclotomic fields Q(zeta_M) and sparse exact linear algebra.

An element of Q(zeta_M) is stored as an integer numerator vector of length
phi(M) in the power basis 1, z, ..., z^(phi-1), reduced modulo the M-th
cyclotomic polynomial, together with one positive common denominator.  The
representation is canonical, so equality inside one field is tuple equality.
Operands over different conductors are embedded into Q(zeta_lcm) first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

__all__ = [
    "FieldElement",
    "RootOfUnity",
    "ExactMatrix",
    "Subspace",
    "NonDivisibleConductor",
    "zeta",
    "embed",
    "order_of",
    "kernel",
    "sparse_kernel",
    "linear_kernel",
    "span_rank",
    "proportional",
    "nth_root_in_field",
    "sqrt_rational",
    "field_element",
    "ONE",
    "ZERO",
]


class NonDivisibleConductor(ValueError):
    """Raised when an element cannot be embedded into the requested field."""


# ---------------------------------------------------------------------------
# per-conductor tables
# ---------------------------------------------------------------------------

def _divisors(n: int) -> List[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_divexact(num: List[int], den: List[int]) -> List[int]:
    # integer polynomials, low degree first, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert not any(num), "non-exact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> Tuple[int, ...]:
    """Coefficients of Phi_M, lowest degree first."""
    poly = [-1] + [0] * (M - 1) + [1]
    for d in _divisors(M):
        if d < M:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(M: int) -> int:
    return len(cyclotomic_poly(M)) - 1


@lru_cache(maxsize=None)
def _power_table(M: int) -> Tuple[Tuple[int, ...], ...]:
    """Row k holds zeta_M^k in the power basis, for 0 <= k < M."""
    phi = euler_phi(M)
    cyc = cyclotomic_poly(M)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(M):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    res, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


@lru_cache(maxsize=None)
def _trace_weights(M: int) -> Tuple[Fraction, ...]:
    # normalised trace of zeta_M^k is the Ramanujan sum c_M(k) / phi(M)
    phi = euler_phi(M)
    out = []
    for k in range(phi):
        g = math.gcd(k, M)
        c = _mobius(M // g) * phi // euler_phi(M // g)
        out.append(Fraction(c, phi))
    return tuple(out)


@lru_cache(maxsize=None)
def _embedding_rows(M: int, M2: int) -> Tuple[Tuple[int, ...], ...]:
    """Images of the basis powers of Q(zeta_M) inside Q(zeta_M2)."""
    table = _power_table(M2)
    if M2 % M == 0:
        step = M2 // M
        return tuple(table[(k * step) % M2] for k in range(euler_phi(M)))
    if M2 % 2 == 1 and (2 * M2) % M == 0:
        # zeta_{2 M2} = -zeta_{M2}^{(M2 + 1) / 2}
        step = (2 * M2) // M
        half = (M2 + 1) // 2
        rows = []
        for k in range(euler_phi(M)):
            e = k * step
            sign = -1 if e % 2 else 1
            rows.append(tuple(sign * c for c in table[(e * half) % M2]))
        return tuple(rows)
    raise NonDivisibleConductor(f"Q(zeta_{M}) does not embed in Q(zeta_{M2})")


def _normalise(num: List[int], den: int) -> Tuple[Tuple[int, ...], int]:
    g = math.gcd(den, *num)
    if g != 1:
        num = [c // g for c in num]
        den //= g
    if den < 0:
        num = [-c for c in num]
        den = -den
    return tuple(num), den


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

Scalar = Union["FieldElement", int, Fraction]


class FieldElement:
    """Exact element of Q(zeta_M)."""

    __slots__ = ("M", "num", "den", "_hash")

    def __init__(self, M: int, num: Sequence[int], den: int = 1, *, _raw: bool = False):
        if _raw:
            self.M, self.num, self.den = M, num, den
        else:
            if len(num) != euler_phi(M):
                raise ValueError(f"need {euler_phi(M)} coefficients for M={M}")
            self.M = M
            self.num, self.den = _normalise([int(c) for c in num], int(den))
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def rational(cls, value, M: int = 1) -> "FieldElement":
        value = Fraction(value)
        num = [0] * euler_phi(M)
        num[0] = value.numerator
        return cls(M, tuple(num), value.denominator, _raw=True)

    @classmethod
    def from_coeffs(cls, M: int, coeffs: Sequence) -> "FieldElement":
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls(M, [int(c * den) for c in fr], den)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    # -- embedding ----------------------------------------------------------
    def embed(self, M2: int) -> "FieldElement":
        if M2 == self.M:
            return self
        rows = _embedding_rows(self.M, M2)
        out = [0] * euler_phi(M2)
        for c, row in zip(self.num, rows):
            if c:
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return FieldElement(M2, tuple(out), self.den, _raw=True)

    def _lift(self, other: Scalar) -> Tuple["FieldElement", "FieldElement"]:
        if not isinstance(other, FieldElement):
            other = FieldElement.rational(other, self.M)
            return self, other
        if other.M == self.M:
            return self, other
        L = self.M * other.M // math.gcd(self.M, other.M)
        return self.embed(L), other.embed(L)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: Scalar) -> "FieldElement":
        if not isinstance(other, FieldElement):
            fr = Fraction(other)
            num = [c * fr.denominator for c in self.num]
            num[0] += fr.numerator * self.den
            n, d = _normalise(num, self.den * fr.denominator)
            return FieldElement(self.M, n, d, _raw=True)
        a, b = self._lift(other)
        if a.den == b.den:
            n, d = _normalise([x + y for x, y in zip(a.num, b.num)], a.den)
        else:
            n, d = _normalise([x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den)
        return FieldElement(a.M, n, d, _raw=True)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.M, tuple(-c for c in self.num), self.den, _raw=True)

    def __sub__(self, other: Scalar) -> "FieldElement":
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "FieldElement":
        return (-self) + other

    def _scale(self, fr: Fraction) -> "FieldElement":
        return self._scale_int(fr.numerator, fr.denominator)

    def _scale_int(self, p: int, q: int) -> "FieldElement":
        if q == 1 and p == 1:
            return self
        num = self.num
        if not any(num[1:]):
            # rational times rational
            n0, d = num[0] * p, self.den * q
            g = math.gcd(n0, d)
            if d < 0:
                g = -g
            return FieldElement(self.M, (n0 // g,) + num[1:], d // g, _raw=True)
        n, d = _normalise([c * p for c in num], self.den * q)
        return FieldElement(self.M, n, d, _raw=True)

    def __mul__(self, other: Scalar) -> "FieldElement":
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                return self._scale_int(other, 1)
            return self._scale(Fraction(other))
        if not any(other.num[1:]):
            return self._scale_int(other.num[0], other.den)
        if not any(self.num[1:]):
            return other._scale_int(self.num[0], self.den)
        a, b = self._lift(other)
        M = a.M
        phi = len(a.num)
        acc = [0] * (2 * phi)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        acc[i + j] += x * y
        out = acc[:phi]
        table = _power_table(M)
        for k in range(phi, 2 * phi - 1):
            c = acc[k]
            if c:
                for i, r in enumerate(table[k % M]):
                    if r:
                        out[i] += c * r
        n, d = _normalise(out, a.den * b.den)
        return FieldElement(M, n, d, _raw=True)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not any(self.num):
            raise ZeroDivisionError("inverse of zero field element")
        if not any(self.num[1:]):
            return FieldElement.rational(Fraction(self.den, self.num[0]), self.M)
        # solve (multiplication by self) * y = 1 over Q
        M, phi = self.M, len(self.num)
        cols = []
        basis = [0] * phi
        for k in range(phi):
            basis[k] = 1
            prod = self * FieldElement(M, tuple(basis), 1, _raw=True)
            basis[k] = 0
            cols.append(prod.coeffs)
        mat = [[cols[c][r] for c in range(phi)] + [Fraction(int(r == 0))] for r in range(phi)]
        for c in range(phi):
            piv = next(r for r in range(c, phi) if mat[r][c] != 0)
            mat[c], mat[piv] = mat[piv], mat[c]
            inv = 1 / mat[c][c]
            mat[c] = [v * inv for v in mat[c]]
            for r in range(phi):
                if r != c and mat[r][c] != 0:
                    f = mat[r][c]
                    mat[r] = [v - f * w for v, w in zip(mat[r], mat[c])]
        return FieldElement.from_coeffs(M, [mat[r][phi] for r in range(phi)])

    def __truediv__(self, other: Scalar) -> "FieldElement":
        if not isinstance(other, FieldElement):
            return self._scale(1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "FieldElement":
        return self.inverse() * other

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = FieldElement.rational(1, self.M)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            if isinstance(other, (int, Fraction)):
                return self.is_rational() and Fraction(self.num[0], self.den) == other
            return NotImplemented
        if self.M == other.M:
            return self.den == other.den and self.num == other.num
        if self.is_rational() and other.is_rational():
            return self.den == other.den and self.num[0] == other.num[0]
        a, b = self._lift(other)
        return a.den == b.den and a.num == b.num

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        if self._hash is None:
            w = _trace_weights(self.M)
            self._hash = hash(sum((c * wk for c, wk in zip(self.num, w) if c), Fraction(0)) / self.den)
        return self._hash

    # -- conjugation / display / serialisation ------------------------------
    def galois(self, k: int) -> "FieldElement":
        """Image under zeta_M -> zeta_M^k (k coprime to M)."""
        table = _power_table(self.M)
        out = [0] * len(self.num)
        for i, c in enumerate(self.num):
            if c:
                for j, r in enumerate(table[(i * k) % self.M]):
                    if r:
                        out[j] += c * r
        return FieldElement(self.M, tuple(out), self.den, _raw=True)

    def to_json(self) -> dict:
        return {"M": self.M, "coeffs": [_fstr(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "FieldElement":
        if isinstance(data, (int, str)):
            return cls.rational(Fraction(data))
        return cls.from_coeffs(int(data["M"]), [Fraction(c) for c in data["coeffs"]])

    def __repr__(self) -> str:
        if self.is_rational():
            return _fstr(self.to_fraction())
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else (f"z{self.M}" if k == 1 else f"z{self.M}^{k}")
                if mono and c == 1:
                    terms.append(mono)
                elif mono and c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(_fstr(c) + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    __str__ = __repr__


def _fstr(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


ZERO = FieldElement.rational(0)
ONE = FieldElement.rational(1)


def field_element(value, M: int = 1) -> FieldElement:
    """Coerce ints, Fractions, strings and FieldElements."""
    if isinstance(value, FieldElement):
        return value
    return FieldElement.rational(Fraction(value), M)


@lru_cache(maxsize=None)
def zeta(M: int, e: int = 1) -> FieldElement:
    """zeta_M^e as an element of Q(zeta_M)."""
    return FieldElement(M, _power_table(M)[e % M], 1, _raw=True)


def embed(x: FieldElement, M2: int) -> FieldElement:
    """Image of x in Q(zeta_M2); requires M | M2 (or M2 odd and M | 2 M2)."""
    return x.embed(M2)


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_M^e, kept symbolically so the order is known without search."""

    M: int
    e: int

    @property
    def order(self) -> int:
        return self.M // math.gcd(self.M, self.e % self.M)

    @property
    def value(self) -> FieldElement:
        return zeta(self.M, self.e)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.M, (self.e * k) % self.M)

    def to_json(self) -> dict:
        return {"M": self.M, "e": self.e % self.M}

    @classmethod
    def from_json(cls, data) -> "RootOfUnity":
        return cls(int(data["M"]), int(data["e"]))


def _roots_of_unity(M: int) -> Iterable[FieldElement]:
    # every root of unity of Q(zeta_M) is +-zeta_M^k
    for k in range(M):
        yield zeta(M, k)
    if M % 2:
        for k in range(M):
            yield -zeta(M, k)


def order_of(u: FieldElement) -> Optional[int]:
    """Multiplicative order of u, or None when u is not a root of unity."""
    if not u:
        return None
    L = u.M if u.M % 2 == 0 else 2 * u.M
    if u ** L != 1:
        return None
    for d in _divisors(L):
        if u ** d == 1:
            return d
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# radicals
# ---------------------------------------------------------------------------

def _int_root(v: int, n: int) -> Optional[int]:
    if v < 0:
        return None
    if v < 2:
        return v
    lo, hi = 1, 1 << (v.bit_length() // n + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** n <= v:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** n == v else None


def _rational_root(c: Fraction, n: int) -> Optional[Fraction]:
    p, q = _int_root(c.numerator, n), _int_root(c.denominator, n)
    if p is None or q is None:
        return None
    return Fraction(p, q)


def _squarefree_split(v: int) -> Tuple[int, int]:
    """v = s * t^2 with s squarefree (v > 0)."""
    s, t, p = 1, 1, 2
    while p * p <= v:
        while v % (p * p) == 0:
            v //= p * p
            t *= p
        if v % p == 0:
            v //= p
            s *= p
        p += 1
    return s * v, t


def _primes(v: int) -> List[int]:
    out, p = [], 2
    while p * p <= v:
        if v % p == 0:
            out.append(p)
            while v % p == 0:
                v //= p
        p += 1
    if v > 1:
        out.append(v)
    return out


def _legendre(a: int, p: int) -> int:
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _sqrt_prime(p: int) -> FieldElement:
    if p == 2:
        return zeta(8, 1) + zeta(8, 7)
    g = sum((zeta(p, a) * _legendre(a, p) for a in range(1, p)), FieldElement.rational(0, p))
    if p % 4 == 1:
        return g
    return g * (-zeta(4, 1))


def sqrt_rational(b, M: int) -> Optional[FieldElement]:
    """A square root of the rational b inside Q(zeta_M), or None if none exists there."""
    b = Fraction(b)
    if b == 0:
        return FieldElement.rational(0, M)
    # sqrt(p/q) = sqrt(p q) / q
    v = abs(b.numerator * b.denominator)
    s, t = _squarefree_split(v)
    disc = s if s % 4 == 1 else 4 * s
    if b < 0:
        s_signed = -s
        disc = s if -s % 4 == 1 else 4 * s
    else:
        s_signed = s
    if s_signed == 1:
        disc = 1
    Mp = M if M % 2 == 0 else 2 * M
    if Mp % disc:
        return None
    root = FieldElement.rational(Fraction(t, b.denominator), 1)
    for p in _primes(s):
        root = root * _sqrt_prime(p)
    if b < 0:
        root = root * zeta(4, 1)
    if root.M != M:
        L = root.M * M // math.gcd(root.M, M)
        root = root.embed(L)
        # the value lies in Q(zeta_M); pull it down
        root = _descend(root, M)
    assert root * root == b
    return root


def _descend(x: FieldElement, M: int) -> FieldElement:
    """Write x (known to lie in Q(zeta_M)) with conductor M."""
    if x.M == M:
        return x
    rows = _embedding_rows(M, x.M)
    phi = euler_phi(M)
    # solve sum_k c_k rows[k] = x.num / x.den over Q
    cols = [[Fraction(v) for v in row] for row in rows]
    target = [Fraction(v, x.den) for v in x.num]
    n = len(target)
    mat = [[cols[k][i] for k in range(phi)] + [target[i]] for i in range(n)]
    piv_cols, r = [], 0
    for c in range(phi):
        piv = next((i for i in range(r, n) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(n):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    if any(mat[i][phi] != 0 for i in range(r, n)):
        raise NonDivisibleConductor(f"element does not lie in Q(zeta_{M})")
    sol = [Fraction(0)] * phi
    for i, c in enumerate(piv_cols):
        sol[c] = mat[i][phi]
    return FieldElement.from_coeffs(M, sol)


def nth_root_in_field(x: Scalar, n: int, M: Optional[int] = None) -> Optional[FieldElement]:
    """Some y in Q(zeta_M) with y^n = x, searched among (root of unity) * (rational radical).

    Only radicands of the form (root of unity) * (rational) are handled; for
    anything else None is returned without a claim of non-existence.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    x = field_element(x)
    if M is None:
        M = x.M
    x = x.embed(M) if M % x.M == 0 else _descend(x, M)
    if not x:
        return FieldElement.rational(0, M)
    units = list(_roots_of_unity(M))
    decomposition = None
    for u in units:
        c = x * u.inverse()
        if c.is_rational():
            decomposition = (u, c.to_fraction())
            break
    if decomposition is None:
        return None
    u, c = decomposition
    radicals = []
    b = _rational_root(abs(c), n)
    if b is not None:
        radicals.append(FieldElement.rational(b, M))
    elif n % 2 == 0:
        b = _rational_root(abs(c), n // 2)
        if b is not None:
            s = sqrt_rational(b, M)
            if s is not None:
                radicals.append(s)
    for s in radicals:
        target = x / s ** n
        for w in units:
            if w ** n == target:
                y = w * s
                assert y ** n == x
                return y
    return None


# ---------------------------------------------------------------------------
# sparse exact linear algebra
# ---------------------------------------------------------------------------

Vector = Dict[int, FieldElement]


def vec_add_scaled(target: Vector, src: Vector, c: FieldElement) -> None:
    """target += c * src, in place, dropping zeros."""
    for k, v in src.items():
        t = target.get(k)
        nv = v * c if t is None else t + v * c
        if nv:
            target[k] = nv
        elif t is not None:
            del target[k]


class Subspace:
    """Incrementally maintained reduced row echelon basis of a span of sparse vectors.

    With ``track=True`` every echelon row also records its expression in terms
    of the vectors passed to :meth:`add`, so membership queries can return
    coordinates with respect to the inserted generators.
    """

    def __init__(self, dim: Optional[int] = None, track: bool = False):
        self.dim = dim
        self.track = track
        self.rows: Dict[int, Vector] = {}
        self.combos: Dict[int, Vector] = {}
        self.inserted = 0
        self.basis: List[Vector] = []

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Vector) -> Tuple[Vector, Vector]:
        v = dict(v)
        combo: Vector = {}
        for p in [p for p in v if p in self.rows]:
            c = v.get(p)
            if c is None:
                continue
            vec_add_scaled(v, self.rows[p], -c)
            if self.track:
                vec_add_scaled(combo, self.combos[p], -c)
        return v, combo

    def reduce(self, v: Vector) -> Vector:
        return self._reduce(v)[0]

    def contains(self, v: Vector) -> bool:
        return not self._reduce(v)[0]

    def add(self, v: Vector) -> bool:
        """Insert v; returns True if it enlarged the span."""
        idx = self.inserted
        self.inserted += 1
        r, combo = self._reduce(v)
        if not r:
            return False
        p = min(r)
        inv = r[p].inverse()
        r = {k: c * inv for k, c in r.items()}
        if self.track:
            combo[idx] = ONE
            combo = {k: c * inv for k, c in combo.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                vec_add_scaled(row, r, -c)
                if self.track:
                    vec_add_scaled(self.combos[q], combo, -c)
        self.rows[p] = r
        if self.track:
            self.combos[p] = combo
        self.basis.append(dict(v))
        return True

    def express(self, v: Vector) -> Optional[Vector]:
        """Coordinates of v over the inserted vectors, or None if v is outside the span."""
        if not self.track:
            raise ValueError("Subspace was created without tracking")
        r, combo = self._reduce(v)
        if r:
            return None
        return {k: -c for k, c in combo.items() if c}

    def echelon(self) -> List[Vector]:
        return [self.rows[p] for p in sorted(self.rows)]

    def kernel_basis(self, ncols: int) -> List[Vector]:
        """Basis of the vectors orthogonal (under the dot product) to every row."""
        pivots = self.rows
        out = []
        for f in range(ncols):
            if f in pivots:
                continue
            v: Vector = {f: ONE}
            for p, row in pivots.items():
                c = row.get(f)
                if c is not None:
                    v[p] = -c
            out.append(v)
        return out


def sparse_kernel(rows: Iterable[Vector], ncols: int) -> List[Vector]:
    """Right null space of the matrix with the given sparse rows."""
    space = Subspace(ncols)
    for row in rows:
        if row:
            space.add(row)
            if space.rank == ncols:
                return []
    return space.kernel_basis(ncols)


class ExactMatrix:
    """Sparse matrix with FieldElement entries."""

    def __init__(self, rows: int, cols: int, entries: Optional[Dict[Tuple[int, int], Scalar]] = None):
        self.rows, self.cols = rows, cols
        self.entries: Dict[Tuple[int, int], FieldElement] = {}
        for (i, j), v in (entries or {}).items():
            v = field_element(v)
            if v:
                self.entries[i, j] = v

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[Scalar]]) -> "ExactMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, {(i, j): v for i, r in enumerate(data) for j, v in enumerate(r)})

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def __getitem__(self, ij: Tuple[int, int]) -> FieldElement:
        return self.entries.get(ij, ZERO)

    def row_vectors(self) -> List[Vector]:
        out: List[Vector] = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        by_row: Dict[int, Vector] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, {})[j] = v
        acc: Dict[Tuple[int, int], FieldElement] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, {}).items():
                t = acc.get((i, j))
                acc[i, j] = a * b if t is None else t + a * b
        return ExactMatrix(self.rows, other.cols, acc)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc[k] + v if k in acc else v
        return ExactMatrix(self.rows, self.cols, acc)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, {k: v * c for k, v in self.entries.items()})

    def __pow__(self, e: int) -> "ExactMatrix":
        out = ExactMatrix.identity(self.rows)
        for _ in range(e):
            out = out @ self
        return out

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        for (i, j), a in self.entries.items():
            c = v.get(j)
            if c is not None:
                t = out.get(i)
                out[i] = a * c if t is None else t + a * c
        return {k: c for k, c in out.items() if c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def rank(self) -> int:
        space = Subspace(self.cols)
        for r in self.row_vectors():
            if r:
                space.add(r)
        return space.rank

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("not square")
        n = self.rows
        aug = Subspace(2 * n)
        for i, r in enumerate(self.row_vectors()):
            row = dict(r)
            row[n + i] = ONE
            aug.add(row)
        if any(p not in aug.rows for p in range(n)):
            raise ZeroDivisionError("singular matrix")
        return ExactMatrix(n, n, {(p, j - n): v for p in range(n) for j, v in aug.rows[p].items() if j >= n})

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


def kernel(A: ExactMatrix) -> List[Tuple[FieldElement, ...]]:
    """Exact basis of the right null space of A, as dense tuples."""
    vecs = sparse_kernel(A.row_vectors(), A.cols)
    return [tuple(v.get(j, ZERO) for j in range(A.cols)) for v in vecs]


def linear_kernel(images: Sequence[dict], ncols: int) -> List[Vector]:
    """Kernel of the linear map sending basis vector k to images[k].

    images[k] is a sparse dict with arbitrary hashable keys (the output
    coordinates).  Returns a basis of {v : sum_k v_k images[k] = 0}.
    """
    rows: Dict[object, Vector] = {}
    for k, img in enumerate(images):
        for key, c in img.items():
            if c:
                rows.setdefault(key, {})[k] = c
    return sparse_kernel(rows.values(), ncols)


def span_rank(vectors: Iterable[Vector]) -> int:
    space = Subspace()
    for v in vectors:
        if v:
            space.add(v)
    return space.rank


def proportional(u: Vector, v: Vector) -> Optional[FieldElement]:
    """c with u = c v, or None (both must be nonzero)."""
    if not u or not v or set(u) != set(v):
        return None
    k = min(v)
    c = u[k] / v[k]
    return c if all(u[i] == c * v[i] for i in v) else None
