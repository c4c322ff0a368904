"""Exact arithmetic in Q(zeta_N)(v), where v is a formal D-th root of q.

A :class:`CycScalar` is stored as a vector of rational functions in v over
the power basis 1, z, ..., z^(phi(m)-1) of a cyclotomic field Q(z), z a
primitive m-th root of unity.  Each value uses the smallest m it needs, so
the common case (m = 1) is a plain rational function.  Rational functions
are kept as v^e * n/d with n, d coprime, n(0) != 0 and d(0) = 1, which
makes equality a cheap structural comparison and keeps Laurent
polynomials (d = 1) free of gcd computations.

:class:`CycNum` is a pure ``Fraction`` implementation of Q(zeta_N) used by
:func:`evaluate`; it shares no code with the flint-backed path and serves as
an independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from flint import fmpq, fmpq_poly

__all__ = [
    "CycNum",
    "CycScalar",
    "FieldContext",
    "LaurentPoly",
    "Monomial",
    "PoleError",
    "cyclotomic_poly",
    "evaluate",
    "euler_phi",
]


class PoleError(ZeroDivisionError):
    """Raised when evaluating at a point where the denominator vanishes."""


# ---------------------------------------------------------------------------
# cyclotomic bookkeeping (plain integers)


def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    assert not any(a), "inexact division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            p = _poly_divexact(p, list(cyclotomic_poly(d)))
    return tuple(p)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds z^e (0 <= e < m) in the power basis of Q(z), z of order m."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by z and reduce with the monic Phi_m
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            nxt = [c - top * phi[j] for j, c in enumerate(nxt)]
        cur = nxt
    return tuple(rows)


def _reduce_order(m: int, k: int) -> tuple[int, int, int]:
    """Write z_m^k as sign * z_{m'}^{k'} with m' minimal (m' odd or 4 | m').

    Returns (sign, m', k').
    """
    k %= m
    g = gcd(m, k) if k else m
    m, k = m // g, k // g
    sign = 1
    if m == 2:
        return -1, 1, 0
    if m % 4 == 2:
        # z_{2h} = -z_h^{(h+1)/2} for odd h
        h = m // 2
        sign = -1 if k % 2 else 1
        k = (k * (h + 1) // 2) % h if k % 2 else (k // 2) % h
        m = h
    return sign, m, k


# ---------------------------------------------------------------------------
# CycNum: Fraction-based oracle arithmetic in Q(zeta_N)


@dataclass(frozen=True)
class CycNum:
    """Element of Q(zeta_N) as a reduced residue modulo Phi_N."""

    n: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_rational(cls, n: int, x) -> "CycNum":
        c = [Fraction(0)] * euler_phi(n)
        c[0] = Fraction(x)
        return cls(n, tuple(c))

    @classmethod
    def zeta_power(cls, n: int, k: int) -> "CycNum":
        return cls(n, tuple(Fraction(c) for c in _power_table(n)[k % n]))

    def _check(self, other: "CycNum") -> None:
        if self.n != other.n:
            raise ValueError("cyclotomic orders differ")

    def __add__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        return CycNum(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycNum":
        return CycNum(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycNum") -> "CycNum":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CycNum):
            return CycNum(self.n, tuple(a * Fraction(other) for a in self.coeffs))
        self._check(other)
        deg = len(self.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        table = _power_table(self.n)
        out = [Fraction(0)] * deg
        for e, c in enumerate(prod):
            if c:
                for j, r in enumerate(table[e]):
                    out[j] += c * r
        return CycNum(self.n, tuple(out))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def galois(self, a: int) -> "CycNum":
        """Image under z -> z^a (gcd(a, N) = 1)."""
        out = CycNum.from_rational(self.n, 0)
        for e, c in enumerate(self.coeffs):
            if c:
                out = out + CycNum.zeta_power(self.n, a * e) * c
        return out

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        other = CycNum.from_rational(self.n, 1)
        for a in range(2, self.n):
            if gcd(a, self.n) == 1:
                other = other * self.galois(a)
        norm = (self * other).coeffs[0]
        return other * (1 / norm)

    def __truediv__(self, other: "CycNum") -> "CycNum":
        return self * other.inverse()

    def __str__(self) -> str:
        return _cyc_str(self.n, self.coeffs)


def _cyc_str(n: int, coeffs: Sequence[Fraction], var: str = "zeta") -> str:
    terms = []
    for e, c in enumerate(coeffs):
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            base = var if e == 1 else f"{var}^{e}"
            terms.append(base if c == 1 else ("-" + base if c == -1 else f"{c}*{base}"))
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# flint-backed rational functions in v


_ONE = fmpq_poly([1])
_ZERO = fmpq_poly([])
# A rational function is a triple (n, d, e) standing for v^e * n / d with
# n(0) != 0, d(0) = 1 and gcd(n, d) = 1; zero is (0, 1, 0).  Laurent
# polynomials then have d = 1 and never touch a gcd.
_RF = tuple
_RF_ZERO = (_ZERO, _ONE, 0)


def _low(p: fmpq_poly) -> int:
    k = 0
    while p[k] == 0:
        k += 1
    return k


def _rf_norm(n: fmpq_poly, d: fmpq_poly, e: int) -> _RF:
    if n == 0:
        return _RF_ZERO
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if n[0] == 0:
        k = _low(n)
        n, e = n.right_shift(k), e + k
    if d[0] == 0:
        k = _low(d)
        d, e = d.right_shift(k), e - k
    if d.degree() > 0:
        g = n.gcd(d)
        if g.degree() > 0:
            n, d = n // g, d // g
    c = d[0]
    if c != 1:
        n, d = n / c, d / c
    return (n, d, e)


def _rf_add(a: _RF, b: _RF) -> _RF:
    if a[0] == 0:
        return b
    if b[0] == 0:
        return a
    na, da, ea = a
    nb, db, eb = b
    if ea > eb:
        na, e = na.left_shift(ea - eb), eb
    elif eb > ea:
        nb, e = nb.left_shift(eb - ea), ea
    else:
        e = ea
    if da == db:
        n = na + nb
        if n == 0:
            return _RF_ZERO
        if da.degree() == 0:
            if n[0] == 0:
                k = _low(n)
                n, e = n.right_shift(k), e + k
            return (n, _ONE, e)
        return _rf_norm(n, da, e)
    return _rf_norm(na * db + nb * da, da * db, e)


def _rf_mul(a: _RF, b: _RF) -> _RF:
    if a[0] == 0 or b[0] == 0:
        return _RF_ZERO
    if a[1].degree() == 0 and b[1].degree() == 0:
        return (a[0] * b[0], _ONE, a[2] + b[2])
    return _rf_norm(a[0] * b[0], a[1] * b[1], a[2] + b[2])


def _rf_inv(a: _RF) -> _RF:
    n, d, e = a
    c = n[0]
    return (d / c, n / c, -e)


def _rf_neg(a: _RF) -> _RF:
    return (-a[0], a[1], a[2])


def _rf_scale(a: _RF, c: int) -> _RF:
    if c == 0 or a[0] == 0:
        return _RF_ZERO
    return (a[0] * c, a[1], a[2])


def _vpow(k: int) -> _RF:
    return (_ONE, _ONE, k)


def _lift(coeffs: tuple, m: int, m2: int) -> tuple:
    """Re-express an element of Q(z_m) in the power basis of Q(z_{m2}), m | m2."""
    if m == m2:
        return coeffs
    step = m2 // m
    table = _power_table(m2)
    out = [_RF_ZERO] * euler_phi(m2)
    for e, c in enumerate(coeffs):
        if c[0] == 0:
            continue
        for j, r in enumerate(table[(e * step) % m2]):
            if r:
                out[j] = _rf_add(out[j], _rf_scale(c, r))
    return tuple(out)


def _fmpq_to_fraction(x: fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


class CycScalar:
    """Immutable element of Q(zeta)(v)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: tuple):
        # demote to the rationals when only the constant slot is populated
        if order > 1 and all(c[0] == 0 for c in coeffs[1:]):
            order, coeffs = 1, coeffs[:1]
        self.order = order
        self.coeffs = coeffs

    # construction -----------------------------------------------------
    @classmethod
    def from_fraction(cls, x) -> "CycScalar":
        x = Fraction(x)
        if not x:
            return _ZERO_S
        return cls(1, ((fmpq_poly([fmpq(x.numerator, x.denominator)]), _ONE, 0),))

    @classmethod
    def zero(cls) -> "CycScalar":
        return _ZERO_S

    @classmethod
    def one(cls) -> "CycScalar":
        return _ONE_S

    @classmethod
    def v_power(cls, k: int) -> "CycScalar":
        return cls(1, (_vpow(k),))

    @classmethod
    def root_of_unity(cls, n: int, k: int, v_pow: int = 0) -> "CycScalar":
        """The value zeta_n^k * v^v_pow."""
        sign, m, kk = _reduce_order(n, k)
        base = _vpow(v_pow)
        if sign < 0:
            base = _rf_neg(base)
        if m == 1:
            return cls(1, (base,))
        row = _power_table(m)[kk]
        return cls(m, tuple(_rf_scale(base, r) for r in row))

    # arithmetic -------------------------------------------------------
    def _align(self, other: "CycScalar") -> tuple[int, tuple, tuple]:
        if self.order == other.order:
            return self.order, self.coeffs, other.coeffs
        m = self.order * other.order // gcd(self.order, other.order)
        return m, _lift(self.coeffs, self.order, m), _lift(other.coeffs, other.order, m)

    def __add__(self, other) -> "CycScalar":
        other = _coerce(other)
        if self.order == 1 and other.order == 1:
            return CycScalar(1, (_rf_add(self.coeffs[0], other.coeffs[0]),))
        m, a, b = self._align(other)
        return CycScalar(m, tuple(_rf_add(x, y) for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        return CycScalar(self.order, tuple(_rf_neg(c) for c in self.coeffs))

    def __sub__(self, other) -> "CycScalar":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "CycScalar":
        return _coerce(other) - self

    def __mul__(self, other) -> "CycScalar":
        other = _coerce(other)
        if self.order == 1 and other.order == 1:
            return CycScalar(1, (_rf_mul(self.coeffs[0], other.coeffs[0]),))
        m, a, b = self._align(other)
        deg = len(a)
        prod = [_RF_ZERO] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x[0] == 0:
                continue
            for j, y in enumerate(b):
                if y[0] != 0:
                    prod[i + j] = _rf_add(prod[i + j], _rf_mul(x, y))
        table = _power_table(m)
        out = [_RF_ZERO] * deg
        for e, c in enumerate(prod):
            if c[0] == 0:
                continue
            for j, r in enumerate(table[e]):
                if r:
                    out[j] = _rf_add(out[j], _rf_scale(c, r))
        return CycScalar(m, tuple(out))

    __rmul__ = __mul__

    def galois(self, a: int) -> "CycScalar":
        """Apply z -> z^a, fixing v."""
        if self.order == 1:
            return self
        m = self.order
        table = _power_table(m)
        out = [_RF_ZERO] * len(self.coeffs)
        for e, c in enumerate(self.coeffs):
            if c[0] == 0:
                continue
            for j, r in enumerate(table[(a * e) % m]):
                if r:
                    out[j] = _rf_add(out[j], _rf_scale(c, r))
        return CycScalar(m, tuple(out))

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero CycScalar")
        if self.order == 1:
            return CycScalar(1, (_rf_inv(self.coeffs[0]),))
        # product of the other Galois conjugates, divided by the norm
        other = _ONE_S
        for a in range(2, self.order):
            if gcd(a, self.order) == 1:
                other = other * self.galois(a)
        norm = self * other
        assert norm.order == 1
        return other * norm.inverse()

    def __truediv__(self, other) -> "CycScalar":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "CycScalar":
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "CycScalar":
        base = self if k >= 0 else self.inverse()
        out, k = _ONE_S, abs(k)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.order == 1 and self.coeffs[0][0] == 0

    def is_one(self) -> bool:
        c = self.coeffs[0]
        return self.order == 1 and c[2] == 0 and c[1].degree() == 0 and c[0] == 1

    def complexity(self) -> int:
        """Rough size measure used for pivot selection; monomials score lowest."""
        out = 0
        for n, d, _ in self.coeffs:
            if n != 0:
                out += n.length() + 4 * d.degree()
        return out + 8 * (self.order > 1)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycScalar):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        m, a, b = self._align(other)
        return a == b

    __hash__ = None  # type: ignore[assignment]

    # conversion -------------------------------------------------------
    def canonical(self) -> "CycScalar":
        """Re-normalize every coefficient (a no-op on values built by this module)."""
        return CycScalar(self.order, tuple(_rf_norm(*c) for c in self.coeffs))

    def rf_coeffs(self) -> list[tuple[list[Fraction], list[Fraction], int]]:
        """Coefficients as (num, den, e) meaning v^e * num / den, Fraction lists low degree first."""
        return [
            ([_fmpq_to_fraction(c) for c in n.coeffs()], [_fmpq_to_fraction(c) for c in d.coeffs()], e)
            for n, d, e in self.coeffs
        ]

    def as_fraction(self, n: int) -> tuple["LaurentPoly", "LaurentPoly"]:
        """Return (num, den) Laurent polynomials over Q(zeta_n).

        The denominator has constant term 1 and no v-power factor; the
        common v-power is carried by the numerator.
        """
        if n % self.order:
            raise ValueError(f"value needs zeta_{self.order}, not available in Q(zeta_{n})")
        den = _ONE
        for _, d, _e in self.coeffs:
            den = den * d // den.gcd(d)
        den = den / den[0]
        step = n // self.order
        num_terms: dict[int, CycNum] = {}
        for k, (cn, cd, ce) in enumerate(self.coeffs):
            if cn == 0:
                continue
            part = cn * (den // cd)
            z = CycNum.zeta_power(n, k * step)
            for j, c in enumerate(part.coeffs()):
                if c != 0:
                    term = z * _fmpq_to_fraction(c)
                    key = j + ce
                    num_terms[key] = num_terms[key] + term if key in num_terms else term
        den_terms = {
            j: CycNum.from_rational(n, _fmpq_to_fraction(c))
            for j, c in enumerate(den.coeffs())
            if c != 0
        }
        return LaurentPoly(num_terms), LaurentPoly(den_terms)

    def to_string(self, n: int = 12) -> str:
        num, den = self.as_fraction(n)
        if den.is_one():
            return str(num)
        return f"({num})/({den})"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        try:
            return self.to_string(max(12, self.order) if 12 % self.order else 12)
        except ValueError:
            return self.to_string(self.order)

    def __repr__(self) -> str:
        return f"CycScalar({self})"


def _coerce(x) -> CycScalar:
    if isinstance(x, CycScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return CycScalar.from_fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to CycScalar")


_ZERO_S = CycScalar(1, (_RF_ZERO,))
_ONE_S = CycScalar(1, ((_ONE, _ONE, 0),))


# ---------------------------------------------------------------------------
# Laurent polynomials with CycNum coefficients (serialization carrier)


class LaurentPoly:
    """Finitely supported map v-exponent -> CycNum with no zero entries."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, CycNum]):
        self.terms = {k: c for k, c in sorted(terms.items()) if not c.is_zero()}

    def is_one(self) -> bool:
        return list(self.terms) == [0] and self.terms[0].coeffs[0] == 1 and not any(self.terms[0].coeffs[1:])

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def evaluate(self, v0: Fraction) -> CycNum:
        n = next(iter(self.terms.values())).n if self.terms else 1
        out = CycNum.from_rational(n, 0)
        for k, c in self.terms.items():
            out = out + c * (Fraction(v0) ** k)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.terms.items():
            cs = str(c)
            nonzero = sum(1 for x in c.coeffs if x)
            vpart = "" if k == 0 else ("v" if k == 1 else f"v^{k}")
            if not vpart:
                parts.append(cs if nonzero == 1 else f"({cs})")
            elif cs == "1":
                parts.append(vpart)
            elif cs == "-1":
                parts.append("-" + vpart)
            else:
                parts.append(f"{cs if nonzero == 1 else '(' + cs + ')'}*{vpart}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# evaluation oracle


def _eval_poly(coeffs: Iterable[Fraction], v0: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * v0 + c
    return acc


def evaluate(a: CycScalar, v0, n: int = 12) -> CycNum:
    """Substitute v = v0 (a nonzero rational) and return the value in Q(zeta_n)."""
    v0 = Fraction(v0)
    if n % a.order:
        raise ValueError(f"value needs zeta_{a.order}")
    step = n // a.order
    out = CycNum.from_rational(n, 0)
    if v0 == 0:
        raise PoleError("v = 0 is never a valid evaluation point")
    for e, (num, den, shift) in enumerate(a.rf_coeffs()):
        dv = _eval_poly(den, v0)
        if dv == 0:
            raise PoleError(f"denominator vanishes at v = {v0}")
        nv = _eval_poly(num, v0) * v0**shift
        if nv:
            out = out + CycNum.zeta_power(n, e * step) * (nv / dv)
    return out


# ---------------------------------------------------------------------------
# monomials and the ambient field context


@dataclass(frozen=True, order=True)
class Monomial:
    """The value zeta_n^zeta_pow * v^v_pow; ``zeta_pow`` is kept reduced mod n."""

    zeta_pow: int
    v_pow: int
    n: int = 12

    def __post_init__(self):
        object.__setattr__(self, "zeta_pow", self.zeta_pow % self.n)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.n != other.n:
            raise ValueError("monomials over different cyclotomic orders")
        return Monomial(self.zeta_pow + other.zeta_pow, self.v_pow + other.v_pow, self.n)

    def inverse(self) -> "Monomial":
        return Monomial(-self.zeta_pow, -self.v_pow, self.n)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.zeta_pow * k, self.v_pow * k, self.n)

    def is_one(self) -> bool:
        return self.zeta_pow == 0 and self.v_pow == 0

    def embed(self) -> CycScalar:
        return CycScalar.root_of_unity(self.n, self.zeta_pow, self.v_pow)

    def root_order(self) -> int:
        """Multiplicative order of the root-of-unity part."""
        return self.n // gcd(self.n, self.zeta_pow)

    def __str__(self) -> str:
        return f"zeta^{self.zeta_pow} * v^{self.v_pow}"


@dataclass(frozen=True)
class FieldContext:
    """Cyclotomic order N and q-root denominator D (q = v^D)."""

    n: int = 12
    d: int = 6

    def mono(self, zeta_pow: int = 0, v_pow: int = 0) -> Monomial:
        return Monomial(zeta_pow, v_pow, self.n)

    def q_mono(self, k: int = 1) -> Monomial:
        """The monomial q^k."""
        return Monomial(0, self.d * k, self.n)

    def one_mono(self) -> Monomial:
        return Monomial(0, 0, self.n)

    @property
    def q(self) -> CycScalar:
        return CycScalar.v_power(self.d)

    @property
    def qinv(self) -> CycScalar:
        return CycScalar.v_power(-self.d)

    @property
    def qdiff(self) -> CycScalar:
        """q - q^{-1}, ubiquitous in the Hecke relations."""
        return CycScalar.v_power(self.d) - CycScalar.v_power(-self.d)

    def scalar_str(self, a: CycScalar) -> str:
        return a.to_string(self.n)
