"""Catalog of central characters with their expected irreducible modules.

Values are stored symbolically so that the same catalog can be realized for
any admissible (N, D): a value is zeta^(turn * N) * q^qexp, optionally times
a power of the fresh generic v-exponent g chosen by :func:`generic_exponent`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..rootdata import RootSystem, Vec, root_system
from ..scalars import FieldContext, Monomial
from ..torus import TorusWeight, from_alpha_values, pz_sets


class ConfigError(ValueError):
    """The field (N, D) cannot realize a fixture value."""


class FixtureValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Value:
    turn: Fraction = Fraction(0)
    qexp: Fraction = Fraction(0)
    generic: int = 0

    @classmethod
    def parse(cls, text: str) -> "Value":
        """Parse tokens like ``1``, ``-1``, ``q^2``, ``q^-2/3``, ``z^1/3``, ``g``.

        ``z^r`` is the root of unity exp(2 pi i r).
        """
        turn, qexp, gen = Fraction(0), Fraction(0), 0
        for tok in text.split():
            if tok == "1":
                continue
            if tok == "-1":
                turn += Fraction(1, 2)
            elif tok == "g":
                gen += 1
            elif tok == "q":
                qexp += 1
            elif m := re.fullmatch(r"([qz])\^(-?\d+(?:/\d+)?)", tok):
                x = Fraction(m.group(2))
                if m.group(1) == "q":
                    qexp += x
                else:
                    turn += x
            else:
                raise ValueError(f"bad value token {tok!r}")
        return cls(turn % 1, qexp, gen)

    def realize(self, ctx: FieldContext, k: int) -> Monomial:
        z = self.turn * ctx.n
        v = self.qexp * ctx.d
        if z.denominator != 1:
            raise ConfigError(f"N={ctx.n} has no root of unity of order {self.turn.denominator}")
        if v.denominator != 1:
            raise ConfigError(f"D={ctx.d} cannot express q^{self.qexp}")
        return Monomial(int(z), int(v) + self.generic * k, ctx.n)

    def __str__(self) -> str:
        parts = []
        if self.turn:
            parts.append("-1" if self.turn == Fraction(1, 2) else f"z^{self.turn}")
        if self.qexp:
            parts.append("q" if self.qexp == 1 else f"q^{self.qexp}")
        if self.generic:
            parts.append("g" if self.generic == 1 else f"g^{self.generic}")
        return " ".join(parts) or "1"


@dataclass(frozen=True)
class ExpectedModule:
    dim: int
    J: tuple[str, ...] | None  # None marks a non-calibrated row
    tempered: bool
    square_integrable: bool
    support: tuple[tuple[str, int], ...]
    langlands: str
    triple: str
    multiplicity: int | None = None  # only asserted where it is known
    note: str = ""

    @property
    def calibrated(self) -> bool:
        return self.J is not None


@dataclass(frozen=True)
class FixtureSpec:
    label: str
    system: str
    basis: str  # "alpha" or "omega"
    values: tuple[Value, ...]
    P: tuple[str, ...]
    Z: tuple[str, ...]
    modules: tuple[ExpectedModule, ...]
    components: tuple[tuple[str, ...], ...]  # calibration graph components by orbit word
    induction: int | None = None
    comment: str = ""


@dataclass(frozen=True, eq=False)
class CentralCharFixture:
    spec: FixtureSpec
    omega_values: TorusWeight
    generic_k: int | None
    ctx: FieldContext = field(repr=False)

    @property
    def label(self) -> str:
        return self.spec.label

    @property
    def system(self) -> str:
        return self.spec.system

    @property
    def rs(self) -> RootSystem:
        return root_system(self.spec.system)

    @property
    def expected_P(self) -> frozenset[Vec]:
        return frozenset(self.rs.parse_root(r) for r in self.spec.P)

    @property
    def expected_Z(self) -> frozenset[Vec]:
        return frozenset(self.rs.parse_root(r) for r in self.spec.Z)

    @property
    def expected_modules(self) -> tuple[ExpectedModule, ...]:
        return self.spec.modules

    @property
    def metadata(self) -> dict:
        return {
            "langlands": [m.langlands for m in self.spec.modules],
            "indexing_triple": [m.triple for m in self.spec.modules],
        }


# ---------------------------------------------------------------------------
# realization of symbolic values


def _weight(rs: RootSystem, basis: str, vals: Sequence[Value], ctx: FieldContext, k: int) -> TorusWeight:
    monos = [v.realize(ctx, k) for v in vals]
    if basis == "omega":
        return TorusWeight(tuple(monos))
    return from_alpha_values(rs, monos)


def generic_exponent(spec: FixtureSpec, ctx: FieldContext, limit: int | None = None) -> int | None:
    """Smallest positive v-exponent realizing exactly the fixture's P and Z.

    Returns None for fixtures without a generic value.
    """
    if not any(v.generic for v in spec.values):
        return None
    rs = root_system(spec.system)
    want = (frozenset(rs.parse_root(r) for r in spec.P), frozenset(rs.parse_root(r) for r in spec.Z))
    limit = limit or 4 * ctx.d * ctx.n
    for k in range(1, limit + 1):
        try:
            t = _weight(rs, spec.basis, spec.values, ctx, k)
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            continue
        if pz_sets(rs, t, ctx) == want:
            return k
    raise ConfigError(f"{spec.label}: no generic exponent up to {limit}")


def realize(spec: FixtureSpec, ctx: FieldContext) -> CentralCharFixture:
    rs = root_system(spec.system)
    k = generic_exponent(spec, ctx)
    try:
        t = _weight(rs, spec.basis, spec.values, ctx, k or 0)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{spec.label}: {exc}") from exc
    return CentralCharFixture(spec, t, k, ctx)


def validate(f: CentralCharFixture) -> None:
    """Raise FixtureValidationError unless P(t), Z(t) are the tabulated sets."""
    P, Z = pz_sets(f.rs, f.omega_values, f.ctx)
    if (P, Z) != (f.expected_P, f.expected_Z):
        rs = f.rs
        got = (sorted(rs.root_name(b) for b in P), sorted(rs.root_name(b) for b in Z))
        raise FixtureValidationError(f"{f.label}: P/Z are {got}, expected {(list(f.spec.P), list(f.spec.Z))}")


# ---------------------------------------------------------------------------
# the catalog


def _V(*tokens: str) -> tuple[Value, ...]:
    return tuple(Value.parse(t) for t in tokens)


def _M(dim, J, temp, sqint, support, langlands, triple, mult=None, note="") -> ExpectedModule:
    J = None if J == "nc" else tuple(J)
    sup = tuple((w, int(c)) for w, c in (s.split(":") for s in support.split()))
    return ExpectedModule(dim, J, temp, sqint, sup, langlands, triple, mult, note)


# the tabulated "square integrable: yes" is contradicted by <omega_1, nu> = 0 at s2s1 t_b
_TB_NOTE = "table lists square integrable; weight s2s1 t_b has <omega_1, nu> = 0"


def _C(text: str) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(c.split(",")) for c in text.split())


_SPECS: list[FixtureSpec] = [
    # A1, values on omega_1
    FixtureSpec(
        "A1.t_a", "A1", "omega", _V("q"), ("a1",), (),
        (
            _M(1, [], False, False, "e:1", "(t_a,{})", "(t_a,0,1)"),
            _M(1, ["a1"], True, True, "s1:1", "tempered", "(t_a,e_a1,1)"),
        ),
        _C("e s1"),
    ),
    FixtureSpec(
        "A1.t_b", "A1", "omega", _V("g"), (), (),
        (_M(2, [], False, False, "e:1 s1:1", "(t_b,{})", "(t_b,0,1)"),),
        _C("e,s1"),
    ),
    FixtureSpec(
        "A1.t_o+", "A1", "omega", _V("1"), (), ("a1",),
        (_M(2, "nc", True, False, "e:2", "tempered", "(t_o,0,1)"),),
        _C("e"),
    ),
    FixtureSpec(
        "A1.t_o-", "A1", "omega", _V("-1"), (), ("a1",),
        (_M(2, "nc", True, False, "e:2", "tempered", "(t_o,0,1)"),),
        _C("e"),
        comment="second unitary point with t(X^a1) = 1; same graph as t_o",
    ),
    # A2, values on alpha_1, alpha_2
    FixtureSpec(
        "A2.t_a", "A2", "alpha", _V("q^2", "q^2"), ("a1", "a2"), (),
        (
            _M(1, [], False, False, "e:1", "(t_a,{})", "(t_a,0,1)"),
            _M(2, ["a2"], False, False, "s2:1 s1s2:1", "(s_1t_a,{2})", "(t_a,e_a2,1)"),
            _M(2, ["a1"], False, False, "s1:1 s2s1:1", "(s_2t_a,{1})", "(t_a,e_a1,1)"),
            _M(1, ["a1", "a2"], True, True, "s1s2s1:1", "tempered", "(t_a,e_a1+e_a2,1)"),
        ),
        _C("e s1,s2s1 s2,s1s2 s1s2s1"),
    ),
    FixtureSpec(
        "A2.t_b", "A2", "alpha", _V("g", "q^2"), ("a2",), (),
        (
            _M(3, [], False, False, "e:1 s1:1 s2s1:1", "(t_b,{})", "(t_b,0,1)"),
            _M(3, ["a2"], False, False, "s2:1 s1s2:1 s1s2s1:1", "(s_2t_b,{2})", "(t_b,e_a2,1)"),
        ),
        _C("e,s1,s2s1 s2,s1s2,s1s2s1"),
    ),
    FixtureSpec(
        "A2.t_b*", "A2", "alpha", _V("q^-1", "q^2"), ("a2",), (),
        (
            _M(3, [], False, False, "e:1 s1:1 s2s1:1", "(t_b,{})", "(t_b,0,1)"),
            _M(3, ["a2"], True, False, "s2:1 s1s2:1 s1s2s1:1", "(s_2t_b,{2})", "(s_2s_1t,e_a2,1)"),
        ),
        _C("e,s1,s2s1 s2,s1s2,s1s2s1"),
        comment="special case of t_b whose J={a2} module is tempered",
    ),
    FixtureSpec(
        "A2.t_c", "A2", "alpha", _V("1", "q^2"), ("a2", "a1+a2"), ("a1",),
        (
            _M(3, "nc", False, False, "e:2 s2:1", "(t_c,{1})", "(t_c,0,1)"),
            _M(3, "nc", False, False, "s2:1 s1s2:2", "(s_2t_c,{2})", "(t_c,e_a2,1)"),
        ),
        _C("e s2 s1s2"),
        induction=2,
    ),
    FixtureSpec(
        "A2.t_d", "A2", "alpha", _V("q^2", "1"), ("a1", "a1+a2"), ("a2",),
        (
            _M(3, "nc", False, False, "e:2 s1:1", "(t_d,{2})", "(t_d,0,1)"),
            _M(3, "nc", False, False, "s1:1 s2s1:2", "(s_1t_d,{1})", "(t_d,e_a1,1)"),
        ),
        _C("e s1 s2s1"),
        induction=1,
    ),
    FixtureSpec(
        "A2.t_e", "A2", "alpha", _V("1", "g"), (), ("a1",),
        (_M(6, "nc", False, False, "e:2 s2:2 s1s2:2", "(t_e,{1})", "(t_e,0,1)"),),
        _C("e,s2,s1s2"),
    ),
    FixtureSpec(
        "A2.t_f", "A2", "alpha", _V("g", "1"), (), ("a2",),
        (_M(6, "nc", False, False, "e:2 s1:2 s2s1:2", "(t_f,{2})", "(t_f,0,1)"),),
        _C("e,s1,s2s1"),
    ),
    FixtureSpec(
        "A2.t_g", "A2", "alpha", _V("g", "g"), (), (),
        (_M(6, [], False, False, "e:1 s1:1 s2:1 s1s2:1 s2s1:1 s1s2s1:1", "(t_g,{})", "(t_g,0,1)"),),
        _C("e,s1,s2,s1s2,s2s1,s1s2s1"),
    ),
    FixtureSpec(
        "A2.t_o", "A2", "alpha", _V("1", "1"), (), ("a1", "a2", "a1+a2"),
        (_M(6, "nc", True, False, "e:6", "tempered", "(t_o,0,1)"),),
        _C("e"),
    ),
    # C2, alpha_1 long
    FixtureSpec(
        "C2.t_a", "C2", "alpha", _V("q^2", "q^2"), ("a1", "a2"), (),
        (
            _M(1, [], False, False, "e:1", "(s_1s_2s_1s_2t_a,{})", "(t_a,0,1)"),
            _M(3, ["a1"], False, False, "s1:1 s2s1:1 s1s2s1:1", "(s_1t_a,{1})", "(t_a,e_a1,1)"),
            _M(3, ["a2"], False, False, "s2:1 s1s2:1 s2s1s2:1", "(s_2t_a,{2})", "(t_a,e_a2,1)"),
            _M(1, ["a1", "a2"], True, True, "s1s2s1s2:1", "tempered", "(t_a,e_a1+e_a2,1)"),
        ),
        _C("e s1,s2s1,s1s2s1 s2,s1s2,s2s1s2 s1s2s1s2"),
    ),
    FixtureSpec(
        "C2.t_b", "C2", "alpha", _V("q^2", "1"), ("a1", "a1+a2", "a1+2a2"), ("a2",),
        (
            _M(3, "nc", False, False, "e:2 s1:1", "(t_b,{2})", "(t_b,0,1)"),
            _M(1, ["a1"], False, False, "s1:1", "(s_1t_b,{1})", "(t_b,e_a1,1)"),
            _M(1, ["a1", "a1+a2"], True, False, "s2s1:1", "tempered", "(t_b,e_a1+a2,-1)", note=_TB_NOTE),
            _M(3, "nc", True, False, "s2s1:1 s1s2s1:2", "tempered", "(t_b,e_a1+a2,1)", note=_TB_NOTE),
        ),
        _C("e s1 s2s1 s1s2s1"),
        induction=1,
    ),
    FixtureSpec(
        "C2.t_c", "C2", "alpha", _V("q^2", "-1"), ("a1", "a1+2a2"), (),
        (
            _M(2, [], False, False, "e:1 s2:1", "(t_c,{2})", "(t_c,0,1)"),
            _M(2, ["a1"], False, False, "s1:1 s2s1:1", "(s_1t_c,{1})", "(t_c,e_a1,1)"),
            _M(2, ["a1+2a2"], False, False, "s1s2:1 s2s1s2:1", "(s_1s_2t_c,{1})", "(t_c,e_a1+2a2,1)"),
            _M(2, ["a1", "a1+2a2"], True, True, "s1s2s1:1 s1s2s1s2:1", "tempered", "(t_c,e_a1+e_a1+2a2,1)"),
        ),
        _C("e,s2 s1,s2s1 s1s2,s2s1s2 s1s2s1,s1s2s1s2"),
        comment="alpha_2-value -1 is the unique monomial with P = {a1, a1+2a2} and Z empty",
    ),
    FixtureSpec(
        "C2.t_d", "C2", "alpha", _V("1", "q^2"), ("a2", "a1+a2"), ("a1",),
        (
            _M(4, "nc", False, False, "e:2 s2:1 s1s2:1", "(t_d,{1})", "(t_d,0,1)"),
            _M(4, "nc", False, False, "s2:1 s1s2:1 s2s1s2:2", "(s_2t_d,{2})", "(t_d,e_a2,1)"),
        ),
        _C("e s2,s1s2 s2s1s2"),
        induction=2,
    ),
    FixtureSpec(
        "C2.t_e", "C2", "alpha", _V("q^2", "q^-1"), ("a1",), ("a1+2a2",),
        (
            _M(4, "nc", False, False, "e:2 s2:2", "(s_2t_e,{1})", "(t_e,0,1)"),
            _M(4, "nc", True, False, "s1:2 s2s1:2", "tempered", "(t_e,e_a1,1)"),
        ),
        _C("e,s2 s1,s2s1"),
        induction=1,
    ),
    FixtureSpec(
        "C2.t_f", "C2", "alpha", _V("q^2", "g"), ("a1",), (),
        (
            _M(4, [], False, False, "e:1 s2:1 s1s2:1 s2s1s2:1", "(t_f,{})", "(t_f,0,1)"),
            _M(4, ["a1"], False, False, "s1:1 s2s1:1 s1s2s1:1 s1s2s1s2:1", "(s_1t_f,{1})", "(t_f,e_a1,1)"),
        ),
        _C("e,s2,s1s2,s2s1s2 s1,s2s1,s1s2s1,s1s2s1s2"),
    ),
    FixtureSpec(
        "C2.t_g", "C2", "alpha", _V("g", "q^2"), ("a2",), (),
        (
            _M(4, [], False, False, "e:1 s1:1 s2s1:1 s1s2s1:1", "(t_g,{})", "(t_g,0,1)"),
            _M(4, ["a2"], False, False, "s2:1 s1s2:1 s2s1s2:1 s1s2s1s2:1", "(s_2t_g,{2})", "(t_g,e_a2,1)"),
        ),
        _C("e,s1,s2s1,s1s2s1 s2,s1s2,s2s1s2,s1s2s1s2"),
    ),
    # G2, alpha_1 long
    FixtureSpec(
        "G2.t_a", "G2", "alpha", _V("q^2", "q^2"), ("a1", "a2"), (),
        (
            _M(1, [], False, False, "e:1", "(t_a,{})", "(t_a,0,1)"),
            _M(5, ["a1"], False, False, "s1:1 s2s1:1 s1s2s1:1 s2s1s2s1:1 s1s2s1s2s1:1", "(s_1t_a,{1})", "(t_a,e_a1,1)"),
            _M(5, ["a2"], False, False, "s2:1 s1s2:1 s2s1s2:1 s1s2s1s2:1 s2s1s2s1s2:1", "(s_2t_a,{2})", "(t_a,e_a2,1)"),
            _M(1, ["a1", "a2"], True, True, "s1s2s1s2s1s2:1", "tempered", "(t_a,e_a1+e_a2,1)"),
        ),
        _C("e s1,s2s1,s1s2s1,s2s1s2s1,s1s2s1s2s1 s2,s1s2,s2s1s2,s1s2s1s2,s2s1s2s1s2 s1s2s1s2s1s2"),
    ),
    FixtureSpec(
        "G2.t_b", "G2", "alpha", _V("q^2", "g"), ("a1",), (),
        (
            _M(6, [], False, False, "e:1 s2:1 s1s2:1 s2s1s2:1 s1s2s1s2:1 s2s1s2s1s2:1", "(t_b,{})", "(t_b,0,1)"),
            _M(6, ["a1"], False, False, "s1:1 s2s1:1 s1s2s1:1 s2s1s2s1:1 s1s2s1s2s1:1 s1s2s1s2s1s2:1",
               "(s_1t_b,{1})", "(t_b,e_a1,1)"),
        ),
        _C("e,s2,s1s2,s2s1s2,s1s2s1s2,s2s1s2s1s2 s1,s2s1,s1s2s1,s2s1s2s1,s1s2s1s2s1,s1s2s1s2s1s2"),
    ),
    FixtureSpec(
        "G2.t_c", "G2", "alpha", _V("q^2", "z^1/3"), ("a1", "a1+3a2"), (),
        (
            _M(2, [], False, False, "e:1 s2:1", "(t_c,{2})", "(t_c,0,1)"),
            _M(4, ["a1"], False, False, "s1:1 s2s1:1 s1s2s1:1 s2s1s2s1:1", "(s_1t_c,{1})", "(t_c,e_a1,1)"),
            _M(4, ["a1+3a2"], False, False, "s1s2:1 s2s1s2:1 s1s2s1s2:1 s2s1s2s1s2:1",
               "(s_1s_2t_c,{1})", "(t_c,e_a1+3a2,1)"),
            _M(2, ["a1", "a1+3a2"], True, True, "s1s2s1s2s1:1 s1s2s1s2s1s2:1", "tempered",
               "(t_c,e_a1+e_a1+3a2,1)"),
        ),
        _C("e,s2 s1,s2s1,s1s2s1,s2s1s2s1 s1s2,s2s1s2,s1s2s1s2,s2s1s2s1s2 s1s2s1s2s1,s1s2s1s2s1s2"),
    ),
    FixtureSpec(
        "G2.t_d", "G2", "alpha", _V("q^2", "-1"), ("a1", "a1+2a2"), (),
        (
            _M(3, [], False, False, "e:1 s2:1 s1s2:1", "(t_d,{2})", "(t_d,0,1)"),
            _M(3, ["a1"], False, False, "s1:1 s2s1:1 s1s2s1:1", "(s_1t_d,{1})", "(t_d,e_a1,1)"),
            _M(3, ["a1+2a2"], False, False, "s2s1s2:1 s1s2s1s2:1 s2s1s2s1s2:1",
               "(s_2s_1s_2t_d,{2})", "(t_d,e_a1+2a2,1)"),
            _M(3, ["a1", "a1+2a2"], True, True, "s2s1s2s1:1 s1s2s1s2s1:1 s1s2s1s2s1s2:1", "tempered",
               "(t_d,e_a1+e_a1+2a2,1)"),
        ),
        _C("e,s2,s1s2 s1,s2s1,s1s2s1 s2s1s2,s1s2s1s2,s2s1s2s1s2 s2s1s2s1,s1s2s1s2s1,s1s2s1s2s1s2"),
    ),
    FixtureSpec(
        "G2.t_e", "G2", "alpha", _V("q^2", "1"), ("a1", "a1+a2", "a1+2a2", "a1+3a2"), ("a2",),
        (
            _M(3, "nc", False, False, "e:2 s1:1", "(t_e,{2})", "(t_e,0,1)"),
            _M(1, ["a1"], False, False, "s1:1", "(s_1t_e,{1})", "(t_e,e_a1,1)"),
            _M(2, ["a1", "a1+a2"], False, False, "s2s1:1 s1s2s1:1", "(s_2s_1t_e,{2})", "(t_e,e_a1+a2,1)", 2),
            _M(1, ["a1", "a1+a2", "a1+2a2"], True, True, "s2s1s2s1:1", "tempered",
               "(t_e,e_a1+e_a1+2a2,(21))"),
            _M(3, "nc", True, True, "s2s1s2s1:1 s1s2s1s2s1:2", "tempered", "(t_e,e_a1+e_a1+2a2,(3))"),
        ),
        _C("e s1 s2s1,s1s2s1 s2s1s2s1 s1s2s1s2s1"),
    ),
    FixtureSpec(
        "G2.t_f", "G2", "alpha", _V("q^2", "q^-2/3"), ("a1", "2a1+3a2"), ("a1+3a2",),
        (
            _M(6, "nc", False, False, "e:2 s2:2 s1:1 s2s1:1", "(t_f,{1})", "(t_f,0,1)"),
            _M(6, "nc", False, False, "s1:1 s2s1:1 s1s2s1:2 s2s1s2s1:2", "(s_1t_f,{1})", "(t_f,e_a1,1)"),
        ),
        _C("e,s2 s1,s2s1 s1s2s1,s2s1s2s1"),
        induction=1,
    ),
    FixtureSpec(
        "G2.t_g", "G2", "alpha", _V("q^2", "q^-1"), ("a1",), ("a1+2a2",),
        (
            _M(6, "nc", False, False, "e:2 s2:2 s1s2:2", "(t_g,{2})", "(t_g,0,1)"),
            _M(6, "nc", True, False, "s1:2 s2s1:2 s1s2s1:2", "tempered", "(t_g,e_a1,1)"),
        ),
        _C("e,s2,s1s2 s1,s2s1,s1s2s1"),
        induction=1,
    ),
    FixtureSpec(
        "G2.t_h", "G2", "alpha", _V("g", "q^2"), ("a2",), (),
        (
            _M(6, [], False, False, "e:1 s1:1 s2s1:1 s1s2s1:1 s2s1s2s1:1 s1s2s1s2s1:1", "(t_h,{})", "(t_h,0,1)"),
            _M(6, ["a2"], False, False, "s2:1 s1s2:1 s2s1s2:1 s1s2s1s2:1 s2s1s2s1s2:1 s1s2s1s2s1s2:1",
               "(s_2t_h,{2})", "(t_h,e_a2,1)"),
        ),
        _C("e,s1,s2s1,s1s2s1,s2s1s2s1,s1s2s1s2s1 s2,s1s2,s2s1s2,s1s2s1s2,s2s1s2s1s2,s1s2s1s2s1s2"),
    ),
    FixtureSpec(
        "G2.t_i", "G2", "alpha", _V("1", "q^2"), ("a2", "a1+a2"), ("a1",),
        (
            _M(6, "nc", False, False, "e:2 s2:1 s1s2:1 s2s1s2:1 s1s2s1s2:1", "(t_i,{1})", "(t_i,0,1)"),
            _M(6, "nc", False, False, "s2:1 s1s2:1 s2s1s2:1 s1s2s1s2:1 s2s1s2s1s2:2", "(s_2t_i,{2})", "(t_i,e_a2,1)"),
        ),
        _C("e s2,s1s2,s2s1s2,s1s2s1s2 s2s1s2s1s2"),
        induction=2,
    ),
    FixtureSpec(
        "G2.t_j", "G2", "alpha", _V("q^-3", "q^2"), ("a2",), ("2a1+3a2",),
        (
            _M(6, "nc", False, False, "e:2 s1:2 s2s1:2", "(t_j,{1})", "(t_j,0,1)"),
            _M(6, "nc", True, False, "s2:2 s1s2:2 s2s1s2:2", "tempered", "(t_j,e_a2,1)"),
        ),
        _C("e,s1,s2s1 s2,s1s2,s2s1s2"),
        induction=2,
    ),
]

SYSTEM_ORDER = ("A1", "A2", "C2", "G2", "A1xA1")


def _product_spec(a: FixtureSpec, b: FixtureSpec) -> FixtureSpec:
    """A1xA1 fixture from two A1 fixtures; the second factor uses s2 and a2."""

    def shift_word(w: str) -> str:
        return "e" if w == "e" else w.replace("s1", "s2")

    def join(w1: str, w2: str) -> str:
        parts = [x for x in (w1, shift_word(w2)) if x != "e"]
        return "".join(parts) or "e"

    mods = []
    for m1 in a.modules:
        for m2 in b.modules:
            J = None
            if m1.J is not None and m2.J is not None:
                J = m1.J + tuple(r.replace("a1", "a2") for r in m2.J)
            sup = tuple((join(w1, w2), c1 * c2) for w1, c1 in m1.support for w2, c2 in m2.support)
            mods.append(
                ExpectedModule(
                    m1.dim * m2.dim,
                    J,
                    m1.tempered and m2.tempered,
                    m1.square_integrable and m2.square_integrable,
                    sup,
                    f"{m1.langlands} x {m2.langlands}",
                    f"{m1.triple} x {m2.triple}",
                )
            )
    comps = tuple(tuple(join(x, y) for x in c1 for y in c2) for c1 in a.components for c2 in b.components)
    name = f"A1xA1.{a.label.split('.')[1]}*{b.label.split('.')[1]}"
    return FixtureSpec(
        name,
        "A1xA1",
        "omega",
        a.values + b.values,
        a.P + tuple(r.replace("a1", "a2") for r in b.P),
        a.Z + tuple(r.replace("a1", "a2") for r in b.Z),
        tuple(mods),
        comps,
        comment="outer tensor product of two A1 central characters",
    )


def all_specs() -> list[FixtureSpec]:
    a1 = [s for s in _SPECS if s.system == "A1"]
    return list(_SPECS) + [_product_spec(x, y) for x in a1 for y in a1]


def fixture_catalog(ctx: FieldContext | None = None, systems: Sequence[str] | None = None,
                    labels: Sequence[str] | None = None) -> list[CentralCharFixture]:
    """Realize and validate the selected fixtures, in catalog order."""
    ctx = ctx or FieldContext()
    out = []
    for spec in all_specs():
        if systems and spec.system not in systems:
            continue
        if labels and spec.label not in labels:
            continue
        f = realize(spec, ctx)
        validate(f)
        out.append(f)
    return out


ALIASES = {"A1.t_o": "A1.t_o+"}


def resolve_label(system: str, name: str) -> str:
    label = name if "." in name else f"{system}.{name}"
    label = ALIASES.get(label, label)
    if label not in {s.label for s in all_specs()}:
        raise KeyError(f"unknown central character {label!r}")
    return label
