"""Unit-of-measure algebra over the seven SI base dimensions.

Every signal type and unit expression maps to a ``DimensionVector``: the
exponents of (length, mass, time, current, temperature, amount, luminous
intensity), stored as exact rationals.  Exactness matters because the
null-space computation downstream does rational Gaussian elimination and
must never see rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterator, Mapping

from dimgen.errors import DimgenError

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, dsl imports us
    from dimgen.dsl import UnitExpr

#: Axis order of every DimensionVector: length, mass, time, electric
#: current, thermodynamic temperature, amount of substance, luminous
#: intensity.
AXES = ("L", "M", "T", "I", "Th", "N", "J")
N_AXES = len(AXES)

RationalLike = int | Fraction


class UnknownUnitError(DimgenError):
    """Lookup of an identifier that is not in the unit table."""


@dataclass(frozen=True)
class DimensionVector:
    """Exponents of the 7 SI base dimensions, as exact rationals."""

    exps: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.exps) != N_AXES:
            raise ValueError(f"dimension vector needs {N_AXES} exponents, got {len(self.exps)}")
        if not all(isinstance(e, Fraction) for e in self.exps):
            object.__setattr__(self, "exps", tuple(Fraction(e) for e in self.exps))

    @classmethod
    def of(cls, **axes: RationalLike) -> "DimensionVector":
        """Build from axis keyword arguments, e.g. ``of(L=1, T=-2)``."""
        unknown = set(axes) - set(AXES)
        if unknown:
            raise ValueError(f"unknown dimension axes: {sorted(unknown)}")
        return cls(tuple(Fraction(axes.get(a, 0)) for a in AXES))

    @classmethod
    def zero(cls) -> "DimensionVector":
        return cls(tuple(Fraction(0) for _ in AXES))

    def __add__(self, other: "DimensionVector") -> "DimensionVector":
        return DimensionVector(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __sub__(self, other: "DimensionVector") -> "DimensionVector":
        return DimensionVector(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def scaled(self, factor: RationalLike) -> "DimensionVector":
        f = Fraction(factor)
        return DimensionVector(tuple(e * f for e in self.exps))

    def is_zero(self) -> bool:
        """True iff dimensionless."""
        return all(e == 0 for e in self.exps)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.exps)

    def __str__(self) -> str:
        parts = [f"{a}^{e}" for a, e in zip(AXES, self.exps) if e != 0]
        return " ".join(parts) if parts else "1"


class UnitTable:
    """Case-sensitive map from identifiers to dimensions.

    Entries are either plain signal types / units (dimension only) or
    physical constants (dimension plus a real value).
    """

    def __init__(self) -> None:
        self._dims: dict[str, DimensionVector] = {}
        self._values: dict[str, float] = {}

    def add_unit(self, name: str, dim: DimensionVector) -> None:
        self._dims[name] = dim

    def add_constant(self, name: str, dim: DimensionVector, value: float) -> None:
        self._dims[name] = dim
        self._values[name] = value

    def __contains__(self, name: str) -> bool:
        return name in self._dims

    def lookup(self, name: str) -> DimensionVector:
        try:
            return self._dims[name]
        except KeyError:
            raise UnknownUnitError(f"unknown unit or signal type: {name!r}") from None

    def is_constant(self, name: str) -> bool:
        return name in self._values

    def constant_value(self, name: str) -> float:
        try:
            return self._values[name]
        except KeyError:
            raise UnknownUnitError(f"{name!r} is not a known physical constant") from None

    def constant_names(self) -> tuple[str, ...]:
        return tuple(self._values)


#: Name of the physical-constant entry for standard gravity.
GRAVITY_CONSTANT = "kNewtonUnithave_AccelerationDueToGravity"


def builtin_prelude() -> UnitTable:
    """The built-in base-signal table.

    Contains the 7 SI base units, the common derived signal types used by
    the bundled system corpus, and standard gravity as a physical
    constant (9.80665 m/s^2).
    """
    t = UnitTable()
    base = {
        "meter": DimensionVector.of(L=1),
        "kilogram": DimensionVector.of(M=1),
        "second": DimensionVector.of(T=1),
        "ampere": DimensionVector.of(I=1),
        "kelvin": DimensionVector.of(Th=1),
        "mole": DimensionVector.of(N=1),
        "candela": DimensionVector.of(J=1),
    }
    signal_types = {
        "distance": DimensionVector.of(L=1),
        "mass": DimensionVector.of(M=1),
        "time": DimensionVector.of(T=1),
        "temperature": DimensionVector.of(Th=1),
        "speed": DimensionVector.of(L=1, T=-1),
        "acceleration": DimensionVector.of(L=1, T=-2),
        "force": DimensionVector.of(M=1, L=1, T=-2),
        "pressure": DimensionVector.of(M=1, L=-1, T=-2),
        "frequency": DimensionVector.of(T=-1),
        "stiffness": DimensionVector.of(M=1, T=-2),
        "angle": DimensionVector.zero(),
        "dimensionless": DimensionVector.zero(),
    }
    for name, dim in {**base, **signal_types}.items():
        t.add_unit(name, dim)
    t.add_constant(GRAVITY_CONSTANT, DimensionVector.of(L=1, T=-2), 9.80665)
    return t


def eval_unit_expr(expr: "UnitExpr", table: UnitTable) -> DimensionVector:
    """Dimension of a parsed unit expression.

    The result is the exact rational sum over factors of
    ``exponent * dimension(base)``; products of units add their vectors,
    powers scale them.
    """
    total = DimensionVector.zero()
    for name, exponent in expr.factors:
        total = total + table.lookup(name).scaled(exponent)
    return total


def signal_dimensions(names_to_types: Mapping[str, str], table: UnitTable) -> dict[str, DimensionVector]:
    """Resolve a mapping of signal name -> signal-type identifier."""
    return {name: table.lookup(tp) for name, tp in names_to_types.items()}
