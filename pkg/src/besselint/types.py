"""Plain data records shared across modules.

Complex scalars are ordinary Python ``complex`` values throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum


class GaussKind(str, Enum):
    JJ = "JJ"
    JY = "JY"
    YY = "YY"
    JJm = "JJm"
    JmJ = "JmJ"
    JmY = "JmY"
    JYm = "JYm"


class FieldType(str, Enum):
    M = "M"
    N = "N"


class Pair(str, Enum):
    jj = "jj"
    yy = "yy"
    jy = "jy"
    hh = "hh"


class Method(str, Enum):
    closed_form = "closed_form"
    equal_arg_limit = "equal_arg_limit"
    quadrature = "quadrature"
    analytic = "analytic"


def as_complex(z) -> complex:
    """Coerce to ``complex``, rejecting NaN and infinities."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex value {z!r}")
    return z


@dataclass(frozen=True)
class DistributionalValue:
    """``regular + delta_coeff * delta(K - k)`` with the delta kept symbolic."""

    regular: complex
    delta_coeff: complex = 0j

    def __add__(self, other: "DistributionalValue") -> "DistributionalValue":
        return DistributionalValue(
            self.regular + other.regular, self.delta_coeff + other.delta_coeff
        )

    def __sub__(self, other: "DistributionalValue") -> "DistributionalValue":
        return DistributionalValue(
            self.regular - other.regular, self.delta_coeff - other.delta_coeff
        )

    def scale(self, c: complex) -> "DistributionalValue":
        return DistributionalValue(self.regular * c, self.delta_coeff * c)

    @property
    def has_delta(self) -> bool:
        return self.delta_coeff != 0


@dataclass(frozen=True)
class EvalResult:
    value: DistributionalValue
    method: Method
    err_estimate: float = 0.0
    notes: str = ""

    @property
    def regular(self) -> complex:
        return self.value.regular

    @property
    def delta_coeff(self) -> complex:
        return self.value.delta_coeff


@dataclass(frozen=True)
class GaussianIntegralSpec:
    """One Gaussian-damped cylindrical product integral.

    ``order`` is the Bessel order b; for the spherical kinds the CLI maps
    n -> b = n + 1/2 before building this record.
    """

    kind: GaussKind
    order: float
    K: complex
    k: complex
    eta: float

    def __post_init__(self):
        object.__setattr__(self, "kind", GaussKind(self.kind))
        object.__setattr__(self, "K", as_complex(self.K))
        object.__setattr__(self, "k", as_complex(self.k))
        if not self.eta > 0:
            raise ValueError("eta must be positive")
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if self.K == 0 or self.k == 0:
            raise ValueError("wavenumbers must be non-zero")
        if self.K + self.k == 0:
            raise ValueError("K + k = 0 is excluded")

    @property
    def a(self) -> complex:
        return self.eta / (self.K * self.k)


@dataclass(frozen=True)
class Interval:
    """``[lo, hi]`` with ``hi = None`` meaning an infinite upper limit."""

    lo: float
    hi: float | None = None

    def __post_init__(self):
        if self.lo < 0:
            raise ValueError("interval lower bound must be >= 0")
        if self.hi is not None and not self.hi > self.lo:
            raise ValueError("interval upper bound must exceed the lower bound")

    @property
    def infinite(self) -> bool:
        return self.hi is None

    def __str__(self) -> str:
        hi = "inf" if self.hi is None else f"{self.hi:g}"
        return f"[{self.lo:g},{hi}]"


@dataclass(frozen=True)
class RadialIntegralSpec:
    field_type: FieldType
    pair: Pair
    n: int
    K: complex
    k: complex
    interval: Interval = field(default_factory=lambda: Interval(0.0, None))

    def __post_init__(self):
        object.__setattr__(self, "field_type", FieldType(self.field_type))
        object.__setattr__(self, "pair", Pair(self.pair))
        object.__setattr__(self, "K", as_complex(self.K))
        object.__setattr__(self, "k", as_complex(self.k))
        if int(self.n) != self.n or self.n < 0:
            raise ValueError("n must be a non-negative integer")
        object.__setattr__(self, "n", int(self.n))
        if self.K == 0 or self.k == 0:
            raise ValueError("wavenumbers must be non-zero")


def complex_to_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def complex_from_json(d: dict) -> complex:
    return complex(d["re"], d["im"])
