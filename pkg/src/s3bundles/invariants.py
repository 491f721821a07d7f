"""Classification invariants of the total spaces M_{m,n}.

For n >= 1 three invariants are attached to M_{m,n}:

* ``half_p1``: the spin class p1/2 in H^4 = Z_n, equal to 2m mod n;
* ``mu``: the Eells-Kuiper invariant ((n + 2m)^2 - n) / (224 n) in Q/Z;
* ``s1``: the topological Eells-Kuiper invariant 28 mu, which also has the
  independent closed form ((n + 2m)^2 - n) / (8 n).

All arithmetic is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "BundleError",
    "NegativeEulerNumberError",
    "UndefinedInvariantError",
    "InvariantConsistencyError",
    "Bundle",
    "RationalResidue",
    "InvariantRecord",
    "rr_make",
    "rr_add",
    "rr_neg",
    "rr_eq",
    "half_p1",
    "mu",
    "s1",
    "invariant_record",
]


class BundleError(ValueError):
    """Base class for invalid bundle input."""


class NegativeEulerNumberError(BundleError):
    pass


class UndefinedInvariantError(BundleError):
    """Raised when a torsion invariant is requested for n = 0."""


class InvariantConsistencyError(RuntimeError):
    """s1 and 28 * mu disagree; one of the two formulas is wrong."""


@dataclass(frozen=True)
class Bundle:
    """The S^3-bundle over S^4 labelled m*rho + n*sigma, with Euler number n >= 0."""

    m: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise NegativeEulerNumberError(
                f"Euler number must be >= 0, got n={self.n}; "
                f"use M(m,n) = M(m+n,-n), i.e. M({self.m + self.n},{-self.n})"
            )

    def __str__(self):
        return f"M({self.m},{self.n})"


@dataclass(frozen=True, order=True)
class RationalResidue:
    """An element of Q/Z stored as a reduced fraction in [0, 1)."""

    numerator: int
    denominator: int

    def __post_init__(self):
        p, q = self.numerator, self.denominator
        if not (q > 0 and 0 <= p < q and math.gcd(p, q) == 1):
            raise ValueError(f"not a reduced residue: {self.numerator}/{self.denominator}")

    @classmethod
    def from_fraction(cls, x: Fraction) -> RationalResidue:
        x = x - (x.numerator // x.denominator)
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text: str) -> RationalResidue:
        p, _, q = text.partition("/")
        return rr_make(int(p), int(q or 1))

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def __add__(self, other):
        if not isinstance(other, RationalResidue):
            return NotImplemented
        return RationalResidue.from_fraction(self.as_fraction() + other.as_fraction())

    def __neg__(self):
        if self.numerator == 0:
            return self
        return RationalResidue(self.denominator - self.numerator, self.denominator)

    def __sub__(self, other):
        if not isinstance(other, RationalResidue):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return RationalResidue.from_fraction(k * self.as_fraction())

    __rmul__ = __mul__

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def rr_make(p: int, q: int) -> RationalResidue:
    """The class of p/q in Q/Z."""
    if q == 0:
        raise ZeroDivisionError("residue denominator must be nonzero")
    return RationalResidue.from_fraction(Fraction(p, q))


def rr_add(a: RationalResidue, b: RationalResidue) -> RationalResidue:
    return a + b


def rr_neg(a: RationalResidue) -> RationalResidue:
    return -a


def rr_eq(a: RationalResidue, b: RationalResidue) -> bool:
    return a == b


@dataclass(frozen=True)
class InvariantRecord:
    bundle: Bundle
    halfp: int
    s1: RationalResidue
    mu: RationalResidue

    def to_dict(self) -> dict:
        return {
            "m": self.bundle.m,
            "n": self.bundle.n,
            "halfp": self.halfp,
            "s1": str(self.s1),
            "mu": str(self.mu),
        }


def _require_torsion(b: Bundle, what: str) -> None:
    if b.n == 0:
        raise UndefinedInvariantError(f"{what} is undefined for n = 0 (H^4 is infinite cyclic)")


def half_p1(b: Bundle) -> int:
    """p1/2 of M_{m,n} as a residue in [0, n)."""
    _require_torsion(b, "half_p1")
    return (2 * b.m) % b.n


def mu(b: Bundle) -> RationalResidue:
    _require_torsion(b, "mu")
    m, n = b.m, b.n
    return rr_make((n + 2 * m) ** 2 - n, 224 * n)


def s1(b: Bundle) -> RationalResidue:
    _require_torsion(b, "s1")
    m, n = b.m, b.n
    return rr_make((n + 2 * m) ** 2 - n, 8 * n)


def invariant_record(b: Bundle) -> InvariantRecord:
    """Bundle the three invariants, cross-checking s1 against 28 * mu."""
    rec = InvariantRecord(b, half_p1(b), s1(b), mu(b))
    if rec.s1 != 28 * rec.mu:
        raise InvariantConsistencyError(f"s1={rec.s1} but 28*mu={28 * rec.mu} for {b}")
    return rec
