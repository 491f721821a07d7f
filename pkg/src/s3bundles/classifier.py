"""Pairwise equivalence decisions between total spaces M_{m,n}.

Conventions: ``b1`` is M_{m,n} and ``b2`` is M_{m',n}. A witness alpha maps
the first to the second, e.g. halfp(M_{m',n}) = alpha * halfp(M_{m,n}).

The invariant-form deciders (:func:`homotopy_equivalent`, :func:`homeomorphic`,
:func:`diffeomorphic`) are authoritative. The congruence-form deciders
(:func:`homeomorphic_congruence`, :func:`diffeomorphic_congruence`) restate the
same criteria as explicit congruences in m and m' and exist to be checked
against them.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .invariants import (
    Bundle,
    InvariantConsistencyError,
    InvariantRecord,
    RationalResidue,
    UndefinedInvariantError,
    invariant_record,
)
from .modular import gcd, minus_one_solvable, two_adic_split, unit_square_roots

__all__ = [
    "Orientation",
    "Category",
    "Verdict",
    "parse_category",
    "parse_orientation",
    "symmetric_partner",
    "homotopy_equivalent",
    "homeomorphic",
    "homeomorphic_congruence",
    "diffeomorphic",
    "diffeomorphic_congruence",
    "decide_records",
    "relates",
    "equivalent",
]


class Orientation(str, enum.Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"
    EITHER = "either"


class Category(str, enum.Enum):
    HOMOTOPY = "homotopy"
    HOMEOMORPHISM = "homeo"
    DIFFEOMORPHISM = "diffeo"


# PL-homeomorphism and almost-diffeomorphism coincide with homeomorphism here.
CATEGORY_ALIASES = {
    "homotopy": Category.HOMOTOPY,
    "homeo": Category.HOMEOMORPHISM,
    "homeomorphism": Category.HOMEOMORPHISM,
    "pl": Category.HOMEOMORPHISM,
    "almost-diffeo": Category.HOMEOMORPHISM,
    "diffeo": Category.DIFFEOMORPHISM,
    "diffeomorphism": Category.DIFFEOMORPHISM,
}


def parse_category(name: str | Category) -> Category:
    if isinstance(name, Category):
        return name
    try:
        return CATEGORY_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown category {name!r}; choose from {sorted(CATEGORY_ALIASES)}") from None


def parse_orientation(name: str | Orientation) -> Orientation:
    if isinstance(name, Orientation):
        return name
    try:
        return Orientation(name.lower())
    except ValueError:
        raise ValueError(f"unknown orientation {name!r}; choose from preserving, reversing, either") from None


@dataclass(frozen=True)
class Verdict:
    """Outcome of one pairwise decision.

    ``witness_alpha`` certifies the clause named by ``rule``. For
    orientation reversing homotopy equivalences the certificate is the pair
    (``witness_alpha``, ``witness_shift`` = j) for which M_{m',n} is
    orientation reversing homeomorphic to M_{m+12j,n}.
    """

    equivalent: bool
    category: Category
    orientation: Orientation
    rule: str
    left: Bundle
    right: Bundle
    left_record: InvariantRecord | None = None
    right_record: InvariantRecord | None = None
    witness_alpha: int | None = None
    witness_shift: int | None = None
    matched: Orientation | None = None

    def __bool__(self):
        return self.equivalent

    def to_dict(self) -> dict:
        return {
            "equivalent": self.equivalent,
            "category": self.category.value,
            "orientation": self.orientation.value,
            "matched_orientation": self.matched.value if self.matched else None,
            "rule": self.rule,
            "witness_alpha": self.witness_alpha,
            "witness_shift": self.witness_shift,
            "left": _side_dict(self.left, self.left_record),
            "right": _side_dict(self.right, self.right_record),
        }


def _side_dict(b: Bundle, rec: InvariantRecord | None) -> dict:
    if rec is not None:
        return rec.to_dict()
    return {"m": b.m, "n": b.n, "halfp": None, "s1": None, "mu": None}


@lru_cache(maxsize=None)
def _roots(n: int, sign: int) -> tuple[int, ...]:
    return unit_square_roots(n, sign).elements


def _sign(o: Orientation) -> int:
    return 1 if o is Orientation.PRESERVING else -1


def symmetric_partner(b: Bundle) -> Bundle:
    """M_{-m-n,n}, orientation preserving diffeomorphic to M_{m,n}."""
    return Bundle(-b.m - b.n, b.n)


# ---------------------------------------------------------------------------
# shared plumbing


def _either(decide, b1: Bundle, b2: Bundle) -> Verdict:
    pres = decide(b1, b2, Orientation.PRESERVING)
    if pres.equivalent:
        return _retag(pres, Orientation.EITHER, Orientation.PRESERVING)
    rev = decide(b1, b2, Orientation.REVERSING)
    if rev.equivalent:
        return _retag(rev, Orientation.EITHER, Orientation.REVERSING)
    return _retag(rev, Orientation.EITHER, None, rule=f"{pres.rule} | {rev.rule}")


def _retag(v: Verdict, orientation: Orientation, matched, rule=None) -> Verdict:
    return Verdict(
        v.equivalent, v.category, orientation, rule or v.rule, v.left, v.right,
        v.left_record, v.right_record, v.witness_alpha, v.witness_shift, matched,
    )


def _records(b1: Bundle, b2: Bundle):
    if b1.n == 0 or b1.n != b2.n:
        return None, None
    return invariant_record(b1), invariant_record(b2)


def _mismatch(category, o, b1, b2) -> Verdict | None:
    if b1.n != b2.n:
        return Verdict(False, category, o, "euler-number-mismatch", b1, b2, *_records(b1, b2))
    return None


def _first_alpha(h1: int, h2: int, n: int, roots) -> int | None:
    for a in roots:
        if (h2 - a * h1) % n == 0:
            return a
    return None


def _zero_euler_pm(category, o, b1, b2, modulus) -> Verdict:
    # n = 0: m' = +-m (mod 12 for homotopy, exactly otherwise); every M_{m,0}
    # has an orientation reversing self-diffeomorphism, so both modes agree.
    m, mp = b1.m, b2.m
    if modulus:
        alpha = 1 if (mp - m) % modulus == 0 else (-1 if (mp + m) % modulus == 0 else None)
        rule = "n=0: m'=+-m mod 12"
    else:
        alpha = 1 if mp == m else (-1 if mp == -m else None)
        rule = "n=0: m'=+-m"
    matched = (Orientation.PRESERVING if o is Orientation.EITHER else o) if alpha else None
    return Verdict(alpha is not None, category, o, rule, b1, b2, witness_alpha=alpha, matched=matched)


# ---------------------------------------------------------------------------
# invariant-form deciders


_HALFP_RULES = {
    (c, o, name): f"{c.value}: halfp'=alpha*halfp, {name}'={'' if o is Orientation.PRESERVING else '-'}"
                  f"{name}, alpha in {'A+(n)' if o is Orientation.PRESERVING else 'A-(n)'}"
    for c in (Category.HOMEOMORPHISM, Category.DIFFEOMORPHISM)
    for o in (Orientation.PRESERVING, Orientation.REVERSING)
    for name in ("s1", "mu")
}


def _halfp_alpha(r1, r2, t1: RationalResidue, t2: RationalResidue, o) -> int | None:
    # alpha in A+-(n) with halfp' = alpha * halfp, given t' = +-t
    n = r1.bundle.n
    if o is Orientation.PRESERVING:
        if t2 != t1:
            return None
        return _first_alpha(r1.halfp, r2.halfp, n, _roots(n, 1))
    if t2 != -t1:
        return None
    return _first_alpha(r1.halfp, r2.halfp, n, _roots(n, -1))


def _decide_halfp_and(category, o, r1, r2, t1, t2, name) -> Verdict:
    alpha = _halfp_alpha(r1, r2, t1, t2, o)
    return Verdict(alpha is not None, category, o, _HALFP_RULES[category, o, name],
                   r1.bundle, r2.bundle, r1, r2,
                   witness_alpha=alpha, matched=o if alpha is not None else None)


def _homeo_records(r1, r2, o) -> Verdict:
    return _decide_halfp_and(Category.HOMEOMORPHISM, o, r1, r2, r1.s1, r2.s1, "s1")


def _diffeo_records(r1, r2, o) -> Verdict:
    return _decide_halfp_and(Category.DIFFEOMORPHISM, o, r1, r2, r1.mu, r2.mu, "mu")


def _homotopy_alpha(m: int, mp: int, n: int) -> int | None:
    g = gcd(n, 12)
    return _first_alpha(m, mp, g, _roots(g, 1))


def _homotopy_preserving(b1, b2, r1, r2) -> Verdict:
    alpha = _homotopy_alpha(b1.m, b2.m, b1.n)
    return Verdict(alpha is not None, Category.HOMOTOPY, Orientation.PRESERVING,
                   "homotopy: m'=alpha*m mod (n,12), alpha^2=1 mod (n,12)", b1, b2, r1, r2,
                   witness_alpha=alpha,
                   matched=Orientation.PRESERVING if alpha is not None else None)


def _reversing_shift_witness(b1, b2) -> tuple[int, int] | None:
    # M_{m',n} ~ -M_{m,n} iff M_{m',n} is reversing homeomorphic to some M_{m+12j,n}
    n = b1.n
    r2 = invariant_record(b2)
    for j in range(n):
        r1 = invariant_record(Bundle(b1.m + 12 * j, n))
        alpha = _halfp_alpha(r1, r2, r1.s1, r2.s1, Orientation.REVERSING)
        if alpha is not None:
            return alpha, j
    return None


def _homotopy_reversing_rule(m: int, mp: int, n: int) -> tuple[bool, str]:
    if not minus_one_solvable(n):
        return False, "homotopy-reversing: n is not 2^e*prod(p=1 mod 4), e<=1"
    a, _ = two_adic_split(n)
    if a == 0:
        return (_homotopy_alpha(m, mp, n) is not None,
                "homotopy-reversing: n odd, single oriented type with reversing self-equivalence")
    return (m + mp) % 2 == 1, "homotopy-reversing: n=2*odd, m'+m odd"


def _homotopy_reversing(b1, b2, r1, r2) -> Verdict:
    o = Orientation.REVERSING
    ok, rule = _homotopy_reversing_rule(b1.m, b2.m, b1.n)
    alpha = shift = None
    if ok:
        found = _reversing_shift_witness(b1, b2)
        if found is None:
            raise InvariantConsistencyError(
                f"no reversing homeomorphism to a 12-shift certifies {b1} ~ -{b2}")
        alpha, shift = found
    return Verdict(ok, Category.HOMOTOPY, o, rule, b1, b2, r1, r2,
                   witness_alpha=alpha, witness_shift=shift, matched=o if ok else None)


def homotopy_equivalent(b1: Bundle, b2: Bundle, o: Orientation | str = Orientation.PRESERVING) -> Verdict:
    o = parse_orientation(o)
    if o is Orientation.EITHER:
        return _either(homotopy_equivalent, b1, b2)
    mismatch = _mismatch(Category.HOMOTOPY, o, b1, b2)
    if mismatch is not None:
        return mismatch
    if b1.n == 0:
        return _zero_euler_pm(Category.HOMOTOPY, o, b1, b2, 12)
    r1, r2 = _records(b1, b2)
    if o is Orientation.PRESERVING:
        return _homotopy_preserving(b1, b2, r1, r2)
    return _homotopy_reversing(b1, b2, r1, r2)


def homeomorphic(b1: Bundle, b2: Bundle, o: Orientation | str = Orientation.PRESERVING) -> Verdict:
    """Homeomorphism (equivalently PL-homeomorphism) via halfp and s1."""
    o = parse_orientation(o)
    if o is Orientation.EITHER:
        return _either(homeomorphic, b1, b2)
    mismatch = _mismatch(Category.HOMEOMORPHISM, o, b1, b2)
    if mismatch is not None:
        return mismatch
    if b1.n == 0:
        return _zero_euler_pm(Category.HOMEOMORPHISM, o, b1, b2, None)
    return _homeo_records(*_records(b1, b2), o)


def diffeomorphic(b1: Bundle, b2: Bundle, o: Orientation | str = Orientation.PRESERVING) -> Verdict:
    """Diffeomorphism via halfp and mu."""
    o = parse_orientation(o)
    if o is Orientation.EITHER:
        return _either(diffeomorphic, b1, b2)
    mismatch = _mismatch(Category.DIFFEOMORPHISM, o, b1, b2)
    if mismatch is not None:
        return mismatch
    if b1.n == 0:
        return _zero_euler_pm(Category.DIFFEOMORPHISM, o, b1, b2, None)
    return _diffeo_records(*_records(b1, b2), o)


def decide_records(r1: InvariantRecord, r2: InvariantRecord, category: Category,
                   o: Orientation) -> Verdict:
    """Invariant-form decision on precomputed records of equal Euler number n >= 1.

    Gives the same verdict as :func:`equivalent` and avoids recomputing
    invariants, which matters when enumerating all pairs in a window.
    """
    if o is Orientation.EITHER:
        pres = decide_records(r1, r2, category, Orientation.PRESERVING)
        if pres.equivalent:
            return _retag(pres, Orientation.EITHER, Orientation.PRESERVING)
        rev = decide_records(r1, r2, category, Orientation.REVERSING)
        if rev.equivalent:
            return _retag(rev, Orientation.EITHER, Orientation.REVERSING)
        return _retag(rev, Orientation.EITHER, None, rule=f"{pres.rule} | {rev.rule}")
    if r1.bundle.n != r2.bundle.n:
        return Verdict(False, category, o, "euler-number-mismatch", r1.bundle, r2.bundle, r1, r2)
    if category is Category.HOMEOMORPHISM:
        return _homeo_records(r1, r2, o)
    if category is Category.DIFFEOMORPHISM:
        return _diffeo_records(r1, r2, o)
    if o is Orientation.PRESERVING:
        return _homotopy_preserving(r1.bundle, r2.bundle, r1, r2)
    return _homotopy_reversing(r1.bundle, r2.bundle, r1, r2)


def relates(r1: InvariantRecord, r2: InvariantRecord, category: Category, o: Orientation) -> bool:
    """``decide_records(...).equivalent`` without building a verdict or witness."""
    if o is Orientation.EITHER:
        return (relates(r1, r2, category, Orientation.PRESERVING)
                or relates(r1, r2, category, Orientation.REVERSING))
    n = r1.bundle.n
    if n != r2.bundle.n:
        return False
    if category is Category.HOMEOMORPHISM:
        return _halfp_alpha(r1, r2, r1.s1, r2.s1, o) is not None
    if category is Category.DIFFEOMORPHISM:
        return _halfp_alpha(r1, r2, r1.mu, r2.mu, o) is not None
    if o is Orientation.PRESERVING:
        return _homotopy_alpha(r1.bundle.m, r2.bundle.m, n) is not None
    return _homotopy_reversing_rule(r1.bundle.m, r2.bundle.m, n)[0]


# ---------------------------------------------------------------------------
# congruence-form deciders


def _congruence_domain(b1: Bundle, b2: Bundle, what: str) -> None:
    if b1.n == 0 or b2.n == 0:
        raise UndefinedInvariantError(f"{what} is only stated for n >= 1")


def homeomorphic_congruence(b1: Bundle, b2: Bundle, o: Orientation | str = Orientation.PRESERVING) -> Verdict:
    """Homeomorphism criterion as congruences in m, m', split on n = 2^a q."""
    o = parse_orientation(o)
    _congruence_domain(b1, b2, "homeomorphic_congruence")
    if o is Orientation.EITHER:
        return _either(homeomorphic_congruence, b1, b2)
    mismatch = _mismatch(Category.HOMEOMORPHISM, o, b1, b2)
    if mismatch is not None:
        return mismatch
    n, m, mp = b1.n, b1.m, b2.m
    r1, r2 = _records(b1, b2)
    a, _ = two_adic_split(n)
    alpha = None
    if o is Orientation.PRESERVING:
        roots = _roots(n, 1)
        if a == 0:
            rule = "homeo-congruence: a=0, m'=alpha*m mod n"
            alpha = _first_alpha(m, mp, n, roots)
        elif (a == 2 and m % 2 == 1) or (a > 2 and m % 2 == 0):
            rule = "homeo-congruence: m'=alpha*m mod n/2"
            alpha = _first_alpha(m, mp, n // 2, roots)
        else:
            rule = "homeo-congruence: m'=alpha*m mod n, alpha=+-1 mod 2^a"
            two_a = 2**a
            roots = [x for x in roots if (x - 1) % two_a == 0 or (x + 1) % two_a == 0]
            alpha = _first_alpha(m, mp, n, roots)
    else:
        if not minus_one_solvable(n):
            rule = "homeo-congruence-reversing: n is not 2^e*prod(p=1 mod 4), e<=1"
        elif a == 0:
            rule = "homeo-congruence-reversing: n odd, m'=alpha*m mod n, alpha^2=-1"
            alpha = _first_alpha(m, mp, n, _roots(n, -1))
        else:
            rule = "homeo-congruence-reversing: n=2*odd, m'=alpha*(m+n/2) mod n, alpha^2=-1"
            alpha = _first_alpha(m + n // 2, mp, n, _roots(n, -1))
    return Verdict(alpha is not None, Category.HOMEOMORPHISM, o, rule, b1, b2, r1, r2,
                   witness_alpha=alpha, matched=o if alpha is not None else None)


def diffeomorphic_congruence(b1: Bundle, b2: Bundle, o: Orientation | str = Orientation.PRESERVING) -> Verdict:
    """Diffeomorphism criterion as congruences, read literally.

    Preserving: m'(n+m') = m(n+m) mod 56n and 2m' = 2*alpha*m mod n, alpha^2 = 1.
    Reversing: m'(n+m') = -m(n+m) mod 56n and 2m' = 2*alpha*m mod n, alpha^2 = -1.

    The reversing congruence as written omits the constant n(n-1)/2 that
    mu' = -mu contributes, so for n > 1 it disagrees with
    :func:`diffeomorphic` wherever either one holds.
    """
    o = parse_orientation(o)
    _congruence_domain(b1, b2, "diffeomorphic_congruence")
    if o is Orientation.EITHER:
        return _either(diffeomorphic_congruence, b1, b2)
    mismatch = _mismatch(Category.DIFFEOMORPHISM, o, b1, b2)
    if mismatch is not None:
        return mismatch
    n, m, mp = b1.n, b1.m, b2.m
    r1, r2 = _records(b1, b2)
    sign = _sign(o)
    alpha = None
    if (mp * (n + mp) - sign * m * (n + m)) % (56 * n) == 0:
        alpha = _first_alpha(2 * m, 2 * mp, n, _roots(n, sign))
    if sign == 1:
        rule = "diffeo-congruence: m'(n+m')=m(n+m) mod 56n, 2m'=2*alpha*m mod n"
    else:
        rule = "diffeo-congruence-reversing: m'(n+m')=-m(n+m) mod 56n, 2m'=2*alpha*m mod n"
    return Verdict(alpha is not None, Category.DIFFEOMORPHISM, o, rule, b1, b2, r1, r2,
                   witness_alpha=alpha, matched=o if alpha is not None else None)


_DECIDERS = {
    Category.HOMOTOPY: homotopy_equivalent,
    Category.HOMEOMORPHISM: homeomorphic,
    Category.DIFFEOMORPHISM: diffeomorphic,
}


def equivalent(b1: Bundle, b2: Bundle, c: Category | str, o: Orientation | str) -> Verdict:
    return _DECIDERS[parse_category(c)](b1, b2, parse_orientation(o))
