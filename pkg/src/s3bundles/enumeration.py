"""Class enumeration over residue windows and the small-n count tables.

Every decider is a function of m mod 56n (mu has denominator 224n), so the
residues [0, 56n) enumerate all bundles with Euler number n. Classes are
built by union-find over pairwise verdicts.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .classifier import Category, Orientation, parse_category, parse_orientation, relates
from .invariants import Bundle, RationalResidue, UndefinedInvariantError, invariant_record, mu
from .modular import gcd, minus_one_solvable, unit_square_roots

__all__ = [
    "UnionFind",
    "ClassPartition",
    "ResidueCondition",
    "CountsReport",
    "period",
    "partition",
    "hom_count",
    "diff_count",
    "homotopy_count",
    "homotopy_orbits",
    "section4_table",
    "verify_section4",
    "exotic_sphere_census",
    "GOLDEN_TABLES",
]


class UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            # keep the smaller index as root so roots are least representatives
            if y < x:
                x, y = y, x
            self.parent[y] = x

    def groups(self):
        out = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return sorted(out.values())


def period(n: int) -> int:
    return 56 * n


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"Euler number must be >= 0, got {n}")
    if n == 0:
        raise UndefinedInvariantError("n = 0 has infinitely many classes; enumerate n >= 1")


def _check_mode(o: Orientation) -> Orientation:
    o = parse_orientation(o)
    if o is Orientation.REVERSING:
        raise ValueError("class enumeration needs orientation 'preserving' or 'either'")
    return o


@dataclass(frozen=True)
class ClassPartition:
    n: int
    period: int
    orientation_mode: Orientation
    category: Category
    classes: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.classes)

    def class_of(self, m: int) -> tuple[int, ...]:
        m %= self.period
        for c in self.classes:
            if m in c:
                return c
        raise KeyError(m)

    def summary(self) -> dict:
        return {
            "n": self.n,
            "period": self.period,
            "category": self.category.value,
            "orientation": self.orientation_mode.value,
            "count": len(self.classes),
            "classes": [
                {"representative": c[0], "size": len(c),
                 "residues_mod_n": sorted({x % self.n for x in c})}
                for c in self.classes
            ],
        }


def _records(n: int, window: int):
    return [invariant_record(Bundle(m, n)) for m in range(window)]


def _union_pairs(recs, category, o, members=None) -> UnionFind:
    idx = range(len(recs)) if members is None else members
    idx = list(idx)
    uf = UnionFind(len(recs))
    for i, a in enumerate(idx):
        ra = recs[a]
        for b in idx[i + 1:]:
            if uf.find(a) == uf.find(b):
                continue
            if relates(ra, recs[b], category, o):
                uf.union(a, b)
    return uf


def partition(n: int, c: Category | str = Category.HOMEOMORPHISM,
              o: Orientation | str = Orientation.PRESERVING, window: int | None = None) -> ClassPartition:
    """Partition residues m in [0, window) (default 56n) into equivalence classes."""
    _check_n(n)
    c, o = parse_category(c), _check_mode(o)
    window = window or period(n)
    uf = _union_pairs(_records(n, window), c, o)
    return ClassPartition(n, window, o, c, tuple(tuple(g) for g in uf.groups()))


def hom_count(n: int, o: Orientation | str = Orientation.PRESERVING) -> int:
    """Number of homeomorphism types with Euler number n."""
    return len(partition(n, Category.HOMEOMORPHISM, o))


def _diff_classes_within(recs, members, o) -> int:
    uf = _union_pairs(recs, Category.DIFFEOMORPHISM, o, members)
    return len({uf.find(x) for x in members})


def diff_count(m: int, n: int, o: Orientation | str = Orientation.PRESERVING,
               window: int | None = None) -> int:
    """Number of smooth classes among bundles homeomorphic to M_{m,n}."""
    _check_n(n)
    o = _check_mode(o)
    window = window or period(n)
    recs = _records(n, window)
    target = invariant_record(Bundle(m, n))
    members = [x for x in range(window)
               if relates(target, recs[x], Category.HOMEOMORPHISM, o)]
    return _diff_classes_within(recs, members, o)


def homotopy_count(n: int, o: Orientation | str = Orientation.PRESERVING) -> int:
    """Number of homotopy types among M_{m,n}, m in Z."""
    return len(partition(n, Category.HOMOTOPY, o))


def homotopy_orbits(n: int) -> list[list[int]]:
    """Orbits of Z_(n,12) under multiplication by its square roots of 1."""
    g = gcd(n, 12)
    roots = unit_square_roots(g, 1).elements
    seen, orbits = set(), []
    for x in range(g):
        if x not in seen:
            orbit = sorted({(a * x) % g for a in roots})
            seen.update(orbit)
            orbits.append(orbit)
    return orbits


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class ResidueCondition:
    """The condition m mod modulus in residues, printed with +- pairs."""

    modulus: int
    residues: tuple[int, ...]

    def __str__(self):
        n = self.modulus
        rs = set(self.residues)
        parts = []
        for r in sorted(rs):
            if r not in rs:
                continue
            neg = (-r) % n
            if neg != r and neg in rs:
                parts.append(f"+-{r}")
                rs.discard(neg)
            else:
                parts.append(str(r))
        return f"m = {', '.join(parts)} mod {n}"

    def to_dict(self):
        return {"modulus": self.modulus, "residues": list(self.residues), "text": str(self)}


@dataclass(frozen=True)
class CountsReport:
    n: int
    hom_plus: int
    hom_either: int
    diff_plus: tuple[tuple[ResidueCondition, int], ...]
    diff_either: tuple[tuple[ResidueCondition, int], ...]
    reversing_exists: bool

    def diff_plus_at(self, m: int) -> int:
        return _lookup(self.diff_plus, m % self.n)

    def diff_either_at(self, m: int) -> int:
        return _lookup(self.diff_either, m % self.n)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "hom_plus": self.hom_plus,
            "hom_either": self.hom_either,
            "reversing_exists": self.reversing_exists,
            "diff_plus": [{"condition": c.to_dict(), "count": k} for c, k in self.diff_plus],
            "diff_either": [{"condition": c.to_dict(), "count": k} for c, k in self.diff_either],
        }


def _lookup(rows, r):
    for cond, k in rows:
        if r in cond.residues:
            return k
    raise KeyError(r)


def _diff_rows(n, recs, homeo: ClassPartition, o) -> tuple[tuple[ResidueCondition, int], ...]:
    per_residue = {}
    for cls in homeo.classes:
        k = _diff_classes_within(recs, list(cls), o)
        for x in cls:
            r = x % n
            if per_residue.setdefault(r, k) != k:
                raise RuntimeError(f"smooth count varies within residue {r} mod {n}")
    by_count = {}
    for r, k in sorted(per_residue.items()):
        by_count.setdefault(k, []).append(r)
    rows = [(ResidueCondition(n, tuple(rs)), k) for k, rs in by_count.items()]
    return tuple(sorted(rows, key=lambda row: row[0].residues[0]))


def section4_table(n: int) -> CountsReport:
    """Hom+/Hom and Diff+/Diff counts for Euler number n."""
    _check_n(n)
    window = period(n)
    recs = _records(n, window)
    plus = ClassPartition(n, window, Orientation.PRESERVING, Category.HOMEOMORPHISM,
                          tuple(map(tuple, _union_pairs(recs, Category.HOMEOMORPHISM,
                                                        Orientation.PRESERVING).groups())))
    either = ClassPartition(n, window, Orientation.EITHER, Category.HOMEOMORPHISM,
                            tuple(map(tuple, _union_pairs(recs, Category.HOMEOMORPHISM,
                                                          Orientation.EITHER).groups())))
    return CountsReport(
        n=n,
        hom_plus=len(plus),
        hom_either=len(either),
        diff_plus=_diff_rows(n, recs, plus, Orientation.PRESERVING),
        diff_either=_diff_rows(n, recs, either, Orientation.EITHER),
        reversing_exists=minus_one_solvable(n),
    )


def _rows(modulus, spec):
    return {r % modulus: k for residues, k in spec for r in residues}


# Published counts. Residues not listed for a given n are not asserted.
GOLDEN_TABLES: dict[int, dict] = {
    1: {"hom_plus": 1, "diff_plus": _rows(1, [((0,), 16)]),
        "hom_either": 1, "diff_either": _rows(1, [((0,), 11)])},
    2: {"hom_plus": 2, "diff_plus": _rows(2, [((0, 1), 8)]),
        "hom_either": 1, "diff_either": _rows(2, [((0, 1), 13)])},
    5: {"hom_plus": 3, "diff_plus": _rows(5, [(range(5), 16)]),
        "hom_either": 2, "diff_either": _rows(5, [((0,), 12), ((1, 2, 3, 4), 24)])},
    10: {"hom_plus": 6, "diff_plus": _rows(10, [(range(10), 8)]),
         "hom_either": 3, "diff_either": _rows(10, [(range(10), 14)])},
    7: {"hom_plus": 4, "diff_plus": _rows(7, [((0,), 4), (range(1, 7), 28)])},
    14: {"hom_plus": 8,
         "diff_plus": _rows(14, [((0, 7), 2), ([r for r in range(14) if r not in (0, 7)], 14)])},
    4: {"hom_plus": 3, "diff_plus": _rows(4, [((0,), 4), ((2,), 8), ((1, -1), 16)])},
    8: {"hom_plus": 4, "diff_plus": _rows(8, [((0, 4, 2), 8), ((1, -1, 3, -3), 16)])},
    12: {"hom_plus": 6,
         "diff_plus": _rows(12, [((0, 4, -4), 4), ((2, -2, 6), 8),
                                 ((1, -1, 5, -5, 3, -3), 16)])},
    16: {"hom_plus": 7,
         "diff_plus": _rows(16, [((4, -4), 4), ((0, 8), 8),
                                 ((2, -2, 6, -6, 1, -1, 3, -3, 5, -5, 7, -7), 16)])},
}


@dataclass
class VerificationReport:
    tables: dict[int, CountsReport] = field(default_factory=dict)
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def matched(self) -> int:
        bad = {m["n"] for m in self.mismatches}
        return sum(1 for n in self.tables if n not in bad)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "matched": self.matched,
            "total": len(self.tables),
            "mismatches": self.mismatches,
            "tables": [t.to_dict() for t in self.tables.values()],
        }


def verify_section4(ns=None) -> VerificationReport:
    """Recompute the published tables and list every disagreement."""
    report = VerificationReport()
    for n in ns or GOLDEN_TABLES:
        golden = GOLDEN_TABLES[n]
        table = section4_table(n)
        report.tables[n] = table

        def check(what, expected, got, residue=None):
            if expected != got:
                report.mismatches.append({"n": n, "quantity": what, "residue": residue,
                                          "expected": expected, "computed": got})

        check("hom_plus", golden["hom_plus"], table.hom_plus)
        for r, k in sorted(golden["diff_plus"].items()):
            check("diff_plus", k, table.diff_plus_at(r), r)
        if "hom_either" in golden:
            check("hom_either", golden["hom_either"], table.hom_either)
            for r, k in sorted(golden["diff_either"].items()):
                check("diff_either", k, table.diff_either_at(r), r)
    return report


def exotic_sphere_census() -> dict:
    """mu-invariants of the homotopy spheres M_{m,1}."""
    values = sorted({mu(Bundle(m, 1)) for m in range(period(1))})
    nonzero = [v for v in values if not v.is_zero()]
    return {
        "values": [str(v) for v in values],
        "distinct": len(values),
        "nonzero": len(nonzero),
        "contains_zero": RationalResidue(0, 1) in values,
    }
