"""Based finite sets and their standard subcategories.

The objects are the sets n = {0, 1, ..., n} with basepoint 0.  Morphisms are
based functions, stored as lookup tables.  Four nested subcategories are
distinguished by a predicate on the table:

    Sigma  bijections
    Lambda injections
    Pi     maps with at most one positive preimage per positive element
    F      all based functions

The monoidal structure is the wedge (block sum) and the smash (tensor,
positive elements ordered lexicographically as pairs).  Everything is
immutable and enumeration order is lexicographic on tables, so all
downstream constructions are deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product


class SubcategoryKind(enum.Enum):
    Sigma = "Sigma"
    Lambda = "Lambda"
    Pi = "Pi"
    F = "F"


@dataclass(frozen=True)
class BasedFinSet:
    """The based set {0, 1, ..., size} with basepoint 0."""

    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be nonnegative")

    def elements(self) -> range:
        return range(self.size + 1)

    def positives(self) -> range:
        return range(1, self.size + 1)


@dataclass(frozen=True)
class BasedMap:
    """A based function between based finite sets, given by its table.

    table[i] is the image of i; table[0] must be 0.
    """

    source: int
    target: int
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.source + 1:
            raise ValueError("table length must be source + 1")
        if self.table[0] != 0:
            raise ValueError("based maps must send 0 to 0")
        for v in self.table:
            if not 0 <= v <= self.target:
                raise ValueError(f"table entry {v} outside target 0..{self.target}")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def fiber(self, j: int) -> tuple:
        """The preimage of j among positive elements, in natural order."""
        return tuple(i for i in range(1, self.source + 1) if self.table[i] == j)

    def fiber_size(self, j: int) -> int:
        return len(self.fiber(j))

    def is_bijection(self) -> bool:
        return self.source == self.target and sorted(self.table) == list(
            range(self.target + 1)
        )

    def is_injection(self) -> bool:
        return len(set(self.table)) == self.source + 1

    def is_pi(self) -> bool:
        return all(self.fiber_size(j) <= 1 for j in range(1, self.target + 1))

    def in_kind(self, kind: SubcategoryKind) -> bool:
        if kind is SubcategoryKind.Sigma:
            return self.is_bijection()
        if kind is SubcategoryKind.Lambda:
            return self.is_injection()
        if kind is SubcategoryKind.Pi:
            return self.is_pi()
        return True

    def inverse(self) -> "BasedMap":
        if not self.is_bijection():
            raise ValueError("only bijections invert")
        inv = [0] * (self.source + 1)
        for i, v in enumerate(self.table):
            inv[v] = i
        return BasedMap(self.target, self.source, tuple(inv))

    def to_json(self) -> dict:
        return {"source": self.source, "target": self.target, "table": list(self.table)}

    @staticmethod
    def from_json(data: dict) -> "BasedMap":
        return BasedMap(data["source"], data["target"], tuple(data["table"]))


def identity(n: int) -> BasedMap:
    return BasedMap(n, n, tuple(range(n + 1)))


def compose(f: BasedMap, g: BasedMap) -> BasedMap:
    """The composite f after g."""
    if g.target != f.source:
        raise ValueError(f"cannot compose: g lands in {g.target}, f starts at {f.source}")
    return BasedMap(g.source, f.target, tuple(f.table[v] for v in g.table))


def enumerate_homs(kind: SubcategoryKind, m, n) -> tuple:
    """All based maps m -> n satisfying the kind predicate, lexicographic by table."""
    m = m.size if isinstance(m, BasedFinSet) else m
    n = n.size if isinstance(n, BasedFinSet) else n
    out = []
    for body in product(range(n + 1), repeat=m):
        f = BasedMap(m, n, (0,) + body)
        if f.in_kind(kind):
            out.append(f)
    return tuple(out)


def collapse(n: int) -> BasedMap:
    """The map sending every positive element of n to 1."""
    return BasedMap(n, 1, (0,) + (1,) * n)


def constant_zero(m: int, n: int) -> BasedMap:
    return BasedMap(m, n, (0,) * (m + 1))


def wedge(f: BasedMap, g: BasedMap) -> BasedMap:
    """Block sum: the first source block maps through f, the second through g."""
    table = [0]
    for i in range(1, f.source + 1):
        table.append(f.table[i])
    for i in range(1, g.source + 1):
        v = g.table[i]
        table.append(f.target + v if v > 0 else 0)
    return BasedMap(f.source + g.source, f.target + g.target, tuple(table))


def wedge_all(maps) -> BasedMap:
    out = BasedMap(0, 0, (0,))
    for f in maps:
        out = wedge(out, f)
    return out


def smash_index(i: int, j: int, n: int) -> int:
    """Position of the pair (i, j) among positive elements of m smash n."""
    return n * (i - 1) + j


def smash(f: BasedMap, g: BasedMap) -> BasedMap:
    """Smash product: (i, j) maps to (f(i), g(j)), lexicographic indexing."""
    m, n = f.source, g.source
    table = [0] * (m * n + 1)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            fi, gj = f.table[i], g.table[j]
            pos = smash_index(i, j, n)
            table[pos] = smash_index(fi, gj, g.target) if fi > 0 and gj > 0 else 0
    return BasedMap(m * n, f.target * g.target, tuple(table))


def smash_all(maps) -> BasedMap:
    out = identity(1)
    for f in maps:
        out = smash(out, f)
    return out


def block_permutation(sigma: BasedMap, sizes) -> BasedMap:
    """The permutation of sum(sizes) letters moving block r to slot sigma(r).

    Block r keeps its internal order; the slot at position s in the target
    receives the block of size sizes[sigma^-1(s) - 1].
    """
    if not sigma.is_bijection() or sigma.source != len(sizes):
        raise ValueError("need a permutation of as many letters as blocks")
    k = len(sizes)
    inv = sigma.inverse()
    total = sum(sizes)
    target_offset = [0] * (k + 1)
    acc = 0
    for s in range(1, k + 1):
        target_offset[s] = acc
        acc += sizes[inv.table[s] - 1]
    table = [0] * (total + 1)
    off = 0
    for r in range(1, k + 1):
        for t in range(1, sizes[r - 1] + 1):
            table[off + t] = target_offset[sigma.table[r]] + t
        off += sizes[r - 1]
    return BasedMap(total, total, tuple(table))


def permutations(n: int) -> tuple:
    """The symmetric group on n letters as based bijections, lexicographic."""
    return enumerate_homs(SubcategoryKind.Sigma, n, n)
