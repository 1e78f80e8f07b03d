"""Finite groups acting on based finite sets, and the orbit category.

Groups are multiplication tables over element indices 0..order-1 with
identity 0.  A homomorphism into a symmetric group assigns a based
bijection to every element; the induced G-set structure, conjugation
actions on hom sets, blockwise composition of homomorphisms, graph
subgroups of G x Sigma_n, twisted power fixed points, and the orbit
category with its fixed-point presheaves all live here.

Subgroup enumeration is exhaustive by closing subsets under the group
operations, which is fine at the intended scale (order up to about 24).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .finset import (
    BasedMap,
    SubcategoryKind,
    block_permutation,
    compose,
    identity,
    permutations,
    wedge_all,
)


class HomomorphismError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table, identity 0."""

    mult: tuple  # mult[a][b] = index of a*b
    name: str = "G"

    def __post_init__(self):
        n = self.order
        if any(len(row) != n for row in self.mult):
            raise ValueError("multiplication table must be square")
        if any(self.mult[0][a] != a or self.mult[a][0] != a for a in range(n)):
            raise ValueError("index 0 must be the identity")
        for a in range(n):
            if sorted(self.mult[a]) != list(range(n)):
                raise ValueError("rows must be permutations (cancellation fails)")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]]:
                        raise ValueError(f"associativity fails at {(a, b, c)}")

    @property
    def order(self) -> int:
        return len(self.mult)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.mult[a].index(0)

    def elements(self) -> range:
        return range(self.order)

    def conjugate(self, g: int, a: int) -> int:
        return self.mul(self.mul(g, a), self.inv(g))

    def subgroups(self) -> tuple:
        """Every subgroup, as a sorted tuple of element indices.

        Ordered by (size, elements) so the trivial subgroup comes first
        and the whole group last.
        """
        found = {(0,)}
        frontier = [(0,)]
        while frontier:
            new = []
            for sub in frontier:
                for g in self.elements():
                    if g in sub:
                        continue
                    closed = self._close(set(sub) | {g})
                    key = tuple(sorted(closed))
                    if key not in found:
                        found.add(key)
                        new.append(key)
            frontier = new
        return tuple(sorted(found, key=lambda s: (len(s), s)))

    def _close(self, seed: set) -> set:
        out = set(seed) | {0}
        frontier = list(out)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(out):
                    for c in (self.mul(a, b), self.mul(b, a), self.inv(a)):
                        if c not in out:
                            out.add(c)
                            nxt.append(c)
            frontier = nxt
        return out

    def is_subgroup(self, elems) -> bool:
        s = set(elems)
        return 0 in s and all(
            self.mul(a, b) in s and self.inv(a) in s for a in s for b in s
        )

    def to_json(self) -> dict:
        return {"order": self.order, "mult": [list(r) for r in self.mult]}

    @staticmethod
    def from_json(data: dict) -> "FiniteGroup":
        if "perm_gens" in data:
            return group_from_permutations(
                [tuple(g) for g in data["perm_gens"]], data.get("name", "G")
            )
        return FiniteGroup(tuple(tuple(r) for r in data["mult"]), data.get("name", "G"))


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(
        tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), f"C{n}"
    )


def group_from_permutations(gens, name="G") -> FiniteGroup:
    """Close permutation generators (tuples of 0-indexed images) into a group."""
    degree = len(gens[0])
    ident = tuple(range(degree))

    def mul(p, q):
        return tuple(p[q[i]] for i in range(degree))

    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                for q in (mul(p, g), mul(g, p)):
                    if q not in elems:
                        elems.add(q)
                        nxt.append(q)
        frontier = nxt
    ordered = [ident] + sorted(elems - {ident})
    index = {p: i for i, p in enumerate(ordered)}
    table = tuple(
        tuple(index[mul(p, q)] for q in ordered) for p in ordered
    )
    return FiniteGroup(table, name)


def symmetric_group(n: int) -> FiniteGroup:
    perms = [tuple(p.table[i] - 1 for i in range(1, n + 1)) for p in permutations(n)]
    gens = [p for p in perms if p != tuple(range(n))] or [tuple(range(n))]
    return group_from_permutations(gens, f"S{n}")


@dataclass(frozen=True)
class HomToSym:
    """A homomorphism from a finite group into Sigma_n, one permutation per element."""

    group: FiniteGroup
    degree: int
    images: tuple  # images[g] is a BasedMap permutation of degree letters

    def __call__(self, g: int) -> BasedMap:
        return self.images[g]

    def act(self, g: int, i: int) -> int:
        return self.images[g].table[i]

    def is_trivial(self) -> bool:
        return all(p == identity(self.degree) for p in self.images)

    def key(self) -> tuple:
        return tuple(p.table for p in self.images)


def trivial_hom(group: FiniteGroup, n: int) -> HomToSym:
    return HomToSym(group, n, tuple(identity(n) for _ in group.elements()))


def validate_hom(group: FiniteGroup, n: int, images) -> HomToSym:
    """Check that the assignment of permutations is a homomorphism.

    Raises HomomorphismError naming the first failing pair.
    """
    images = tuple(
        p if isinstance(p, BasedMap) else BasedMap(n, n, (0,) + tuple(p))
        for p in images
    )
    if len(images) != group.order:
        raise HomomorphismError("need one permutation per group element")
    for p in images:
        if not p.is_bijection() or p.source != n:
            raise HomomorphismError(f"{p.table} is not a permutation of {n} letters")
    if images[group.identity] != identity(n):
        raise HomomorphismError("identity element must map to the identity permutation")
    for g in group.elements():
        for h in group.elements():
            if compose(images[g], images[h]) != images[group.mul(g, h)]:
                raise HomomorphismError(
                    f"not a homomorphism: images of {g} and {h} compose wrongly"
                )
    return HomToSym(group, n, images)


def all_homs_to_sym(group: FiniteGroup, n: int, elements=None) -> tuple:
    """Every homomorphism from the subgroup given by elements (default all of G)."""
    elems = tuple(elements) if elements is not None else tuple(group.elements())
    perms = permutations(n)
    out = []
    for choice in product(perms, repeat=len(elems)):
        table = dict(zip(elems, choice))
        if table[group.identity] != identity(n):
            continue
        ok = all(
            compose(table[a], table[b]) == table[group.mul(a, b)]
            for a in elems
            for b in elems
            if group.mul(a, b) in table
        )
        if ok and all(group.mul(a, b) in table for a in elems for b in elems):
            out.append(tuple((e, table[e]) for e in elems))
    return tuple(out)


@dataclass(frozen=True)
class FiniteGSet:
    """The based G-set carried by a homomorphism alpha: G -> Sigma_n."""

    alpha: HomToSym

    @property
    def size(self) -> int:
        return self.alpha.degree

    def act(self, g: int, i: int) -> int:
        return 0 if i == 0 else self.alpha.act(g, i)

    def fixed_points(self, elems=None) -> tuple:
        group = self.alpha.group
        gs = tuple(elems) if elems is not None else tuple(group.elements())
        return tuple(
            i for i in range(self.size + 1) if all(self.act(g, i) == i for g in gs)
        )


def conjugation_action(
    kind: SubcategoryKind, f: BasedMap, g: int, alpha: HomToSym, beta: HomToSym
) -> BasedMap:
    """The action of g on a based map f: m^alpha -> n^beta by conjugation."""
    if alpha.degree != f.source or beta.degree != f.target:
        raise ValueError("hom degrees must match the map")
    ginv = alpha.group.inv(g)
    out = compose(beta(g), compose(f, alpha(ginv)))
    if not out.in_kind(kind):
        raise ValueError("conjugation left the subcategory, inconsistent input")
    return out


def composable(beta: HomToSym, alphas) -> bool:
    """Whether the blockwise composite homomorphism gamma(beta; alphas) exists.

    Requires the block data to match whenever beta moves one slot to another.
    """
    alphas = tuple(alphas)
    if len(alphas) != beta.degree:
        raise ValueError("need one alpha per letter of beta")
    k = beta.degree
    for g in beta.group.elements():
        for r in range(1, k + 1):
            s = beta.act(g, r)
            if alphas[r - 1].degree != alphas[s - 1].degree:
                return False
            if alphas[r - 1] != alphas[s - 1]:
                return False
    return True


def gamma_hom(beta: HomToSym, alphas) -> HomToSym:
    """The blockwise composite G -> Sigma_(sum of degrees) of a composable tuple."""
    alphas = tuple(alphas)
    if not composable(beta, alphas):
        raise ValueError("tuple is not composable")
    group = beta.group
    k = beta.degree
    sizes = tuple(a.degree for a in alphas)
    offsets = [0]
    for sz in sizes:
        offsets.append(offsets[-1] + sz)
    total = offsets[-1]
    images = []
    for g in group.elements():
        table = [0] * (total + 1)
        for r in range(1, k + 1):
            s = beta.act(g, r)
            for t in range(1, sizes[r - 1] + 1):
                table[offsets[r - 1] + t] = offsets[s - 1] + alphas[r - 1].act(g, t)
        images.append(BasedMap(total, total, tuple(table)))
    return validate_hom(group, total, tuple(images))


def semidirect_product(alpha: HomToSym) -> tuple:
    """Sigma_n semidirect G along conjugation by alpha.

    Returns (group, elems) where elems[i] = (perm_table, g) labels index i.
    """
    group = alpha.group
    n = alpha.degree
    perms = permutations(n)
    elems = [(p, g) for p in perms for g in group.elements()]

    def mul(x, y):
        (sig, g), (tau, h) = x, y
        conj = compose(compose(alpha(g), tau), alpha(group.inv(g)))
        return (compose(sig, conj), group.mul(g, h))

    index = {(p.table, g): i for i, (p, g) in enumerate(elems)}
    ident = index[(identity(n).table, 0)]
    order = [elems[ident]] + [e for i, e in enumerate(elems) if i != ident]
    idx2 = {(p.table, g): i for i, (p, g) in enumerate(order)}
    table = tuple(
        tuple(idx2[(mul(x, y)[0].table, mul(x, y)[1])] for y in order) for x in order
    )
    sd = FiniteGroup(table, f"S{n}x{group.name}")
    return sd, tuple((p.table, g) for p, g in order)


def semidirect_action_is_valid(alpha: HomToSym) -> bool:
    """Check (sigma, g) . i = sigma(alpha(g)(i)) defines an action on n^alpha."""
    sd, labels = semidirect_product(alpha)
    n = alpha.degree

    def act(idx, i):
        sig_table, g = labels[idx]
        return sig_table[alpha.act(g, i)] if i > 0 else 0

    for x in sd.elements():
        for y in sd.elements():
            for i in range(n + 1):
                if act(sd.mul(x, y), i) != act(x, act(y, i)):
                    return False
    return all(act(0, i) == i for i in range(n + 1))


@dataclass(frozen=True)
class GraphSubgroup:
    """The graph of a homomorphism H -> Sigma_n inside G x Sigma_n."""

    group: FiniteGroup
    subgroup: tuple  # element indices of H, sorted
    images: tuple  # pairs (h, perm_table) in the order of subgroup

    @property
    def pairs(self) -> frozenset:
        return frozenset(self.images)

    def intersect_sigma_is_trivial(self) -> bool:
        n = len(self.images[0][1]) - 1
        return all(
            h != self.group.identity or perm == tuple(range(n + 1))
            for h, perm in self.images
        )


def graph_family(group: FiniteGroup, n: int) -> tuple:
    """All graph subgroups of G x Sigma_n, one per distinct element set."""
    seen = {}
    for sub in group.subgroups():
        for hom in all_homs_to_sym(group, n, sub):
            pairs = tuple((h, p.table) for h, p in hom)
            key = frozenset(pairs)
            if key not in seen:
                seen[key] = GraphSubgroup(group, tuple(sub), pairs)
    return tuple(
        seen[k]
        for k in sorted(seen, key=lambda s: (len(s), sorted(s)))
    )


def twisted_power_fixed_points(
    elements, action, alpha: HomToSym, basepoint
) -> tuple:
    """Fixed tuples of the alpha-twisted G-action on X^n.

    The action is g . (x_1, ..., x_n) = (g x_(alpha(g^-1)(1)), ..., g x_(alpha(g^-1)(n))).
    action(g, x) must be a verified group action on the based set given by
    elements, fixing the basepoint.
    """
    group = alpha.group
    for g in group.elements():
        if action(g, basepoint) != basepoint:
            raise ValueError("action must fix the basepoint")
        for h in group.elements():
            for x in elements:
                if action(group.mul(g, h), x) != action(g, action(h, x)):
                    raise ValueError("not a group action")
    for x in elements:
        if action(0, x) != x:
            raise ValueError("identity must act trivially")
    n = alpha.degree
    out = []
    for tup in product(elements, repeat=n):
        ok = True
        for g in group.elements():
            ginv = group.inv(g)
            moved = tuple(action(g, tup[alpha.act(ginv, i) - 1]) for i in range(1, n + 1))
            if moved != tup:
                ok = False
                break
        if ok:
            out.append(tup)
    return tuple(out)


def graph_fixed_points(elements, action, alpha: HomToSym) -> tuple:
    """Fixed points of X^n under the graph subgroup of alpha, for cross-checking."""
    group = alpha.group
    n = alpha.degree
    out = []
    for tup in product(elements, repeat=n):
        ok = True
        for h in group.elements():
            perm = alpha(h)
            permuted = tuple(tup[perm.inverse().table[i] - 1] for i in range(1, n + 1))
            moved = tuple(action(h, x) for x in permuted)
            if moved != tup:
                ok = False
                break
        if ok:
            out.append(tup)
    return tuple(out)


# ---------------------------------------------------------------------------
# Orbit category and orbital presheaves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitMorphism:
    """A G-map G/H -> G/K, recorded by the coset gK it sends eH to."""

    src: int  # index of H in the subgroup list
    dst: int  # index of K
    coset: tuple  # sorted tuple of elements of gK


class OrbitCategory:
    """Objects are the cosets G/H for subgroups H, morphisms the G-maps.

    Morphisms G/H -> G/K correspond to H-fixed cosets gK, i.e. those with
    g^-1 H g contained in K.
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.subgroups = group.subgroups()
        self._cosets = []
        for sub in self.subgroups:
            seen = {}
            for g in group.elements():
                cs = tuple(sorted(group.mul(g, k) for k in sub))
                seen.setdefault(cs, cs)
            self._cosets.append(tuple(sorted(seen)))

    @property
    def trivial_index(self) -> int:
        return self.subgroups.index((0,))

    def objects(self) -> range:
        return range(len(self.subgroups))

    def cosets(self, obj: int) -> tuple:
        return self._cosets[obj]

    def coset_of(self, obj: int, g: int) -> tuple:
        sub = self.subgroups[obj]
        return tuple(sorted(self.group.mul(g, k) for k in sub))

    def homs(self, src: int, dst: int) -> tuple:
        H = self.subgroups[src]
        out = []
        for cs in self._cosets[dst]:
            g = cs[0]
            ginv = self.group.inv(g)
            if all(self.group.mul(self.group.mul(ginv, h), g) in set(self.subgroups[dst]) for h in H):
                out.append(OrbitMorphism(src, dst, cs))
        return tuple(out)

    def identity(self, obj: int) -> OrbitMorphism:
        return OrbitMorphism(obj, obj, self.coset_of(obj, 0))

    def compose(self, f2: OrbitMorphism, f1: OrbitMorphism) -> OrbitMorphism:
        """f2 after f1, for f1: A -> B and f2: B -> C."""
        if f1.dst != f2.src:
            raise ValueError("orbit morphisms do not compose")
        g1, g2 = f1.coset[0], f2.coset[0]
        return OrbitMorphism(f1.src, f2.dst, self.coset_of(f2.dst, self.group.mul(g1, g2)))

    def apply(self, f: OrbitMorphism, coset) -> tuple:
        """The underlying G-map, sending aH to a g K."""
        a = coset[0]
        return self.coset_of(f.dst, self.group.mul(a, f.coset[0]))


@dataclass
class OrbitalPresheaf:
    """A contravariant functor from the orbit category to based finite sets.

    values[obj] is a tuple of elements with values[obj][0] the basepoint;
    restriction(f) maps values[f.dst] -> values[f.src] for f: G/H -> G/K.
    """

    orbit: OrbitCategory
    values: tuple
    restrictions: dict  # (src, dst, coset) -> dict element -> element

    def value(self, obj: int) -> tuple:
        return self.values[obj]

    def basepoint(self, obj: int) -> object:
        return self.values[obj][0]

    def restrict(self, f: OrbitMorphism) -> dict:
        return self.restrictions[(f.src, f.dst, f.coset)]

    def check_functorial(self) -> list:
        """Return a list of violated composition or identity instances."""
        bad = []
        orb = self.orbit
        for obj in orb.objects():
            ident = orb.identity(obj)
            rm = self.restrict(ident)
            if any(rm[x] != x for x in self.values[obj]):
                bad.append(("identity", obj))
        for a in orb.objects():
            for b in orb.objects():
                for c in orb.objects():
                    for f1 in orb.homs(a, b):
                        for f2 in orb.homs(b, c):
                            comp = orb.compose(f2, f1)
                            r1, r2, rc = self.restrict(f1), self.restrict(f2), self.restrict(comp)
                            for x in self.values[c]:
                                if r1[r2[x]] != rc[x]:
                                    bad.append(("composition", a, b, c, f1.coset, f2.coset, x))
        for key, rm in self.restrictions.items():
            src = key[0]
            dst = key[1]
            if rm[self.values[dst][0]] != self.values[src][0]:
                bad.append(("basepoint", key))
        return bad

    def equal_to(self, other: "OrbitalPresheaf") -> bool:
        return (
            self.values == other.values and self.restrictions == other.restrictions
        )


def fixed_point_presheaf(orbit: OrbitCategory, elements, action, basepoint) -> OrbitalPresheaf:
    """The presheaf G/H -> X^H of a based G-set, restriction by translation."""
    group = orbit.group
    elements = tuple(elements)
    if elements[0] != basepoint:
        elements = (basepoint,) + tuple(x for x in elements if x != basepoint)
    values = []
    for obj in orbit.objects():
        H = orbit.subgroups[obj]
        fixed = tuple(x for x in elements if all(action(h, x) == x for h in H))
        values.append(fixed)
    restrictions = {}
    for a in orbit.objects():
        for b in orbit.objects():
            for f in orbit.homs(a, b):
                g = f.coset[0]
                restrictions[(a, b, f.coset)] = {x: action(g, x) for x in values[b]}
    return OrbitalPresheaf(orbit, tuple(values), restrictions)


def evaluate_at_free_orbit(p: OrbitalPresheaf):
    """The left adjoint: the value at G/e with its recovered G-action."""
    orbit = p.orbit
    e = orbit.trivial_index
    carrier = p.value(e)
    act = {}
    for g in orbit.group.elements():
        f = OrbitMorphism(e, e, orbit.coset_of(e, g))
        rm = p.restrict(f)
        for x in carrier:
            act[(g, x)] = rm[x]
    return carrier, act, p.basepoint(e)


def presheaf_unit_components(p: OrbitalPresheaf) -> dict:
    """The comparison maps P(G/H) -> (P(G/e))^H restricting along projections."""
    orbit = p.orbit
    e = orbit.trivial_index
    out = {}
    for obj in orbit.objects():
        proj = OrbitMorphism(e, obj, orbit.coset_of(obj, 0))
        rm = p.restrict(proj)
        out[obj] = {x: rm[x] for x in p.value(obj)}
    return out


def strictly_special(p: OrbitalPresheaf) -> bool:
    """Whether every comparison map into H-fixed points of P(G/e) is a bijection."""
    orbit = p.orbit
    carrier, act, _ = evaluate_at_free_orbit(p)
    units = presheaf_unit_components(p)
    for obj in orbit.objects():
        H = orbit.subgroups[obj]
        fixed = [x for x in carrier if all(act[(h, x)] == x for h in H)]
        image = [units[obj][x] for x in p.value(obj)]
        if sorted(map(repr, image)) != sorted(map(repr, fixed)):
            return False
        if len(set(image)) != len(image):
            return False
    return True
