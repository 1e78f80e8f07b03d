import pytest
from itertools import product

from opcats.finset import (
    BasedFinSet,
    BasedMap,
    SubcategoryKind,
    block_permutation,
    collapse,
    compose,
    enumerate_homs,
    identity,
    permutations,
    smash,
    wedge,
    wedge_all,
)

S, L, P, F = (
    SubcategoryKind.Sigma,
    SubcategoryKind.Lambda,
    SubcategoryKind.Pi,
    SubcategoryKind.F,
)


def all_based_tables(m, n):
    for body in product(range(n + 1), repeat=m):
        yield (0,) + body


def test_f_1_1():
    homs = enumerate_homs(F, 1, 1)
    assert homs == (BasedMap(1, 1, (0, 0)), BasedMap(1, 1, (0, 1)))


def test_sigma_3_3_count():
    assert len(enumerate_homs(S, 3, 3)) == 6


def test_pi_2_1_against_brute_force():
    # oracle: filter all 4 based maps by the "at most one positive preimage" rule
    expected = []
    for table in all_based_tables(2, 1):
        fibers = [sum(1 for i in (1, 2) if table[i] == j) for j in (1,)]
        if all(c <= 1 for c in fibers):
            expected.append(table)
    assert len(expected) == 3
    got = [f.table for f in enumerate_homs(P, 2, 1)]
    assert got == expected
    assert (0, 1, 1) not in got


def test_lambda_2_3_against_brute_force():
    expected = [
        t for t in all_based_tables(2, 3) if len(set(t)) == 3
    ]
    assert len(expected) == 6
    assert [f.table for f in enumerate_homs(L, 2, 3)] == expected


@pytest.mark.parametrize("m", range(5))
@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("kind", [S, L, P, F])
def test_enumeration_matches_independent_filter(kind, m, n):
    def pred(table):
        if kind is S:
            return sorted(table) == list(range(n + 1)) and m == n
        if kind is L:
            return len(set(table)) == m + 1
        if kind is P:
            return all(
                sum(1 for i in range(1, m + 1) if table[i] == j) <= 1
                for j in range(1, n + 1)
            )
        return True

    expected = [t for t in all_based_tables(m, n) if pred(t)]
    got = [f.table for f in enumerate_homs(kind, m, n)]
    assert got == expected
    for f in enumerate_homs(kind, m, n):
        assert f.in_kind(kind)


def test_compose_identity():
    f = BasedMap(2, 3, (0, 3, 1))
    assert compose(identity(3), f) == f
    assert compose(f, identity(2)) == f


def test_compose_mismatch():
    with pytest.raises(ValueError):
        compose(BasedMap(1, 1, (0, 1)), BasedMap(1, 2, (0, 2)))


def test_collapse_composition_rule():
    # phi_k composed with a wedge of phi_j's is phi_(sum of j's)
    for js in [(2, 3), (1, 1, 1), (0, 2), (3,)]:
        k = len(js)
        wedged = wedge_all([collapse(j) for j in js])
        assert compose(collapse(k), wedged) == collapse(sum(js))


@pytest.mark.parametrize("kind", [S, L, P, F])
def test_closure_under_composition(kind):
    for m in range(4):
        for n in range(4):
            for p in range(4):
                for g in enumerate_homs(kind, m, n):
                    for f in enumerate_homs(kind, n, p):
                        assert compose(f, g).in_kind(kind)


def test_sigma_group_structure():
    for n in range(4):
        perms = permutations(n)
        assert identity(n) in perms
        for a in perms:
            assert compose(a, a.inverse()) == identity(n)
            for b in perms:
                assert compose(a, b) in perms


def test_inclusions():
    for m in range(4):
        for n in range(4):
            sig = set(enumerate_homs(S, m, n))
            lam = set(enumerate_homs(L, m, n))
            pi = set(enumerate_homs(P, m, n))
            ff = set(enumerate_homs(F, m, n))
            assert sig <= lam <= pi <= ff


def test_wedge_identities():
    assert wedge(identity(2), identity(3)) == identity(5)
    f = BasedMap(2, 2, (0, 2, 0))
    assert wedge(f, identity(0)) == f
    assert wedge(identity(0), f) == f


def test_smash_object_example():
    # 2 smash 3 has positive elements the pairs (i, j) at position 3(i-1)+j
    got = smash(identity(2), identity(3))
    assert got == identity(6)
    swap = BasedMap(2, 2, (0, 2, 1))
    t = smash(swap, identity(3))
    # (1, j) -> (2, j): position j maps to 3+j
    assert t.table == (0, 4, 5, 6, 1, 2, 3)


def test_smash_unit():
    f = BasedMap(3, 2, (0, 1, 0, 2))
    assert smash(identity(1), f) == f
    assert smash(f, identity(1)) == f


def test_wedge_smash_functorial():
    maps2 = enumerate_homs(F, 2, 2)
    for f1 in maps2[:6]:
        for f2 in maps2[:6]:
            for g1 in maps2[:6]:
                for g2 in maps2[:6]:
                    assert wedge(compose(f1, f2), compose(g1, g2)) == compose(
                        wedge(f1, g1), wedge(f2, g2)
                    )
                    assert smash(compose(f1, f2), compose(g1, g2)) == compose(
                        smash(f1, g1), smash(f2, g2)
                    )


def test_wedge_smash_associative():
    a = BasedMap(1, 2, (0, 2))
    b = BasedMap(2, 1, (0, 1, 0))
    c = BasedMap(2, 2, (0, 1, 1))
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
    assert smash(smash(a, b), c) == smash(a, smash(b, c))


def test_block_permutation_basic():
    swap = BasedMap(2, 2, (0, 2, 1))
    pi = block_permutation(swap, (2, 3))
    # block of size 2 moves behind the block of size 3
    assert pi.table == (0, 4, 5, 1, 2, 3)
    assert block_permutation(identity(3), (1, 2, 1)) == identity(4)


def test_block_permutation_is_homomorphism():
    # moving blocks twice composes correctly when sizes travel with blocks
    sizes = (1, 2, 2)
    for a in permutations(3):
        for b in permutations(3):
            moved = tuple(sizes[b.inverse().table[s] - 1] for s in (1, 2, 3))
            lhs = block_permutation(compose(a, b), sizes)
            rhs = compose(block_permutation(a, moved), block_permutation(b, sizes))
            assert lhs == rhs


def test_based_fin_set():
    assert list(BasedFinSet(2).elements()) == [0, 1, 2]
    assert list(BasedFinSet(2).positives()) == [1, 2]
    with pytest.raises(ValueError):
        BasedFinSet(-1)


def test_json_round_trip():
    f = BasedMap(2, 3, (0, 3, 0))
    assert BasedMap.from_json(f.to_json()) == f
