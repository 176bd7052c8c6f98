import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from circsort import (EmptyInput, ModulusMismatch, NotABijection, Perm,
                      compose, coset_profile, cycle_count, cycle_decomposition,
                      cycle_type, identity, inverse, make_perm, normalize_zero,
                      shift, shift_cycle_counts, t_coset, transposition_distance)

EXAMPLE = [1, 3, 5, 2, 4, 0]


@st.composite
def perms(draw, min_n=1, max_n=30):
    n = draw(st.integers(min_n, max_n))
    return Perm(draw(st.permutations(list(range(n)))))


def test_make_perm_examples():
    assert make_perm([0, 1, 2]) == identity(3)
    assert make_perm(EXAMPLE).n == 6
    with pytest.raises(NotABijection):
        make_perm([0, 0, 1])
    with pytest.raises(NotABijection):
        make_perm([0, 3, 1])
    with pytest.raises(EmptyInput):
        make_perm([])


def test_perm_is_immutable_and_hashable():
    p = Perm(EXAMPLE)
    with pytest.raises(AttributeError):
        p.n = 4
    assert hash(p) == hash(Perm(list(EXAMPLE)))
    assert len({p, Perm(EXAMPLE), identity(6)}) == 2


def test_compose_examples():
    p = Perm(EXAMPLE)
    assert compose(identity(6), p) == p
    assert compose(p, inverse(p)) == identity(6)
    assert compose(Perm([1, 2, 0]), Perm([1, 2, 0])) == Perm([2, 0, 1])
    assert p * inverse(p) == identity(6)
    with pytest.raises(ModulusMismatch):
        compose(identity(3), identity(4))


def test_compose_is_p_after_q():
    p, q = Perm([1, 2, 0, 3]), Perm([3, 2, 1, 0])
    r = compose(p, q)
    assert all(r(x) == p(q(x)) for x in range(4))


def test_shift_examples():
    p = Perm(EXAMPLE)
    assert shift(p, 0) == p
    assert shift(identity(5), 2) == Perm([2, 3, 4, 0, 1])
    s1 = shift(p, 1)
    assert s1 == Perm([3, 5, 2, 4, 0, 1])
    assert cycle_count(s1) == 3


def test_cycle_decomposition_examples():
    assert cycle_decomposition(identity(4))[1] == (1, 1, 1, 1)
    cycles, ctype = cycle_decomposition(Perm(EXAMPLE))
    assert ctype == (1, 5)
    assert cycles == [(0, 1, 3, 2, 5), (4,)]
    assert cycle_type(Perm([1, 0, 3, 2])) == (2, 2)


def test_transposition_distance_examples():
    assert transposition_distance(identity(7)) == 0
    assert transposition_distance(Perm(EXAMPLE)) == 4
    assert transposition_distance(Perm([1, 2, 3, 4, 0])) == 4


def test_coset_profile_examples():
    prof = coset_profile(Perm(EXAMPLE))
    assert prof.t_coset == 3
    assert prof.cycle_counts == (2, 3, 2, 3, 2, 3)
    for n in range(1, 8):
        assert coset_profile(identity(n)).t_coset == 0
    prof = coset_profile(Perm([0, 2, 4, 1, 3]))
    assert set(prof.shift_types) == {(1, 4)}
    assert prof.t_coset == 3


def test_small_moduli_are_legal():
    assert t_coset(identity(1)) == 0
    assert t_coset(identity(2)) == 0
    assert t_coset(Perm([1, 0])) == 0


def test_normalize_zero_examples():
    p = Perm([0, 2, 1, 3])
    assert normalize_zero(p) == p
    assert normalize_zero(Perm([2, 3, 4, 0, 1])) == identity(5)
    q = normalize_zero(Perm(EXAMPLE))
    assert q == Perm([0, 2, 4, 1, 3, 5])
    assert t_coset(q) == 3


def test_cycle_counts_match_sympy_exhaustively_small_n():
    for n in range(1, 7):
        for img in itertools.permutations(range(n)):
            p = Perm(img)
            assert cycle_count(p) == oracles.cycles(img)
            assert cycle_type(p) == oracles.cycle_type(img)
            assert t_coset(p) == oracles.t_coset(img)


def test_profile_matches_oracle_on_random_perms():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(2, 40)
        img = list(range(n))
        rng.shuffle(img)
        prof = coset_profile(Perm(img))
        assert prof.shift_types == tuple(
            oracles.cycle_type(oracles.shifted(img, k)) for k in range(n))


@settings(max_examples=300, deadline=None)
@given(perms())
def test_fixed_counts_sum_to_n(p):
    assert sum(coset_profile(p).fixed_counts) == p.n


@settings(max_examples=300, deadline=None)
@given(perms(min_n=2))
def test_t_coset_range(p):
    assert 0 <= coset_profile(p).t_coset <= p.n - 2


@settings(max_examples=200, deadline=None)
@given(perms(), st.integers(-50, 50), st.integers(-50, 50))
def test_shift_composes_additively(p, a, b):
    assert shift(shift(p, a), b) == shift(p, a + b)
    assert shift(p, p.n) == p


@settings(max_examples=200, deadline=None)
@given(perms())
def test_profile_types_consistent(p):
    prof = coset_profile(p)
    for k, t in enumerate(prof.shift_types):
        assert sum(t) == p.n
        assert all(part >= 1 for part in t)
        assert prof.fixed_counts[k] == t.count(1)
        longer = [c for c in t if c >= 2]
        assert prof.min_nontrivial_cycle[k] == (min(longer) if longer else None)
    assert prof.t_coset == min(p.n - len(t) for t in prof.shift_types)


@settings(max_examples=200, deadline=None)
@given(perms())
def test_normalize_zero_rotates_profile(p):
    a = coset_profile(p).shift_types
    b = coset_profile(normalize_zero(p)).shift_types
    assert any(b == a[r:] + a[:r] for r in range(p.n))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 25).flatmap(
    lambda n: st.tuples(st.permutations(list(range(n))),
                        st.permutations(list(range(n))))))
def test_transposition_distance_subadditive(pair):
    p, q = Perm(pair[0]), Perm(pair[1])
    assert (transposition_distance(compose(p, q))
            <= transposition_distance(p) + transposition_distance(q))


@pytest.mark.parametrize("n", [4, 6, 8])
def test_even_n_shifts_alternate_parity(n):
    def sign(t):
        return (-1) ** sum(c - 1 for c in t)

    for img in itertools.islice(itertools.permutations(range(n)), 0, None, 7):
        types = coset_profile(Perm(img)).shift_types
        for k in range(n):
            assert sign(types[k]) == -sign(types[(k + 1) % n])
        assert any(t != (1, n - 1) for t in types)


def test_shift_cycle_counts_agrees_with_profile():
    p = Perm(EXAMPLE)
    assert shift_cycle_counts(p) == list(coset_profile(p).cycle_counts)
