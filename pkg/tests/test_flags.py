"""Flag types, class indexing, duality, projections, and reductions."""

import math

import pytest

from flaghorn.flags import (
    FlagType,
    check_class_tuple,
    check_minimal_rep,
    codim,
    complete_flag,
    dual,
    enumerate_flag_types,
    enumerate_minimal_reps,
    fiber_flag,
    fiber_reduction,
    flatten_pair,
    grassmannian_flag,
    is_minimal_rep,
    pair_grassmannian,
    parabolic_longest,
    project_to_step,
    projected_codim,
    restrict_to_fiber,
)
from flaghorn.perm import identity, length, longest_element


def test_flag_type_validation():
    with pytest.raises(ValueError):
        FlagType((2, 1), 4)
    with pytest.raises(ValueError):
        FlagType((0,), 3)
    with pytest.raises(ValueError):
        FlagType((3,), 3)
    with pytest.raises(ValueError):
        FlagType((1,), 0)
    assert FlagType((), 4).r == 0


def test_parse_and_str():
    assert FlagType.parse("1,3/4") == FlagType((1, 3), 4)
    assert FlagType.parse("2/4") == FlagType((2,), 4)
    assert str(FlagType((1, 3), 4)) == "1,3/4"
    with pytest.raises(ValueError):
        FlagType.parse("1,3")
    with pytest.raises(ValueError):
        FlagType.parse("a/4")
    with pytest.raises(ValueError):
        FlagType.parse("3,1/4")


def test_blocks_and_sizes():
    f = FlagType((1, 3), 5)
    assert f.bounds == (0, 1, 3, 5)
    assert f.block_sizes == (1, 2, 2)
    assert f.block(1) == (1,)
    assert f.block(2) == (2, 3)
    assert f.block(3) == (4, 5)
    with pytest.raises(ValueError):
        f.block(4)


def test_dimension():
    assert complete_flag(4).dimension == 6
    assert grassmannian_flag(2, 5).dimension == 6
    assert FlagType((1, 2), 3).dimension == 3
    assert FlagType((), 4).dimension == 0


def test_special_constructors():
    assert complete_flag(3) == FlagType((1, 2), 3)
    assert grassmannian_flag(2, 4).is_grassmannian
    assert complete_flag(4).is_complete
    assert not grassmannian_flag(2, 4).is_complete


def test_enumerate_flag_types_counts():
    for n in range(2, 7):
        assert len(enumerate_flag_types(n)) == 2 ** (n - 1) - 1


def test_minimal_rep_predicate():
    g = grassmannian_flag(1, 3)
    assert is_minimal_rep((3, 1, 2), g)
    assert not is_minimal_rep((3, 2, 1), g)
    assert not is_minimal_rep((1, 2), g)
    with pytest.raises(ValueError):
        check_minimal_rep((3, 2, 1), g)


def test_enumerate_minimal_reps_pinned():
    assert enumerate_minimal_reps(FlagType((2,), 4)) == (
        (1, 2, 3, 4),
        (1, 3, 2, 4),
        (1, 4, 2, 3),
        (2, 3, 1, 4),
        (2, 4, 1, 3),
        (3, 4, 1, 2),
    )


@pytest.mark.parametrize("n", range(2, 6))
def test_enumerate_minimal_reps_invariants(n):
    for flag in enumerate_flag_types(n):
        reps = enumerate_minimal_reps(flag)
        expected = math.factorial(n)
        for b in flag.block_sizes:
            expected //= math.factorial(b)
        assert len(reps) == expected
        assert list(reps) == sorted(reps)
        assert all(is_minimal_rep(w, flag) for w in reps)
        lengths = [length(w) for w in reps]
        assert min(lengths) == 0
        assert max(lengths) == flag.dimension


def test_parabolic_longest():
    assert parabolic_longest(complete_flag(4)) == identity(4)
    assert parabolic_longest(FlagType((2,), 4)) == (2, 1, 4, 3)
    assert parabolic_longest(FlagType((), 3)) == longest_element(3)


def test_dual_pinned():
    g24 = grassmannian_flag(2, 4)
    assert dual((2, 4, 1, 3), g24) == (1, 3, 2, 4)
    assert dual((1, 4, 2, 3), g24) == (1, 4, 2, 3)
    assert dual((2, 3, 1, 4), g24) == (2, 3, 1, 4)
    f3 = complete_flag(3)
    assert dual((2, 3, 1), f3) == (2, 1, 3)
    assert dual((3, 1, 2), f3) == (1, 3, 2)


@pytest.mark.parametrize("n", range(2, 6))
def test_dual_involution_and_length(n):
    for flag in enumerate_flag_types(n):
        for w in enumerate_minimal_reps(flag):
            v = dual(w, flag)
            assert is_minimal_rep(v, flag)
            assert dual(v, flag) == w
            assert length(v) == flag.dimension - length(w)


def test_codim():
    f3 = complete_flag(3)
    assert codim((1, 2, 3), f3) == 3
    assert codim((3, 2, 1), f3) == 0
    assert codim((2, 3, 1), f3) == 1


def test_check_class_tuple():
    f3 = complete_flag(3)
    assert check_class_tuple(((2, 3, 1), (2, 1, 3)), f3) == ((2, 3, 1), (2, 1, 3))
    with pytest.raises(ValueError):
        check_class_tuple(((2, 3, 1), (2, 3, 1)), f3)
    with pytest.raises(ValueError):
        check_class_tuple(((3, 2, 1), (1, 2, 3)), grassmannian_flag(1, 3))


def test_project_to_step_pinned():
    f3 = complete_flag(3)
    assert project_to_step((3, 2, 1), f3, 1) == (3, 1, 2)
    assert project_to_step((3, 2, 1), f3, 2) == (2, 3, 1)
    with pytest.raises(ValueError):
        project_to_step((3, 2, 1), f3, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_projected_codim_matches_projected_class(n):
    for flag in enumerate_flag_types(n):
        for w in enumerate_minimal_reps(flag):
            for i in range(1, flag.r + 1):
                a = flag.steps[i - 1]
                one_step = grassmannian_flag(a, n)
                projected = project_to_step(w, flag, i)
                assert is_minimal_rep(projected, one_step)
                assert projected_codim(w, flag, i) == codim(projected, one_step)


def test_flatten_pair_pinned():
    f3 = complete_flag(3)
    assert flatten_pair((2, 3, 1), f3, 1, 3) == (2, 1)
    assert flatten_pair((3, 2, 1), f3, 1, 2) == (2, 1)
    assert pair_grassmannian(f3, 1, 3) == grassmannian_flag(1, 2)
    with pytest.raises(ValueError):
        flatten_pair((2, 3, 1), f3, 2, 2)
    with pytest.raises(ValueError):
        pair_grassmannian(f3, 1, 4)


@pytest.mark.parametrize("n", range(2, 6))
def test_flatten_pair_lands_on_pair_grassmannian(n):
    for flag in enumerate_flag_types(n):
        for w in enumerate_minimal_reps(flag):
            for i in range(1, flag.r + 2):
                for j in range(i + 1, flag.r + 2):
                    flat = flatten_pair(w, flag, i, j)
                    assert is_minimal_rep(flat, pair_grassmannian(flag, i, j))


def test_fiber_pinned():
    f3 = complete_flag(3)
    assert fiber_flag(f3) == FlagType((1,), 2)
    assert restrict_to_fiber((2, 3, 1), f3) == (2, 1)
    assert fiber_reduction((2, 3, 1), f3) == ((2, 1, 3), (2, 1), FlagType((1,), 2))
    assert fiber_flag(grassmannian_flag(2, 4)) == FlagType((), 2)
    with pytest.raises(ValueError):
        fiber_flag(FlagType((), 3))


@pytest.mark.parametrize("n", range(2, 7))
def test_fiber_restriction_lands_on_fiber_flag(n):
    for flag in enumerate_flag_types(n):
        ff = fiber_flag(flag)
        for w in enumerate_minimal_reps(flag):
            assert is_minimal_rep(restrict_to_fiber(w, flag), ff)
