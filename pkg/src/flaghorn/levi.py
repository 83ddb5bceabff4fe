"""Levi-movability of Schubert class tuples and the deformed product.

A tuple of classes with codimensions summing to the dimension of the
manifold is Levi-movable when general translates by the block-diagonal
subgroup already intersect properly.  Three equivalent decision routes
are implemented:

  via_i    the intersection number is nonzero and, at every step, the
           projected codimensions sum to the dimension of the one-step
           manifold;
  via_iii  every pairwise flattened product hits the point class of the
           pair Grassmannian (Littlewood-Richardson arithmetic only);
  via_iv   flattened degree equalities plus the full inequality system.

The deformed product keeps a classical structure constant exactly when
the associated triple is Levi-movable and zeroes it otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .flags import (
    FlagType,
    check_class_tuple,
    check_minimal_rep,
    codim,
    dual,
    enumerate_minimal_reps,
    projected_codim,
)
from .grassmann import condition_iii_failure, condition_iv_failure
from .oracle import intersection_number, structure_constants_pair
from .perm import Perm

__all__ = [
    "MovabilityReport",
    "condition_i_detail",
    "check_condition_i",
    "is_levi_movable",
    "exact_degree_tuples",
    "enumerate_levi_movable",
    "bk_structure_constant",
    "bk_product",
]

METHODS = ("via_iii", "via_i", "via_iv", "cross_check")


@dataclass(frozen=True)
class MovabilityReport:
    """Outcome of a movability decision.  Condition fields left as None
    were not evaluated by the chosen method; whenever several are
    evaluated they agree, and cross_check raises rather than return a
    report with disagreeing fields."""

    classes: tuple[Perm, ...]
    flag: FlagType
    method: str
    condition_i: bool | None = None
    condition_iii: bool | None = None
    condition_iv: bool | None = None
    coefficient: int | None = None
    failing_witness: str | None = None

    @property
    def movable(self) -> bool:
        for verdict in (self.condition_i, self.condition_iii, self.condition_iv):
            if verdict is not None:
                return verdict
        raise RuntimeError("no condition was evaluated")


def condition_i_detail(
    classes: tuple[Perm, ...], flag: FlagType
) -> tuple[bool, int, str | None]:
    """Oracle route: (verdict, intersection number, failure witness).

    The tuple passes when its intersection number is nonzero and, for
    every step a_i, the projected codimensions sum to a_i * (n - a_i),
    the dimension of the one-step manifold.
    """
    classes = check_class_tuple(classes, flag)
    coefficient = intersection_number(classes, flag)
    if coefficient == 0:
        return False, 0, "intersection number is zero"
    for i in range(1, flag.r + 1):
        a = flag.steps[i - 1]
        expected = a * (flag.n - a)
        total = sum(projected_codim(w, flag, i) for w in classes)
        if total != expected:
            return (
                False,
                coefficient,
                f"step {i}: projected codimensions sum to {total}, "
                f"expected {expected}",
            )
    return True, coefficient, None


def check_condition_i(classes: tuple[Perm, ...], flag: FlagType) -> bool:
    """True if the oracle route accepts the tuple.

    >>> from .flags import FlagType
    >>> check_condition_i(((2, 3, 1), (2, 1, 3)), FlagType((1, 2), 3))
    True
    >>> check_condition_i(((3, 1, 2), (3, 1, 2), (2, 3, 1)), FlagType((1, 2), 3))
    False
    """
    ok, _, _ = condition_i_detail(classes, flag)
    return ok


def is_levi_movable(
    classes: tuple[Perm, ...], flag: FlagType, method: str = "via_iii"
) -> MovabilityReport:
    """Decide Levi-movability by the requested route and report the
    evaluated conditions.  cross_check runs all three routes and raises
    RuntimeError if they ever disagree.

    >>> from .flags import FlagType
    >>> is_levi_movable(((2, 3, 1), (2, 1, 3)), FlagType((1, 2), 3)).movable
    True
    """
    classes = check_class_tuple(classes, flag)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    if method == "via_i":
        ok, coefficient, witness = condition_i_detail(classes, flag)
        return MovabilityReport(
            classes, flag, method,
            condition_i=ok, coefficient=coefficient, failing_witness=witness,
        )
    if method == "via_iii":
        witness = condition_iii_failure(classes, flag)
        return MovabilityReport(
            classes, flag, method,
            condition_iii=witness is None, failing_witness=witness,
        )
    if method == "via_iv":
        witness = condition_iv_failure(classes, flag)
        return MovabilityReport(
            classes, flag, method,
            condition_iv=witness is None, failing_witness=witness,
        )
    ok_i, coefficient, witness_i = condition_i_detail(classes, flag)
    witness_iii = condition_iii_failure(classes, flag)
    witness_iv = condition_iv_failure(classes, flag)
    ok_iii = witness_iii is None
    ok_iv = witness_iv is None
    if not ok_i == ok_iii == ok_iv:
        raise RuntimeError(
            f"movability conditions disagree on {classes!r} over {flag}: "
            f"i={ok_i}, iii={ok_iii}, iv={ok_iv}"
        )
    return MovabilityReport(
        classes, flag, method,
        condition_i=ok_i, condition_iii=ok_iii, condition_iv=ok_iv,
        coefficient=coefficient,
        failing_witness=witness_i or witness_iii or witness_iv,
    )


def exact_degree_tuples(flag: FlagType, s: int) -> tuple[tuple[Perm, ...], ...]:
    """All unordered s-tuples of class indices whose codimensions sum to
    the dimension of the manifold, in lexicographic order."""
    if s < 2:
        raise ValueError(f"need at least two classes, got s={s}")
    reps = enumerate_minimal_reps(flag)
    dim = flag.dimension
    return tuple(
        combo
        for combo in combinations_with_replacement(reps, s)
        if sum(codim(w, flag) for w in combo) == dim
    )


def enumerate_levi_movable(
    flag: FlagType, s: int, method: str = "via_iii"
) -> list[tuple[tuple[Perm, ...], int]]:
    """All unordered Levi-movable s-tuples with their intersection
    numbers, in lexicographic order.  Tuples differing only by a
    reordering are listed once; every movability condition and the
    coefficient are invariant under reordering.

    >>> from .flags import FlagType
    >>> [(t, c) for t, c in enumerate_levi_movable(FlagType((1,), 2), 2)]
    [(((1, 2), (2, 1)), 1)]
    """
    out = []
    for combo in exact_degree_tuples(flag, s):
        if is_levi_movable(combo, flag, method).movable:
            out.append((combo, intersection_number(combo, flag)))
    return out


def bk_structure_constant(w: Perm, u: Perm, v: Perm, flag: FlagType) -> int:
    """Coefficient of the class of v in the deformed product of the
    classes of w and u: the classical coefficient when the triple
    (w, u, dual of v) is Levi-movable, and 0 otherwise.  Degree
    mismatches return 0, as in the classical product.

    >>> from .flags import FlagType
    >>> bk_structure_constant((3, 1, 2), (3, 1, 2), (2, 1, 3), FlagType((1, 2), 3))
    0
    """
    w = check_minimal_rep(w, flag)
    u = check_minimal_rep(u, flag)
    v = check_minimal_rep(v, flag)
    if codim(w, flag) + codim(u, flag) != codim(v, flag):
        return 0
    triple = (w, u, dual(v, flag))
    classical = intersection_number(triple, flag)
    if classical == 0:
        return 0
    return classical if is_levi_movable(triple, flag).movable else 0


def bk_product(w: Perm, u: Perm, flag: FlagType) -> dict[Perm, int]:
    """Deformed product of two classes: the classical expansion with
    every coefficient of a non-movable triple dropped.

    >>> from .flags import FlagType
    >>> bk_product((2, 3, 1), (3, 1, 2), FlagType((1, 2), 3))
    {}
    """
    w = check_minimal_rep(w, flag)
    u = check_minimal_rep(u, flag)
    out = {}
    for v, c in structure_constants_pair(w, u, flag).items():
        if is_levi_movable((w, u, dual(v, flag)), flag).movable:
            out[v] = c
    return out
