"""Flag types for type A partial flag manifolds and their Schubert classes.

A flag type is a strictly increasing tuple of steps (a_1, ..., a_r) inside
an ambient dimension n; it names the manifold of nested subspaces of the
given dimensions in C^n.  Schubert classes on it are indexed by the
permutations of [n] that ascend everywhere except possibly at the steps
(the minimal length representatives of the corresponding cosets); the
class of index w has dimension length(w).

The steps cut [n] into r+1 consecutive blocks.  Block i has the positions
a_{i-1}+1 .. a_i (with a_0 = 0, a_{r+1} = n) and size b_i = a_i - a_{i-1}.
An empty step tuple is allowed and names a single point; its only class
is the unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .perm import (
    Perm,
    check_permutation,
    compose,
    flatten,
    length,
    longest_element,
)

__all__ = [
    "FlagType",
    "complete_flag",
    "grassmannian_flag",
    "enumerate_flag_types",
    "is_minimal_rep",
    "check_minimal_rep",
    "check_class_tuple",
    "enumerate_minimal_reps",
    "parabolic_longest",
    "dual",
    "codim",
    "project_to_step",
    "projected_codim",
    "flatten_pair",
    "pair_grassmannian",
    "fiber_flag",
    "restrict_to_fiber",
    "fiber_reduction",
]


@dataclass(frozen=True)
class FlagType:
    """Steps 0 < a_1 < ... < a_r < n together with the ambient n.

    >>> FlagType((1, 2), 3).dimension
    3
    >>> FlagType.parse("1,3/4")
    FlagType(steps=(1, 3), n=4)
    >>> str(FlagType((2,), 4))
    '2/4'
    """

    steps: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        if self.n < 1:
            raise ValueError("ambient dimension must be at least 1")
        prev = 0
        for a in steps:
            if not isinstance(a, int) or not prev < a < self.n:
                raise ValueError(
                    f"steps must satisfy 0 < a_1 < ... < a_r < {self.n}: {steps!r}"
                )
            prev = a

    @property
    def r(self) -> int:
        return len(self.steps)

    @property
    def bounds(self) -> tuple[int, ...]:
        """(a_0, a_1, ..., a_r, a_{r+1}) = (0, steps..., n)."""
        return (0, *self.steps, self.n)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        """(b_1, ..., b_{r+1}) with b_i = a_i - a_{i-1}."""
        b = self.bounds
        return tuple(b[i] - b[i - 1] for i in range(1, len(b)))

    def block(self, i: int) -> tuple[int, ...]:
        """Positions of block i, for i in 1 .. r+1.

        >>> FlagType((1, 2), 4).block(3)
        (3, 4)
        """
        b = self.bounds
        if not 1 <= i <= self.r + 1:
            raise ValueError(f"block index {i} outside 1..{self.r + 1}")
        return tuple(range(b[i - 1] + 1, b[i] + 1))

    @property
    def dimension(self) -> int:
        """Complex dimension of the manifold: sum of a_i * (a_{i+1} - a_i).

        >>> FlagType((1, 3), 4).dimension
        5
        """
        b = self.bounds
        return sum(b[i] * (b[i + 1] - b[i]) for i in range(1, len(b) - 1))

    @property
    def is_grassmannian(self) -> bool:
        return self.r == 1

    @property
    def is_complete(self) -> bool:
        return self.r == self.n - 1

    @classmethod
    def parse(cls, text: str) -> "FlagType":
        """Parse 'a_1,...,a_r/n'; a single step works as shorthand ('2/4')."""
        head, sep, tail = text.strip().partition("/")
        if not sep:
            raise ValueError(f"malformed flag type (expected 'steps/n'): {text!r}")
        try:
            n = int(tail)
            steps = tuple(int(p) for p in head.split(",")) if head else ()
        except ValueError:
            raise ValueError(f"malformed flag type: {text!r}") from None
        return cls(steps, n)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.steps) + f"/{self.n}"


def complete_flag(n: int) -> FlagType:
    """The flag type with every step present.

    >>> complete_flag(3)
    FlagType(steps=(1, 2), n=3)
    """
    return FlagType(tuple(range(1, n)), n)


def enumerate_flag_types(n: int) -> tuple[FlagType, ...]:
    """All flag types with at least one step in ambient dimension n.

    >>> [str(f) for f in enumerate_flag_types(3)]
    ['1/3', '2/3', '1,2/3']
    """
    out = []
    for k in range(1, n):
        for steps in combinations(range(1, n), k):
            out.append(FlagType(steps, n))
    return tuple(out)


def grassmannian_flag(r: int, n: int) -> FlagType:
    """The one-step flag type of r-planes in C^n."""
    return FlagType((r,), n)


def is_minimal_rep(w: Perm, flag: FlagType) -> bool:
    """True if w indexes a Schubert class of the flag manifold, i.e. w
    ascends at every position that is not a step.

    >>> is_minimal_rep((3, 1, 2), FlagType((1,), 3))
    True
    >>> is_minimal_rep((3, 2, 1), FlagType((1,), 3))
    False
    """
    if len(w) != flag.n:
        return False
    steps = set(flag.steps)
    return all(w[i - 1] < w[i] for i in range(1, flag.n) if i not in steps)


def check_minimal_rep(w: Perm, flag: FlagType) -> Perm:
    """Validate w as a class index for the flag type; ValueError otherwise."""
    w = check_permutation(w)
    if not is_minimal_rep(w, flag):
        raise ValueError(f"{w!r} does not index a Schubert class on {flag}")
    return w


def check_class_tuple(classes, flag: FlagType) -> tuple[Perm, ...]:
    """Validate a tuple of class indices whose codimensions sum to the
    dimension of the manifold, the precondition shared by all the
    intersection and movability routines.  ValueError otherwise."""
    out = tuple(check_minimal_rep(w, flag) for w in classes)
    total = sum(codim(w, flag) for w in out)
    if total != flag.dimension:
        raise ValueError(
            f"codimensions sum to {total}, expected {flag.dimension} on {flag}"
        )
    return out


@lru_cache(maxsize=None)
def enumerate_minimal_reps(flag: FlagType) -> tuple[Perm, ...]:
    """All class indices for the flag type, in lexicographic order.

    There are n! / (b_1! ... b_{r+1}!) of them.

    >>> enumerate_minimal_reps(FlagType((1,), 3))
    ((1, 2, 3), (2, 1, 3), (3, 1, 2))
    """
    sizes = flag.block_sizes

    def fill(remaining: tuple[int, ...], sizes: tuple[int, ...]):
        if not sizes:
            yield ()
            return
        for head in combinations(remaining, sizes[0]):
            rest = tuple(v for v in remaining if v not in set(head))
            for tail in fill(rest, sizes[1:]):
                yield head + tail

    return tuple(fill(tuple(range(1, flag.n + 1)), sizes))


def parabolic_longest(flag: FlagType) -> Perm:
    """The longest permutation that fixes every block, i.e. the one that
    reverses the values inside each block.

    >>> parabolic_longest(FlagType((2,), 4))
    (2, 1, 4, 3)
    """
    out = []
    for i in range(1, flag.r + 2):
        out.extend(reversed(flag.block(i)))
    return tuple(out)


def dual(w: Perm, flag: FlagType) -> Perm:
    """The index of the Poincare dual class: w0 * w * (block reversal).

    The dual has complementary length, and the pairing of a class with its
    dual is the point class.  Applying dual twice returns w.

    >>> dual((2, 4, 1, 3), FlagType((2,), 4))
    (1, 3, 2, 4)
    """
    w = check_minimal_rep(w, flag)
    return compose(longest_element(flag.n), compose(w, parabolic_longest(flag)))


def codim(w: Perm, flag: FlagType) -> int:
    """Codimension of the class indexed by w: dimension(flag) - length(w)."""
    w = check_minimal_rep(w, flag)
    return flag.dimension - length(w)


def project_to_step(w: Perm, flag: FlagType, i: int) -> Perm:
    """Index of the image of the class under forgetting all steps except
    a_i: sort w(1..a_i) ascending and w(a_i+1..n) ascending.

    >>> project_to_step((3, 2, 1), FlagType((1, 2), 3), 1)
    (3, 1, 2)
    >>> project_to_step((3, 2, 1), FlagType((1, 2), 3), 2)
    (2, 3, 1)
    """
    w = check_minimal_rep(w, flag)
    if not 1 <= i <= flag.r:
        raise ValueError(f"step index {i} outside 1..{flag.r}")
    a = flag.steps[i - 1]
    return tuple(sorted(w[:a])) + tuple(sorted(w[a:]))


def projected_codim(w: Perm, flag: FlagType, i: int) -> int:
    """Codimension of the projected class inside the one-step manifold of
    a_i-planes: the sum of n - a_i + j - w(j) over j = 1 .. a_i.

    >>> projected_codim((2, 3, 1), FlagType((1, 2), 3), 1)
    1
    """
    w = check_minimal_rep(w, flag)
    if not 1 <= i <= flag.r:
        raise ValueError(f"step index {i} outside 1..{flag.r}")
    a = flag.steps[i - 1]
    return sum(flag.n - a + j - w[j - 1] for j in range(1, a + 1))


def flatten_pair(w: Perm, flag: FlagType, i: int, j: int) -> Perm:
    """Standardize w on the union of blocks i and j (i < j, both in
    1 .. r+1).  The result indexes a class on the Grassmannian of
    b_i-planes in C^(b_i + b_j).

    >>> flatten_pair((2, 3, 1), FlagType((1, 2), 3), 1, 3)
    (2, 1)
    """
    w = check_minimal_rep(w, flag)
    if not 1 <= i < j <= flag.r + 1:
        raise ValueError(f"need 1 <= i < j <= {flag.r + 1}, got ({i}, {j})")
    return flatten(w, flag.block(i) + flag.block(j))


def pair_grassmannian(flag: FlagType, i: int, j: int) -> FlagType:
    """The Grassmannian of b_i-planes in C^(b_i + b_j) that receives the
    pair flattening of blocks i < j."""
    if not 1 <= i < j <= flag.r + 1:
        raise ValueError(f"need 1 <= i < j <= {flag.r + 1}, got ({i}, {j})")
    b = flag.block_sizes
    return grassmannian_flag(b[i - 1], b[i - 1] + b[j - 1])


def fiber_flag(flag: FlagType) -> FlagType:
    """Flag type of the fiber of forgetting every step except the first:
    steps a_2 - a_1, ..., a_r - a_1 inside n - a_1.  For a one-step flag
    the fiber is a point (no steps).

    >>> fiber_flag(FlagType((1, 2), 3))
    FlagType(steps=(1,), n=2)
    """
    if flag.r < 1:
        raise ValueError("a point has no fiber reduction")
    a1 = flag.steps[0]
    return FlagType(tuple(a - a1 for a in flag.steps[1:]), flag.n - a1)


def restrict_to_fiber(w: Perm, flag: FlagType) -> Perm:
    """Standardize w on the positions past the first step.  The result
    indexes a class on the fiber flag manifold.

    >>> restrict_to_fiber((2, 3, 1), FlagType((1, 2), 3))
    (2, 1)
    """
    w = check_minimal_rep(w, flag)
    if flag.r < 1:
        raise ValueError("a point has no fiber reduction")
    a1 = flag.steps[0]
    return flatten(w, range(a1 + 1, flag.n + 1))


def fiber_reduction(w: Perm, flag: FlagType) -> tuple[Perm, Perm, FlagType]:
    """Split w into (projection to the first step, fiber restriction,
    fiber flag type).

    >>> fiber_reduction((2, 3, 1), FlagType((1, 2), 3))
    ((2, 1, 3), (2, 1), FlagType(steps=(1,), n=2))
    """
    return (
        project_to_step(w, flag, 1),
        restrict_to_fiber(w, flag),
        fiber_flag(flag),
    )
