"""Grassmannian Schubert calculus: partitions, the Littlewood-Richardson
rule, and the Horn-type inequality tests used by the movability checks.

A Schubert class on the Grassmannian of r-planes in C^n corresponds to a
partition inside the r x (n - r) rectangle; the partition of the class
indexed by w (dimension convention) has parts n - r + j - w(j) for
j = 1 .. r, and its size is the codimension of the class.

Littlewood-Richardson coefficients are computed by direct enumeration of
skew semistandard fillings whose reverse reading word is a lattice word.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iter_product

from .flags import (
    FlagType,
    check_class_tuple,
    check_minimal_rep,
    enumerate_minimal_reps,
    flatten_pair,
    grassmannian_flag,
    pair_grassmannian,
)
from .perm import Perm, length

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "check_partition",
    "parse_partition",
    "format_partition",
    "partitions_in_rectangle",
    "partition_from_perm",
    "perm_from_partition",
    "lr_coefficient",
    "lr_expand",
    "product_to_point",
    "horn_inequality_holds",
    "check_condition_iii",
    "condition_iii_failure",
    "check_condition_iv",
    "condition_iv_failure",
]


def check_partition(parts) -> Partition:
    """Normalize to a weakly decreasing tuple of positive parts."""
    p = tuple(parts)
    if any(not isinstance(x, int) or x < 0 for x in p):
        raise ValueError(f"partition parts must be nonnegative integers: {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {p!r}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def parse_partition(text: str) -> Partition:
    """Parse '2,1'; '0' and '' both denote the empty partition.

    >>> parse_partition("2,1")
    (2, 1)
    >>> parse_partition("0")
    ()
    """
    body = text.strip()
    if body in ("", "0"):
        return ()
    try:
        parts = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ValueError(f"malformed partition: {text!r}") from None
    return check_partition(parts)


def format_partition(p: Partition) -> str:
    """Inverse of parse_partition; the empty partition prints as '0'."""
    return ",".join(str(x) for x in p) if p else "0"


def fits_rectangle(p: Partition, rows: int, cols: int) -> bool:
    return len(p) <= rows and (not p or p[0] <= cols)


def partitions_in_rectangle(rows: int, cols: int, size: int | None = None) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``,
    optionally restricted to a given total size.  Lexicographic order.

    >>> partitions_in_rectangle(2, 2)
    [(), (1,), (1, 1), (2,), (2, 1), (2, 2)]
    """

    def gen(maxpart: int, slots: int):
        yield ()
        if slots == 0:
            return
        for first in range(1, maxpart + 1):
            for rest in gen(first, slots - 1):
                yield (first,) + rest

    out = [p for p in gen(cols, rows) if size is None or sum(p) == size]
    return sorted(out)


def partition_from_perm(w: Perm, r: int, n: int) -> Partition:
    """Partition of the class indexed by w on the Grassmannian of r-planes
    in C^n.  The size of the partition is the codimension of the class.

    >>> partition_from_perm((2, 4, 1, 3), 2, 4)
    (1,)
    """
    w = check_minimal_rep(w, grassmannian_flag(r, n))
    return check_partition(tuple(n - r + j - w[j - 1] for j in range(1, r + 1)))


def perm_from_partition(p: Partition, r: int, n: int) -> Perm:
    """Inverse of partition_from_perm.

    >>> perm_from_partition((1,), 2, 4)
    (2, 4, 1, 3)
    """
    p = check_partition(p)
    if not fits_rectangle(p, r, n - r):
        raise ValueError(f"{p!r} does not fit inside {r} x {n - r}")
    padded = p + (0,) * (r - len(p))
    head = tuple(n - r + j - padded[j - 1] for j in range(1, r + 1))
    tail = tuple(sorted(set(range(1, n + 1)) - set(head)))
    return head + tail


def _contains(outer: Partition, inner: Partition) -> bool:
    return all(
        (outer[i] if i < len(outer) else 0) >= part for i, part in enumerate(inner)
    )


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient: the multiplicity of the
    class of nu in the product of the classes of lam and mu, equivalently
    the number of semistandard fillings of the skew shape nu/lam with
    content mu whose reverse reading word is a lattice word.

    >>> lr_coefficient((1,), (1,), (2,))
    1
    >>> lr_coefficient((2, 1), (2, 1), (3, 2, 1))
    2
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    nu = check_partition(nu)
    if sum(nu) != sum(lam) + sum(mu) or not _contains(nu, lam):
        return 0
    if not mu:
        return 1
    # cells in reverse reading order: each row right to left, top row first
    cells: list[tuple[int, int]] = []
    for q in range(1, len(nu) + 1):
        inner = lam[q - 1] if q - 1 < len(lam) else 0
        for col in range(nu[q - 1], inner, -1):
            cells.append((q, col))
    values = len(mu)
    filled: dict[tuple[int, int], int] = {}
    counts = [0] * (values + 1)

    def count_from(idx: int) -> int:
        if idx == len(cells):
            return 1
        q, col = cells[idx]
        right = filled.get((q, col + 1))
        above = filled.get((q - 1, col))
        total = 0
        for t in range(1, values + 1):
            if counts[t] >= mu[t - 1]:
                continue
            if t > 1 and counts[t - 1] <= counts[t]:
                continue
            if right is not None and t > right:
                continue
            if above is not None and t <= above:
                continue
            filled[(q, col)] = t
            counts[t] += 1
            total += count_from(idx + 1)
            counts[t] -= 1
            del filled[(q, col)]
        return total

    return count_from(0)


@lru_cache(maxsize=None)
def lr_expand(lam: Partition, mu: Partition, rows: int, cols: int) -> dict[Partition, int]:
    """Product of the classes of lam and mu truncated to the rectangle."""
    out: dict[Partition, int] = {}
    for nu in partitions_in_rectangle(rows, cols, sum(lam) + sum(mu)):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def product_to_point(partitions: tuple[Partition, ...], r: int, n: int) -> int:
    """Coefficient of the point class (the full r x (n - r) rectangle) in
    the product of the Grassmannian classes of the given partitions.
    Returns 0 if the sizes do not sum to r * (n - r).

    >>> product_to_point(((1,), (1,), (2,)), 2, 4)
    1
    >>> product_to_point(((1,),) * 4, 2, 4)
    2
    """
    cols = n - r
    parts = tuple(check_partition(p) for p in partitions)
    for p in parts:
        if not fits_rectangle(p, r, cols):
            raise ValueError(f"{p!r} does not fit inside {r} x {cols}")
    if sum(sum(p) for p in parts) != r * cols:
        return 0
    acc: dict[Partition, int] = {(): 1}
    for p in parts:
        nxt: dict[Partition, int] = {}
        for nu, c in acc.items():
            for kappa, c2 in lr_expand(nu, p, r, cols).items():
                nxt[kappa] = nxt.get(kappa, 0) + c * c2
        acc = nxt
    rectangle = (cols,) * r if cols else ()
    return acc.get(rectangle, 0)


def horn_inequality_holds(
    tuple_w: tuple[Perm, ...],
    tuple_u: tuple[Perm, ...],
    d: int,
    b_i: int,
    b_j: int,
) -> bool:
    """The inequality pairing classes w^k on the Grassmannian of
    b_i-planes in C^(b_i + b_j) with classes u^k on the Grassmannian of
    d-planes in C^b_i:

        sum over k, l <= d of (b_j + u^k(l) - w^k(u^k(l)))  <=  d * b_j

    >>> horn_inequality_holds((), (), 1, 2, 2)
    True
    """
    if len(tuple_w) != len(tuple_u):
        raise ValueError("class tuples must have the same length")
    if not 1 <= d < b_i:
        raise ValueError(f"need 1 <= d < {b_i}, got {d}")
    big = grassmannian_flag(b_i, b_i + b_j)
    small = grassmannian_flag(d, b_i)
    lhs = 0
    for w, u in zip(tuple_w, tuple_u):
        w = check_minimal_rep(w, big)
        u = check_minimal_rep(u, small)
        lhs += sum(b_j + u[l] - w[u[l] - 1] for l in range(d))
    return lhs <= d * b_j


def _flattened_partitions(
    classes: tuple[Perm, ...], flag: FlagType, i: int, j: int
) -> tuple[FlagType, tuple[Perm, ...], tuple[Partition, ...]]:
    gr = pair_grassmannian(flag, i, j)
    flats = tuple(flatten_pair(w, flag, i, j) for w in classes)
    parts = tuple(partition_from_perm(f, gr.steps[0], gr.n) for f in flats)
    return gr, flats, parts


def condition_iii_failure(classes: tuple[Perm, ...], flag: FlagType) -> str | None:
    """Pairwise point-product test: for every pair of blocks i < j the
    product of the flattened classes must be a nonzero multiple of the
    point class of the pair Grassmannian.  Returns None if every pair
    passes, else a description of the first failing pair."""
    classes = check_class_tuple(classes, flag)
    for i in range(1, flag.r + 2):
        for j in range(i + 1, flag.r + 2):
            gr, _, parts = _flattened_partitions(classes, flag, i, j)
            if product_to_point(parts, gr.steps[0], gr.n) == 0:
                return (
                    f"blocks ({i},{j}): flattened product misses the point class "
                    f"of {gr}"
                )
    return None


def check_condition_iii(classes: tuple[Perm, ...], flag: FlagType) -> bool:
    """True if every pairwise flattened product hits the point class."""
    return condition_iii_failure(classes, flag) is None


@lru_cache(maxsize=None)
def _point_positive_tuples(
    d: int, m: int, s: int, via: str
) -> tuple[tuple[Perm, ...], ...]:
    """Ordered s-tuples of class indices on the Grassmannian of d-planes
    in C^m whose product is a nonzero multiple of the point class."""
    small = grassmannian_flag(d, m)
    reps = enumerate_minimal_reps(small)
    dim = small.dimension
    out = []
    for combo in iter_product(reps, repeat=s):
        if sum(dim - length(u) for u in combo) != dim:
            continue
        if _grassmann_point_positive(combo, d, m, via):
            out.append(combo)
    return tuple(out)


def _grassmann_point_positive(classes: tuple[Perm, ...], d: int, m: int, via: str) -> bool:
    """Is the product of the classes a nonzero multiple of the point class
    of the Grassmannian of d-planes in C^m?  Degree is assumed exact.
    via='lr' decides by the Littlewood-Richardson rule; via='horn'
    decides recursively through the inequality system."""
    if via == "lr":
        parts = tuple(partition_from_perm(u, d, m) for u in classes)
        return product_to_point(parts, d, m) > 0
    if via == "horn":
        s = len(classes)
        for dp in range(1, d):
            for combo in _point_positive_tuples(dp, d, s, "horn"):
                if not horn_inequality_holds(classes, combo, dp, d, m - d):
                    return False
        return True
    raise ValueError(f"unknown nonvanishing route: {via!r}")


def condition_iv_failure(
    classes: tuple[Perm, ...], flag: FlagType, nonzero_via: str = "lr"
) -> str | None:
    """Degree-plus-inequalities test: for every pair of blocks i < j the
    flattened codimensions must sum to b_i * b_j, and for every
    1 <= d < b_i every tuple of classes on the d-plane Grassmannian in
    C^b_i with point-positive product must satisfy the pairing
    inequality.  Returns None if all hold, else the first failure."""
    classes = check_class_tuple(classes, flag)
    s = len(classes)
    b = flag.block_sizes
    for i in range(1, flag.r + 2):
        for j in range(i + 1, flag.r + 2):
            gr, flats, _ = _flattened_partitions(classes, flag, i, j)
            bi, bj = b[i - 1], b[j - 1]
            total = sum(bi * bj - length(f) for f in flats)
            if total != bi * bj:
                return (
                    f"blocks ({i},{j}): flattened codimensions sum to {total}, "
                    f"expected {bi * bj}"
                )
            for d in range(1, bi):
                for combo in _point_positive_tuples(d, bi, s, nonzero_via):
                    if not horn_inequality_holds(flats, combo, d, bi, bj):
                        return (
                            f"blocks ({i},{j}), d={d}: inequality fails for "
                            f"u-tuple {combo!r}"
                        )
    return None


def check_condition_iv(
    classes: tuple[Perm, ...], flag: FlagType, nonzero_via: str = "lr"
) -> bool:
    """True if the flattened degree equalities and all pairing
    inequalities hold."""
    return condition_iv_failure(classes, flag, nonzero_via) is None
