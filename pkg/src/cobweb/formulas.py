"""Closed-form pointwise evaluators for the named incidence functions.

These work directly on vertex coordinates for arbitrary levels — no finite
poset has to be built first — which realizes the functions on the full
infinite poset.  Only the two chain-count operations take a FinitePoset,
and then only to pin down membership.  Queries on pairs that are not
comparable return 0, mirroring the support condition; coordinates that no
poset over the sequence contains raise AdmissibilityError.
"""

from fractions import Fraction

from .errors import CobwebError
from .poset import FinitePoset, Vertex, covers, leq, lt, validate_vertex
from .sequence import CobwebSequence


def zeta_at(seq: CobwebSequence, x: Vertex, y: Vertex) -> int:
    """1 iff x <= y."""
    _validate_pair(seq, x, y)
    return 1 if leq(x, y) else 0


def eta_at(seq: CobwebSequence, x: Vertex, y: Vertex) -> int:
    """1 iff x < y strictly (zeta minus delta)."""
    _validate_pair(seq, x, y)
    return 1 if lt(x, y) else 0


def chi_at(seq: CobwebSequence, x: Vertex, y: Vertex) -> int:
    """1 iff y covers x."""
    _validate_pair(seq, x, y)
    return 1 if covers(x, y) else 0


def chain_kernel_at(seq: CobwebSequence, x: Vertex, y: Vertex) -> int:
    """2*delta - zeta pointwise: 1 on the diagonal, -1 below-strictly, else 0."""
    _validate_pair(seq, x, y)
    if x == y:
        return 1
    return -1 if lt(x, y) else 0


def maximal_chain_kernel_at(seq: CobwebSequence, x: Vertex, y: Vertex) -> int:
    """delta - chi pointwise."""
    _validate_pair(seq, x, y)
    if x == y:
        return 1
    return -1 if covers(x, y) else 0


def mu_at(seq: CobwebSequence, x: Vertex, y: Vertex) -> int:
    """Mobius function in closed form.

    1 on the diagonal, -1 on covers, and for a level gap of k >= 2 the
    signed product (-1)^k * prod(F_i - 1) over the levels strictly between.
    """
    _validate_pair(seq, x, y)
    if x == y:
        return 1
    if not lt(x, y):
        return 0
    gap = y.level - x.level
    if gap == 1:
        return -1
    prod = 1
    for i in range(x.level + 1, y.level):
        prod *= seq.eval(i) - 1
    return prod if gap % 2 == 0 else -prod


def card_interval(seq: CobwebSequence, x: Vertex, y: Vertex) -> int:
    """Number of elements of the segment [x, y].

    1 when x == y, the between-level widths plus the two endpoints when
    x < y, and 0 on incomparable pairs.
    """
    _validate_pair(seq, x, y)
    if x == y:
        return 1
    if not lt(x, y):
        return 0
    return sum(seq.eval(i) for i in range(x.level + 1, y.level)) + 2


def eta_pow_at(seq: CobwebSequence, k: int, x: Vertex, y: Vertex) -> int:
    """Number of chains of length k (k+1 elements) from x to y.

    A chain picks k-1 strictly increasing intermediate levels and one
    vertex on each, so the count is the degree-(k-1) elementary symmetric
    sum of the level widths strictly between x and y; that sum is built by
    a single sweep over the levels instead of enumerating level tuples.
    k = 0 degenerates to the diagonal indicator and k = 1 to eta.
    """
    if k < 0:
        raise CobwebError(f"chain length must be >= 0, got {k}")
    _validate_pair(seq, x, y)
    if k == 0:
        return 1 if x == y else 0
    if not lt(x, y):
        return 0
    e = _symmetric_sums(seq, x.level, y.level)
    return e[k - 1] if k - 1 < len(e) else 0


def chi_pow_at(seq: CobwebSequence, k: int, x: Vertex, y: Vertex) -> int:
    """Number of maximal chains of length k from x to y.

    Nonzero only when the level gap is exactly k; then every intermediate
    level contributes a free choice, giving prod(F_i) over the levels
    strictly between.
    """
    if k < 0:
        raise CobwebError(f"chain length must be >= 0, got {k}")
    _validate_pair(seq, x, y)
    if k == 0:
        return 1 if x == y else 0
    if y.level != x.level + k:
        return 0
    prod = 1
    for i in range(x.level + 1, y.level):
        prod *= seq.eval(i)
    return prod


def count_all_chains(p: FinitePoset, x: Vertex, y: Vertex) -> int:
    """Total number of chains from x to y of any length.

    Sums the chain counts over every length, i.e. all elementary symmetric
    sums of the between-level widths; equals the (x, y) entry of the
    inverted chain kernel.
    """
    p.require_member(x)
    p.require_member(y)
    if x == y:
        return 1
    if not lt(x, y):
        return 0
    return sum(_symmetric_sums(p.seq, x.level, y.level))


def count_maximal_chains(p: FinitePoset, x: Vertex, y: Vertex) -> int:
    """Number of maximal (cover-saturated) chains from x to y."""
    p.require_member(x)
    p.require_member(y)
    if x == y:
        return 1
    if not lt(x, y):
        return 0
    return chi_pow_at(p.seq, y.level - x.level, x, y)


def mobius_inversion(p: FinitePoset, g: dict) -> dict:
    """Recover f from its down-set sums g.

    Given g(x) = sum of f(y) over y <= x, returns f via
    f(x) = sum of g(y) * mu(y, x) over y <= x, exactly.
    """
    _require_defined(p, g)
    f = {}
    for x in p.vertices:
        total = 0
        for y in p.vertices:
            if leq(y, x):
                m = mu_at(p.seq, y, x)
                if m:
                    total += g[y] * m
        f[x] = _norm_scalar(total)
    return f


def down_set_sums(p: FinitePoset, f: dict) -> dict:
    """The forward transform: g(x) = sum of f(y) over y <= x."""
    _require_defined(p, f)
    g = {}
    for x in p.vertices:
        total = 0
        for y in p.vertices:
            if leq(y, x):
                total += f[y]
        g[x] = _norm_scalar(total)
    return g


def _require_defined(p: FinitePoset, values: dict) -> None:
    for v in p.vertices:
        if v not in values:
            raise CobwebError(f"function is undefined on vertex {v}")


def _norm_scalar(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def _symmetric_sums(seq: CobwebSequence, t: int, v: int) -> list[int]:
    """Elementary symmetric sums e_0..e_r of the level widths F_{t+1}..F_{v-1}."""
    widths = [seq.eval(i) for i in range(t + 1, v)]
    e = [0] * (len(widths) + 1)
    e[0] = 1
    for w in widths:
        for m in range(len(widths), 0, -1):
            e[m] += w * e[m - 1]
    return e


def _validate_pair(seq: CobwebSequence, x: Vertex, y: Vertex) -> None:
    validate_vertex(seq, x)
    validate_vertex(seq, y)
