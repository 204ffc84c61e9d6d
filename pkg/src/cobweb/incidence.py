"""The incidence algebra of a finite cobweb poset as exact triangular matrices.

Functions on comparable pairs are stored densely as nu x nu arrays indexed
by the linear extension; the support condition (zero unless x <= y) makes
them upper triangular.  Scalars are Python ints and fractions.Fraction —
no floating point enters the value path.  Every operation returns a fresh
function and leaves its inputs untouched.
"""

from fractions import Fraction

from .errors import CobwebError, NonInvertibleError, PosetMismatchError
from .poset import FinitePoset, Vertex, covers, leq

Scalar = int | Fraction


def _norm(value):
    """Collapse integral fractions to plain ints."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def _exact_div(num, den):
    if den == 1:
        return num
    return _norm(Fraction(num, den))


def _check_scalar(e, i, j):
    if type(e) is bool:
        return int(e)
    if isinstance(e, int):
        return e
    if isinstance(e, Fraction):
        return _norm(e)
    raise CobwebError(
        f"entry at ({i},{j}) is {type(e).__name__}; only exact integers "
        "and fractions are allowed")


class IncidenceFunction:
    """An element of the incidence algebra over one finite poset.

    entries[i][j] holds the value at (x_i, x_j) and is zero whenever
    x_i <= x_j fails; both conditions are enforced at construction.
    """

    def __init__(self, poset: FinitePoset, entries):
        nu = poset.nu
        if len(entries) != nu or any(len(row) != nu for row in entries):
            raise CobwebError(f"entries must form a {nu}x{nu} array")
        verts = poset.vertices
        checked = [[_check_scalar(e, i, j) for j, e in enumerate(row)]
                   for i, row in enumerate(entries)]
        for i, row in enumerate(checked):
            for j, e in enumerate(row):
                if e and not leq(verts[i], verts[j]):
                    raise CobwebError(
                        f"nonzero entry at incomparable pair {verts[i]}, {verts[j]}")
        self.poset = poset
        self.entries = checked

    @classmethod
    def from_callable(cls, poset: FinitePoset, fn) -> "IncidenceFunction":
        """Build a function from fn(x, y); fn is consulted only on comparable pairs."""
        verts = poset.vertices
        nu = poset.nu
        entries = [[0] * nu for _ in range(nu)]
        for i, x in enumerate(verts):
            row = entries[i]
            for j in range(i, nu):
                if leq(x, verts[j]):
                    row[j] = fn(x, verts[j])
        return cls(poset, entries)

    def at(self, x: Vertex, y: Vertex) -> Scalar:
        """Value at a vertex pair."""
        return self.entries[self.poset.index_of(x)][self.poset.index_of(y)]

    def __eq__(self, other):
        return (isinstance(other, IncidenceFunction)
                and self.poset.key == other.poset.key
                and self.entries == other.entries)

    __hash__ = None

    def __repr__(self):
        return (f"IncidenceFunction(seq={self.poset.seq.spec!r}, "
                f"depth={self.poset.depth}, nu={self.poset.nu})")


def _require_compatible(f: IncidenceFunction, g: IncidenceFunction) -> None:
    if f.poset.key != g.poset.key:
        raise PosetMismatchError(
            f"incompatible posets {f.poset.key} and {g.poset.key}")


def delta(p: FinitePoset) -> IncidenceFunction:
    """The Kronecker delta — identity of the algebra."""
    return IncidenceFunction.from_callable(p, lambda x, y: 1 if x == y else 0)


def zeta(p: FinitePoset) -> IncidenceFunction:
    """Characteristic function of the order relation."""
    return IncidenceFunction.from_callable(p, lambda x, y: 1)


def eta(p: FinitePoset) -> IncidenceFunction:
    """Strict-order indicator: zeta minus delta."""
    return IncidenceFunction.from_callable(p, lambda x, y: 0 if x == y else 1)


def chi(p: FinitePoset) -> IncidenceFunction:
    """Cover-relation indicator."""
    return IncidenceFunction.from_callable(p, lambda x, y: 1 if covers(x, y) else 0)


def mu(p: FinitePoset) -> IncidenceFunction:
    """Convolution inverse of zeta, computed by triangular inversion."""
    return invert(zeta(p))


def chain_kernel(p: FinitePoset) -> IncidenceFunction:
    """2*delta - zeta; its inverse counts all chains between two elements."""
    return IncidenceFunction.from_callable(p, lambda x, y: 1 if x == y else -1)


def maximal_chain_kernel(p: FinitePoset) -> IncidenceFunction:
    """delta - chi; its inverse counts maximal chains between two elements."""
    return IncidenceFunction.from_callable(
        p, lambda x, y: 1 if x == y else (-1 if covers(x, y) else 0))


def add(f: IncidenceFunction, g: IncidenceFunction) -> IncidenceFunction:
    _require_compatible(f, g)
    rows = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(f.entries, g.entries)]
    return IncidenceFunction(f.poset, rows)


def sub(f: IncidenceFunction, g: IncidenceFunction) -> IncidenceFunction:
    _require_compatible(f, g)
    rows = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(f.entries, g.entries)]
    return IncidenceFunction(f.poset, rows)


def scale(f: IncidenceFunction, c: Scalar) -> IncidenceFunction:
    c = _check_scalar(c, -1, -1)
    return IncidenceFunction(f.poset, [[c * e for e in row] for row in f.entries])


def convolve(f: IncidenceFunction, g: IncidenceFunction) -> IncidenceFunction:
    """Convolution product: h(x,y) = sum over x <= z <= y of f(x,z) g(z,y).

    Realized as the triangular matrix product; only indices between i and j
    contribute, and zero factors are skipped.
    """
    _require_compatible(f, g)
    nu = f.poset.nu
    A, B = f.entries, g.entries
    out = [[0] * nu for _ in range(nu)]
    for i in range(nu):
        Ai = A[i]
        Ci = out[i]
        for z in range(i, nu):
            a = Ai[z]
            if a:
                Bz = B[z]
                for j in range(z, nu):
                    b = Bz[j]
                    if b:
                        Ci[j] += a * b
    return IncidenceFunction(f.poset, out)


def power(f: IncidenceFunction, k: int) -> IncidenceFunction:
    """k-fold convolution of f with itself; power(f, 0) is delta."""
    if k < 0:
        raise CobwebError(f"power needs k >= 0, got {k}")
    out = delta(f.poset)
    for _ in range(k):
        out = convolve(out, f)
    return out


def invert(f: IncidenceFunction) -> IncidenceFunction:
    """Two-sided convolution inverse by back substitution up the triangle.

    g(x,x) = 1/f(x,x) and g(x,y) = -(1/f(x,x)) * sum over x < z <= y of
    f(x,z) g(z,y); division only ever happens by diagonal entries, so the
    result stays exact.
    """
    p = f.poset
    nu = p.nu
    A = f.entries
    for i in range(nu):
        if A[i][i] == 0:
            raise NonInvertibleError(
                f"not invertible: zero diagonal entry at vertex {p.vertices[i]}")
    out = [[0] * nu for _ in range(nu)]
    for i in range(nu - 1, -1, -1):
        Ai = A[i]
        out[i][i] = _exact_div(1, Ai[i])
        for j in range(i + 1, nu):
            acc = 0
            for z in range(i + 1, j + 1):
                a = Ai[z]
                if a:
                    b = out[z][j]
                    if b:
                        acc += a * b
            if acc:
                out[i][j] = _exact_div(-acc, Ai[i])
    return IncidenceFunction(p, out)


def geometric_inverse_of_delta_minus(f: IncidenceFunction) -> IncidenceFunction:
    """Sum of all convolution powers of a nilpotent f; equals invert(delta - f).

    Requires a zero diagonal: such a function climbs at least one level per
    factor, so powers beyond the poset depth vanish and the series is finite.
    """
    p = f.poset
    for i in range(p.nu):
        if f.entries[i][i] != 0:
            raise CobwebError(
                f"geometric series needs a zero diagonal; entry at vertex "
                f"{p.vertices[i]} is {f.entries[i][i]}")
    acc = delta(p)
    term = delta(p)
    for _ in range(p.depth):
        term = convolve(term, f)
        if _is_zero(term):
            break
        acc = add(acc, term)
    return acc


def _is_zero(f: IncidenceFunction) -> bool:
    return all(not e for row in f.entries for e in row)


def to_matrix(f: IncidenceFunction) -> list[list[Scalar]]:
    """Row-major copy of the underlying nu x nu array."""
    return [row[:] for row in f.entries]


def matrix_to_csv(f: IncidenceFunction) -> str:
    """CSV dump, one matrix row per line; rationals render as p/q."""
    return "\n".join(",".join(str(e) for e in row) for row in f.entries) + "\n"


def matrix_from_csv(poset: FinitePoset, text: str) -> IncidenceFunction:
    """Rebuild an incidence function over poset from a CSV dump."""
    rows = []
    for line in text.strip("\n").split("\n"):
        row = []
        for tok in line.split(","):
            try:
                row.append(_norm(Fraction(tok.strip())))
            except (ValueError, ZeroDivisionError):
                raise CobwebError(f"bad matrix entry {tok!r}") from None
        rows.append(row)
    return IncidenceFunction(poset, rows)


def matrix_to_json_dict(f: IncidenceFunction) -> dict:
    """JSON-ready dump; integer entries stay numbers, fractions become 'p/q' strings."""
    rows = [[e if isinstance(e, int) else str(e) for e in map(_norm, row)]
            for row in f.entries]
    return {"nu": f.poset.nu, "rows": rows}
