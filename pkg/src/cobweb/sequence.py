"""Defining sequences for cobweb posets.

A cobweb poset is designated by a natural-number sequence: level s of the
poset carries F_s vertices.  Sequences are described by a small spec
language:

    fibonacci            F_0=0, F_1=1, F_2=1, F_3=2, ...
    constant:<k>         F_0=1, F_n=k for n >= 1  (k >= 1)
    naturals             F_0=1, F_n=n for n >= 1
    pow2                 F_0=1, F_n=2**n for n >= 1
    list:<n0>,<n1>,...   explicit prefix; evaluation past the prefix fails

Values are exact unbounded integers.  Admissibility: F_n >= 1 for n >= 1,
and F_0 is either 1 or 0 (0 marks the root level as exceptional,
Fibonacci-style; the root vertex is materialized regardless).
"""

from .errors import SequenceError


class CobwebSequence:
    """A validated sequence, evaluated lazily and memoized.

    Immutable after construction except for the memo table, which is a
    pure cache: repeated eval(n) always returns the same value.
    """

    def __init__(self, kind: str, spec: str, *, constant: int | None = None,
                 terms: tuple[int, ...] | None = None):
        self.kind = kind
        self.spec = spec
        self._constant = constant
        self._terms = terms
        self._cache: dict[int, int] = {}

    def __repr__(self):
        return f"CobwebSequence({self.spec!r})"

    def eval(self, n: int) -> int:
        """Return F_n."""
        if n < 0:
            raise SequenceError(f"sequence index must be >= 0, got {n}")
        cached = self._cache.get(n)
        if cached is None:
            cached = self._compute(n)
            self._cache[n] = cached
        return cached

    def _compute(self, n: int) -> int:
        if self.kind == "fibonacci":
            a, b = 0, 1
            for _ in range(n):
                a, b = b, a + b
            return a
        if self.kind == "constant":
            return 1 if n == 0 else self._constant
        if self.kind == "naturals":
            return 1 if n == 0 else n
        if self.kind == "pow2":
            return 1 if n == 0 else 2 ** n
        if n >= len(self._terms):
            raise SequenceError(
                f"'{self.spec}' defines terms up to index {len(self._terms) - 1}; "
                f"F_{n} is not available")
        return self._terms[n]


def parse_sequence(spec_text: str) -> CobwebSequence:
    """Parse a sequence spec string into a validated CobwebSequence.

    Every string conforming to the grammar parses; everything else raises
    SequenceError with a one-line reason.  Explicitly listed terms are
    checked for admissibility here (F_0 in {0, 1}, later terms >= 1).
    """
    text = spec_text.strip()
    if text == "fibonacci":
        return CobwebSequence("fibonacci", "fibonacci")
    if text == "naturals":
        return CobwebSequence("naturals", "naturals")
    if text == "pow2":
        return CobwebSequence("pow2", "pow2")
    if text.startswith("constant:"):
        k = _parse_int(text[len("constant:"):], text)
        if k < 1:
            raise SequenceError(f"constant sequences need k >= 1, got {k}")
        return CobwebSequence("constant", f"constant:{k}", constant=k)
    if text.startswith("list:"):
        body = text[len("list:"):]
        if not body:
            raise SequenceError("empty term list in 'list:' spec")
        terms = tuple(_parse_int(tok, text) for tok in body.split(","))
        if terms[0] not in (0, 1):
            raise SequenceError(f"F_0 must be 0 or 1, got {terms[0]}")
        for i, t in enumerate(terms[1:], start=1):
            if t < 1:
                raise SequenceError(f"term F_{i} must be >= 1, got {t}")
        spec = "list:" + ",".join(str(t) for t in terms)
        return CobwebSequence("list", spec, terms=terms)
    raise SequenceError(f"unrecognized sequence spec '{spec_text}'")


def _parse_int(token: str, spec: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise SequenceError(f"'{token}' in '{spec}' is not an integer") from None
