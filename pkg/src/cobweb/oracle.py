"""Brute-force verification of the closed forms and algebra laws.

The counting primitives here walk the materialized order relation and
nothing else: chains are counted by depth-first traversal over strict
steps (or cover steps for maximal chains), Mobius values come from the
defining recurrence, interval sizes from a plain membership scan.  None
of them consults the closed-form evaluators, so verify_suite can use them
as an independent referee for every formula and matrix identity.
Failures are data, not exceptions: each check reports how many pairs it
covered and carries its first few counterexamples.
"""

import random
from dataclasses import dataclass, field

from . import formulas, incidence
from .errors import CobwebError, NonInvertibleError
from .poset import FinitePoset, Vertex, covers, leq, lt

KINDS = ("chains-of-length-k", "all-chains", "maximal-chains",
         "interval-size", "moebius-recurrence")

_MAX_RECORDED_FAILURES = 5


@dataclass(frozen=True)
class ChainQuery:
    """One counting request against the brute-force walker."""

    poset: FinitePoset
    x: Vertex
    y: Vertex
    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CobwebError(f"unknown query kind '{self.kind}'")
        needs_k = self.kind == "chains-of-length-k"
        if needs_k and self.k is None:
            raise CobwebError("chains-of-length-k queries need k")
        if not needs_k and self.k is not None:
            raise CobwebError(f"'{self.kind}' queries take no k")


def enumerate_chains(q: ChainQuery) -> int:
    """Answer a ChainQuery by exact counting over the materialized relation."""
    p, x, y = q.poset, q.x, q.y
    if q.kind == "all-chains":
        return count_all_chains_brute(p, x, y)
    if q.kind == "maximal-chains":
        return count_maximal_chains_brute(p, x, y)
    if q.kind == "chains-of-length-k":
        return count_chains_of_length(p, x, y, q.k)
    if q.kind == "interval-size":
        return interval_size_brute(p, x, y)
    return moebius_by_recurrence(p, x, y)


def count_all_chains_brute(p: FinitePoset, x: Vertex, y: Vertex,
                           memo: dict | None = None) -> int:
    """Chains x = z_0 < ... < z_m = y of any length, counted by DFS.

    Counts rather than lists: results are memoized per (vertex, target),
    so exponential chain populations stay cheap.  Pass a shared memo dict
    to reuse work across queries on the same poset.
    """
    p.require_member(x)
    p.require_member(y)
    if memo is None:
        memo = {}

    def walk(v):
        if v == y:
            return 1
        key = ("all", v, y)
        got = memo.get(key)
        if got is None:
            got = 0
            for z in p.vertices:
                if lt(v, z) and leq(z, y):
                    got += walk(z)
            memo[key] = got
        return got

    return walk(x)


def count_maximal_chains_brute(p: FinitePoset, x: Vertex, y: Vertex,
                               memo: dict | None = None) -> int:
    """Cover-saturated chains from x to y, counted by DFS over cover steps."""
    p.require_member(x)
    p.require_member(y)
    if memo is None:
        memo = {}

    def walk(v):
        if v == y:
            return 1
        key = ("max", v, y)
        got = memo.get(key)
        if got is None:
            got = 0
            for z in p.vertices:
                if covers(v, z) and leq(z, y):
                    got += walk(z)
            memo[key] = got
        return got

    return walk(x)


def count_chains_of_length(p: FinitePoset, x: Vertex, y: Vertex, k: int,
                           memo: dict | None = None) -> int:
    """Chains from x to y with exactly k strict steps."""
    if k < 0:
        raise CobwebError(f"chain length must be >= 0, got {k}")
    p.require_member(x)
    p.require_member(y)
    if memo is None:
        memo = {}

    def walk(v, r):
        if r == 0:
            return 1 if v == y else 0
        key = ("len", v, r, y)
        got = memo.get(key)
        if got is None:
            got = 0
            for z in p.vertices:
                if lt(v, z) and leq(z, y):
                    got += walk(z, r - 1)
            memo[key] = got
        return got

    return walk(x, k)


def interval_size_brute(p: FinitePoset, x: Vertex, y: Vertex) -> int:
    """|[x, y]| by scanning every vertex for membership."""
    p.require_member(x)
    p.require_member(y)
    return sum(1 for z in p.vertices if leq(x, z) and leq(z, y))


def moebius_by_recurrence(p: FinitePoset, x: Vertex, y: Vertex,
                          memo: dict | None = None) -> int:
    """Mobius values from the defining recurrence, independent of any closed form.

    mu(x, x) = 1 and mu(x, y) = -sum of mu(x, z) over x <= z < y, evaluated
    over the materialized interval.
    """
    p.require_member(x)
    p.require_member(y)
    if memo is None:
        memo = {}

    def walk(b):
        if b == x:
            return 1
        if not lt(x, b):
            return 0
        key = ("mu", x, b)
        got = memo.get(key)
        if got is None:
            acc = 0
            for z in p.vertices:
                if leq(x, z) and lt(z, b):
                    acc += walk(z)
            got = -acc
            memo[key] = got
        return got

    return walk(y)


@dataclass(frozen=True)
class CheckFailure:
    x: object
    y: object
    expected: str
    got: str

    def to_json_dict(self) -> dict:
        return {"x": self.x, "y": self.y,
                "expected": self.expected, "got": self.got}


@dataclass
class CheckResult:
    name: str
    pairs_checked: int
    failures: list[CheckFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {"name": self.name, "pairs_checked": self.pairs_checked,
                "failures": [f.to_json_dict() for f in self.failures]}


@dataclass
class VerificationReport:
    sequence: str
    depth: int
    nu: int
    mode: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {"sequence": self.sequence, "depth": self.depth, "nu": self.nu,
                "mode": self.mode, "passed": self.passed,
                "checks": [c.to_json_dict() for c in self.checks]}


def verify_suite(p: FinitePoset, report_sink=None, *, pair_cap: int = 300,
                 seed: int = 0) -> VerificationReport:
    """Cross-check every closed form and algebra law on one finite poset.

    All vertex pairs are covered when nu <= pair_cap; on larger posets a
    seeded random sample of pairs is used instead and the whole-matrix
    checks (which would need dense nu x nu algebra) are dropped.  Each
    finished check is also handed to report_sink when one is given, so
    callers can stream progress.
    """
    exhaustive = p.nu <= pair_cap
    verts = p.vertices
    if exhaustive:
        pairs = [(x, y) for x in verts for y in verts]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(verts), rng.choice(verts))
                 for _ in range(10 * pair_cap)]
    report = VerificationReport(p.seq.spec, p.depth, p.nu,
                                "exhaustive" if exhaustive else "sampled")
    seq = p.seq
    memo: dict = {}

    def finish(name, rows, pairs_checked):
        failures = []
        for x, y, expected, got in rows:
            if expected != got and len(failures) < _MAX_RECORDED_FAILURES:
                failures.append(CheckFailure(_coords(x), _coords(y),
                                             str(expected), str(got)))
        result = CheckResult(name, pairs_checked, failures)
        report.checks.append(result)
        if report_sink is not None:
            report_sink(result)

    def mu_rows():
        for x, y in pairs:
            yield x, y, moebius_by_recurrence(p, x, y, memo), formulas.mu_at(seq, x, y)
    finish("mu-recurrence-vs-closed-form", mu_rows(), len(pairs))

    def interval_rows():
        for x, y in pairs:
            size = interval_size_brute(p, x, y)
            yield x, y, size, formulas.card_interval(seq, x, y)
            yield x, y, size, len(p.interval(x, y))
    finish("interval-cardinality", interval_rows(), len(pairs))

    def zeta_mu_rows():
        for x, y in pairs:
            total = 0
            for z in verts:
                if leq(x, z) and leq(z, y):
                    total += formulas.mu_at(seq, z, y)
            yield x, y, 1 if x == y else 0, total
    finish("zeta-mu-convolution-is-delta", zeta_mu_rows(), len(pairs))

    def eta_pow_rows():
        for x, y in pairs:
            for k in range(p.depth + 1):
                yield x, y, count_chains_of_length(p, x, y, k, memo), \
                    formulas.eta_pow_at(seq, k, x, y)
    finish("eta-powers-count-chains", eta_pow_rows(), len(pairs) * (p.depth + 1))

    def chi_pow_rows():
        for x, y in pairs:
            for k in range(p.depth + 1):
                want = _count_cover_paths_of_length(p, x, y, k, memo)
                yield x, y, want, formulas.chi_pow_at(seq, k, x, y)
    finish("chi-powers-count-maximal-chains", chi_pow_rows(),
           len(pairs) * (p.depth + 1))

    def all_chain_rows():
        for x, y in pairs:
            brute = count_all_chains_brute(p, x, y, memo)
            yield x, y, brute, formulas.count_all_chains(p, x, y)
            yield x, y, brute, sum(formulas.eta_pow_at(seq, k, x, y)
                                   for k in range(p.depth + 1))
    finish("all-chain-counts", all_chain_rows(), len(pairs))

    def max_chain_rows():
        for x, y in pairs:
            yield x, y, count_maximal_chains_brute(p, x, y, memo), \
                formulas.count_maximal_chains(p, x, y)
    finish("maximal-chain-counts", max_chain_rows(), len(pairs))

    def eta_sq_rows():
        for x, y in pairs:
            if lt(x, y):
                want = max(formulas.card_interval(seq, x, y) - 2, 0)
            else:
                want = 0
            yield x, y, want, formulas.eta_pow_at(seq, 2, x, y)
    finish("eta-squared-is-interval-minus-two", eta_sq_rows(), len(pairs))

    if seq.kind == "fibonacci":
        def telescope_rows():
            for t in range(0, 21):
                for v in range(t + 1, 21):
                    lhs = sum(seq.eval(i) for i in range(t + 1, v))
                    yield Vertex(1, t), Vertex(1, v), \
                        seq.eval(v + 1) - seq.eval(t + 2), lhs
        finish("fibonacci-level-sum-telescoping", telescope_rows(), 210)

    if exhaustive:
        _matrix_checks(p, pairs, memo, finish)
    return report


def _count_cover_paths_of_length(p, x, y, k, memo):
    # maximal chains have one step per level, so a k-step cover path exists
    # only when the gap is k; reuse the maximal-chain walker for the count
    if k == 0:
        return 1 if x == y else 0
    if y.level != x.level + k:
        return 0
    return count_maximal_chains_brute(p, x, y, memo)


def _matrix_checks(p, pairs, memo, finish):
    seq = p.seq
    d = incidence.delta(p)
    z = incidence.zeta(p)
    m_eta = incidence.eta(p)
    m_chi = incidence.chi(p)
    m_mu = incidence.invert(z)
    ck = incidence.chain_kernel(p)
    mk = incidence.maximal_chain_kernel(p)
    ck_inv = incidence.invert(ck)
    mk_inv = incidence.invert(mk)
    z2 = incidence.convolve(z, z)

    named = [("zeta", z, formulas.zeta_at),
             ("mu", m_mu, formulas.mu_at),
             ("eta", m_eta, formulas.eta_at),
             ("chi", m_chi, formulas.chi_at),
             ("chain-kernel", ck, formulas.chain_kernel_at),
             ("maximal-chain-kernel", mk, formulas.maximal_chain_kernel_at)]
    for name, mat, fn in named:
        def agreement_rows(mat=mat, fn=fn):
            for x, y in pairs:
                i, j = p.index_of(x), p.index_of(y)
                yield x, y, mat.entries[i][j], fn(seq, x, y)
        finish(f"matrix-vs-pointwise-{name}", agreement_rows(), len(pairs))

    def zeta_sq_rows():
        for x, y in pairs:
            i, j = p.index_of(x), p.index_of(y)
            yield x, y, interval_size_brute(p, x, y), z2.entries[i][j]
    finish("zeta-squared-counts-interval", zeta_sq_rows(), len(pairs))

    def kernel_rows():
        for x, y in pairs:
            i, j = p.index_of(x), p.index_of(y)
            yield x, y, count_all_chains_brute(p, x, y, memo), ck_inv.entries[i][j]
            yield x, y, count_maximal_chains_brute(p, x, y, memo), mk_inv.entries[i][j]
    finish("inverted-kernels-count-chains", kernel_rows(), len(pairs))

    def series_rows():
        yield None, None, True, incidence.geometric_inverse_of_delta_minus(m_chi) == mk_inv
        yield None, None, True, incidence.geometric_inverse_of_delta_minus(m_eta) == ck_inv
    finish("geometric-series-matches-inversion", series_rows(), 2)

    def inversion_law_rows():
        yield None, None, True, incidence.convolve(z, m_mu) == d
        yield None, None, True, incidence.convolve(m_mu, z) == d
    finish("zeta-mu-matrix-inversion", inversion_law_rows(), 2)

    def support_rows():
        verts = p.vertices
        for mat in (z2, m_mu, ck_inv, mk_inv):
            for i, x in enumerate(verts):
                for j, y in enumerate(verts):
                    if not leq(x, y):
                        yield x, y, 0, mat.entries[i][j]
    finish("support-closure", support_rows(), 4 * p.nu * p.nu)

    rng = random.Random(1)
    IncFn = incidence.IncidenceFunction

    def random_function():
        return IncFn.from_callable(p, lambda x, y: rng.randint(-4, 4))

    def associativity_rows():
        for trial in range(3):
            f, g, h = random_function(), random_function(), random_function()
            lhs = incidence.convolve(incidence.convolve(f, g), h)
            rhs = incidence.convolve(f, incidence.convolve(g, h))
            yield trial, None, True, lhs == rhs
    finish("convolution-associativity", associativity_rows(), 3)

    def double_inversion_rows():
        for trial in range(3):
            f = IncFn.from_callable(
                p, lambda x, y: rng.choice((1, -1)) if x == y else rng.randint(-4, 4))
            yield trial, None, True, incidence.invert(incidence.invert(f)) == f
    finish("double-inversion-restores", double_inversion_rows(), 3)

    def zero_diag_rows():
        try:
            incidence.invert(m_eta)
            yield None, None, "NonInvertibleError", "no error"
        except NonInvertibleError:
            yield None, None, "NonInvertibleError", "NonInvertibleError"
    finish("zero-diagonal-rejected", zero_diag_rows(), 1)


def _coords(v):
    if isinstance(v, Vertex):
        return [v.position, v.level]
    return v
