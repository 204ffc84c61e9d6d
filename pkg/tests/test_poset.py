import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cobweb import (AdmissibilityError, NotInPosetError, SequenceError, Vertex,
                    covers, leq, level_width, lt, parse_sequence, rank,
                    validate_vertex)
from conftest import BUILTIN_SPECS, build


def test_fibonacci_p6_counts():
    p = build("fibonacci", 6)
    assert p.nu == 21
    assert p.level_sizes() == [1, 1, 1, 2, 3, 5, 8]


def test_constant_poset_is_a_chain():
    p = build("constant:1", 3)
    assert p.nu == 4
    assert p.hasse_edges() == [
        (Vertex(1, 0), Vertex(1, 1)),
        (Vertex(1, 1), Vertex(1, 2)),
        (Vertex(1, 2), Vertex(1, 3)),
    ]


def test_depth_zero_is_just_the_root():
    p = build("fibonacci", 0)
    assert p.vertices == [Vertex(1, 0)]
    assert p.nu == 1


def test_leq_examples():
    assert leq(Vertex(1, 2), Vertex(3, 4))
    assert not leq(Vertex(1, 2), Vertex(2, 2))
    assert leq(Vertex(2, 3), Vertex(2, 3))


def test_covers_examples():
    assert covers(Vertex(1, 1), Vertex(2, 2))
    assert not covers(Vertex(1, 1), Vertex(1, 3))
    assert not covers(Vertex(1, 1), Vertex(1, 1))


def test_rank_is_level():
    assert rank(Vertex(1, 0)) == 0
    assert rank(Vertex(2, 3)) == 3
    assert rank(Vertex(5, 5)) == 5


def test_fibonacci_p2_edges():
    p = build("fibonacci", 2)
    assert p.hasse_edges() == [(Vertex(1, 0), Vertex(1, 1)),
                               (Vertex(1, 1), Vertex(1, 2))]


def test_fibonacci_p6_edge_count():
    # consecutive-level products: 1*1 + 1*1 + 1*2 + 2*3 + 3*5 + 5*8 = 65
    p = build("fibonacci", 6)
    sizes = p.level_sizes()
    assert sum(a * b for a, b in zip(sizes, sizes[1:])) == 65
    assert len(p.hasse_edges()) == 65


def test_interval_enumeration():
    p = build("fibonacci", 4)
    assert p.interval(Vertex(1, 1), Vertex(1, 4)) == [
        Vertex(1, 1), Vertex(1, 2), Vertex(1, 3), Vertex(2, 3), Vertex(1, 4)]


def test_interval_singleton_and_empty():
    p = build("fibonacci", 3)
    x = Vertex(1, 2)
    assert p.interval(x, x) == [x]
    assert p.interval(Vertex(1, 3), Vertex(2, 3)) == []
    assert p.interval(Vertex(1, 3), Vertex(1, 1)) == []


def test_interval_requires_membership():
    p = build("fibonacci", 3)
    with pytest.raises(NotInPosetError):
        p.interval(Vertex(1, 0), Vertex(1, 9))


def test_vertex_coordinate_validation():
    with pytest.raises(AdmissibilityError):
        Vertex(0, 1)
    with pytest.raises(AdmissibilityError):
        Vertex(1, -1)


def test_validate_vertex_against_sequence():
    fib = parse_sequence("fibonacci")
    validate_vertex(fib, Vertex(1, 0))     # root exists despite F_0 = 0
    validate_vertex(fib, Vertex(8, 6))
    with pytest.raises(AdmissibilityError):
        validate_vertex(fib, Vertex(2, 0))
    with pytest.raises(AdmissibilityError):
        validate_vertex(fib, Vertex(9, 6))


def test_level_width_root_convention():
    fib = parse_sequence("fibonacci")
    assert level_width(fib, 0) == 1
    assert level_width(fib, 5) == 5


def test_build_fails_when_list_prefix_too_short():
    with pytest.raises(SequenceError):
        build("list:1,2", 4)


@pytest.mark.parametrize("spec,n", [("fibonacci", 6), ("naturals", 4)])
def test_order_axioms_exhaustive(spec, n):
    p = build(spec, n)
    vs = p.vertices
    for x in vs:
        assert leq(x, x)
    for x, y in itertools.product(vs, repeat=2):
        if leq(x, y) and leq(y, x):
            assert x == y
    for x, y, z in itertools.product(vs, repeat=3):
        if leq(x, y) and leq(y, z):
            assert leq(x, z)


def test_cover_iff_interval_has_two_elements():
    p = build("fibonacci", 4)
    for x, y in itertools.product(p.vertices, repeat=2):
        assert covers(x, y) == (len(p.interval(x, y)) == 2)


def test_maximal_chains_are_graded():
    p = build("fibonacci", 4)

    def cover_chains(v, target):
        if v == target:
            return [[v]]
        found = []
        for z in p.vertices:
            if covers(v, z) and leq(z, target):
                found.extend([v] + rest for rest in cover_chains(z, target))
        return found

    root = Vertex(1, 0)
    for top in p.levels[-1]:
        chains = cover_chains(root, top)
        assert chains
        for chain in chains:
            assert len(chain) == p.depth + 1


@pytest.mark.parametrize("spec", BUILTIN_SPECS)
def test_linear_extension_refines_order(spec):
    p = build(spec, 4)
    for x, y in itertools.product(p.vertices, repeat=2):
        if leq(x, y):
            assert p.index_of(x) <= p.index_of(y)


def test_json_dump_shape():
    p = build("fibonacci", 2)
    dump = p.to_json_dict()
    assert dump == {
        "sequence": "fibonacci",
        "depth": 2,
        "nu": 3,
        "levels": [1, 1, 1],
        "edges": [[[1, 0], [1, 1]], [[1, 1], [1, 2]]],
    }


_coords = st.builds(Vertex, st.integers(1, 40), st.integers(0, 40))


@given(_coords, _coords, _coords)
def test_leq_axioms_on_raw_coordinates(x, y, z):
    assert leq(x, x)
    if leq(x, y) and leq(y, x):
        assert x == y
    if leq(x, y) and leq(y, z):
        assert leq(x, z)
    assert lt(x, y) == (leq(x, y) and x != y)
