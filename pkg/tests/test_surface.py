import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from webcoord import TriangulationError, dot_indexing, euler_characteristic, load_triangulation
from webcoord.surface import dump_triangulation, rot, triangle_dot_positions


def punctures(T):
    """Count vertex classes by walking corners across edges (union-find)."""
    parent = {(t, k): (t, k) for t in T.triangles for k in (1, 2, 3)}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for t in T.triangles:
        for k in (1, 2, 3):
            # v_k is the left end of slot k+2; across the edge it is the right end
            other = T.opposite(t, rot(k, 2))
            parent[find((t, k))] = find((other.tri, rot(other.slot, 2)))
    return len({find(x) for x in parent})


def test_torus_fixture(torus):
    assert len(torus.edges) == 3 and len(torus.triangles) == 2
    assert euler_characteristic(torus) == -1
    assert punctures(torus) == 1


def test_sphere_fixture(sphere):
    assert euler_characteristic(sphere) == -2
    assert punctures(sphere) == 4


def _doc(edges, tris=("T0", "T1")):
    return {
        "triangles": list(tris),
        "edges": [
            {"id": eid, "sides": [{"tri": a, "slot": i}, {"tri": b, "slot": j}]}
            for eid, (a, i), (b, j) in edges
        ],
    }


@pytest.mark.parametrize(
    "edges, message",
    [
        ([("a", ("T0", 1), ("T0", 2)), ("b", ("T0", 3), ("T1", 1)), ("c", ("T1", 2), ("T1", 3))], "self-folded"),
        ([("a", ("T0", 1), ("T1", 1)), ("b", ("T0", 1), ("T1", 2)), ("c", ("T0", 3), ("T1", 3))], "duplicate side"),
        ([("a", ("T0", 1), ("T1", 1)), ("b", ("T0", 2), ("T1", 2)), ("c", ("T0", 3), ("T1", 4))], "slot"),
        ([("a", ("T0", 1), ("T1", 1)), ("b", ("T0", 2), ("T1", 2))], "unglued"),
    ],
)
def test_rejects_bad_gluings(edges, message):
    with pytest.raises(TriangulationError, match=message):
        load_triangulation(_doc(edges))


def test_rejects_schema_errors():
    with pytest.raises(TriangulationError, match="schema"):
        load_triangulation({"triangles": ["T0"]})
    with pytest.raises(TriangulationError, match="schema"):
        load_triangulation('{"triangles": ["T0"], "edges": [{"id": "a"}]}')
    with pytest.raises(TriangulationError, match="schema"):
        load_triangulation('{"triangles": ["T0", "T1"], "edges": []}')
    with pytest.raises(TriangulationError, match="JSON"):
        load_triangulation("{not json")


def test_rejects_disconnected(torus):
    doc = torus.to_dict()
    twin = json.loads(json.dumps(doc).replace('"T0"', '"U0"').replace('"T1"', '"U1"'))
    for e in twin["edges"]:
        e["id"] += "'"
    doc["triangles"] += twin["triangles"]
    doc["edges"] += twin["edges"]
    with pytest.raises(TriangulationError, match="disconnected"):
        load_triangulation(doc)


def test_dot_indexing(torus, sphere):
    idx = dot_indexing(torus)
    assert idx.labels() == ["aL", "aR", "bL", "bR", "cL", "cR", "tT0", "tT1"]
    assert len(dot_indexing(sphere)) == 16


def test_triangle_dot_positions_swap_on_second_side(torus):
    assert triangle_dot_positions(torus, "T0") == [0, 1, 2, 3, 4, 5, 6]
    assert triangle_dot_positions(torus, "T1") == [1, 0, 3, 2, 5, 4, 7]


@pytest.mark.parametrize("name", ["torus", "sphere"])
def test_counting_identities(name, request):
    T = request.getfixturevalue(name)
    chi = euler_characteristic(T)
    assert 3 * len(T.triangles) == 2 * len(T.edges)
    assert len(dot_indexing(T)) == 2 * len(T.edges) + len(T.triangles) == -8 * chi


def test_reload_is_identity(torus, sphere):
    for T in (torus, sphere):
        again = load_triangulation(dump_triangulation(T))
        assert again == T
        assert dot_indexing(again) == dot_indexing(T)


def test_load_from_path(fixtures_dir):
    T = load_triangulation(str(fixtures_dir / "torus.json"))
    assert T.triangles == ("T0", "T1")


def _random_gluing(draw_perm, n_tri):
    tris = [f"T{i}" for i in range(n_tri)]
    sides = [(t, j) for t in tris for j in (1, 2, 3)]
    order = draw_perm(sides)
    edges = [(f"e{i}", order[2 * i], order[2 * i + 1]) for i in range(len(order) // 2)]
    return _doc(edges, tris)


@given(st.data())
@settings(max_examples=100)
def test_random_gluings_validate_or_raise(data):
    n = data.draw(st.sampled_from([2, 4, 6]))
    doc = _random_gluing(lambda xs: data.draw(st.permutations(xs)), n)
    try:
        T = load_triangulation(doc)
    except TriangulationError:
        return
    assert euler_characteristic(T) == -n // 2
    assert len(dot_indexing(T)) == -8 * euler_characteristic(T)
    assert punctures(T) >= 1
