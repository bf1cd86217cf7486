from pathlib import Path

import pytest

from webcoord import GlobalWeb, TriangleWeb, load_triangulation

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def torus():
    return load_triangulation(FIXTURES / "torus.json")


@pytest.fixture(scope="session")
def sphere():
    return load_triangulation(FIXTURES / "sphere4.json")


def web(T, **layout):
    """Build a global web from shorthand ``T0="R/L/-"`` or ``T0=("out", 1, "R")``.

    A string gives the three corner words separated by ``/``; a tuple adds a
    honeycomb in front.
    """
    webs = {}
    for tri, s in layout.items():
        if isinstance(s, tuple):
            direction, n, words = s
        else:
            direction, n, words = "none", 0, s
        corners = tuple(words.split("/")) if words else ("", "", "")
        corners = corners + ("",) * (3 - len(corners))
        webs[tri] = TriangleWeb(direction, n, corners)
    return GlobalWeb.from_mapping(T, webs)


@pytest.fixture
def make_web():
    return web
