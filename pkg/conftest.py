"""Shared fixtures: catalog algebras and small hand-written tables."""

import pytest

from app.algebra import LeibnizAlgebra
from app.classify import FamilySpec, build, build_entry
from app.linalg import RATIONALS, FieldSpec

GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)
GF5 = FieldSpec.prime(5)


@pytest.fixture
def family1a():
    return build(FamilySpec.of("Family1a"))


@pytest.fixture
def heisenberg():
    return build(FamilySpec.of("Heisenberg"))


@pytest.fixture
def sl2_entry():
    return build_entry(FamilySpec.of("Sl2Sum"))


@pytest.fixture
def n_plus_s_entry():
    return build_entry(FamilySpec.of("Thm17_NplusS"))


@pytest.fixture
def rotation():
    """<x> acting on <u, v> by a quarter turn; L_x does not split over Q."""
    return LeibnizAlgebra.from_products(
        RATIONALS,
        ["x", "u", "v"],
        {
            ("x", "u"): {"v": 1},
            ("x", "v"): {"u": -1},
            ("u", "x"): {"v": -1},
            ("v", "x"): {"u": 1},
        },
        name="rotation",
    )


@pytest.fixture
def symmetric_square():
    """xz = zx = z: fails the identity over Q, holds over GF(2)."""
    return {("x", "z"): {"z": 1}, ("z", "x"): {"z": 1}}


@pytest.fixture
def left_rotation():
    """xu = v, xv = -u and nothing else: Leib(L) = <u, v> is irreducible over Q."""
    return LeibnizAlgebra.from_products(
        RATIONALS,
        ["x", "u", "v"],
        {("x", "u"): {"v": 1}, ("x", "v"): {"u": -1}},
        name="left_rotation",
    )
