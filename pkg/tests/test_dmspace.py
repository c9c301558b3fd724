from fractions import Fraction

import pytest

from equivspline.algebra import MultiPoly, directional_derivative
from equivspline.arrangement import VectorList, cocircuits
from equivspline.dmspace import (
    annihilator_check,
    deletion_image_check,
    dspace_basis,
    dspace_dims,
    duality_pairing_matrix,
)
from equivspline.errors import PreconditionError
from equivspline.ideals import IdealSpec, hilbert
from equivspline.instances import EXTRAS, line_multisets, one_power

THREE = VectorList.of([(1, 0), (0, 1), (1, 1)])
x, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)


def test_one_power_basis_is_monomials():
    for k in range(6):
        u = MultiPoly.variable(1, 0)
        assert dspace_basis(one_power(k)).elements() == [u**j for j in range(k + 1)]


def test_small_examples():
    assert dspace_basis(THREE).elements() == [MultiPoly.constant(2), x, y]
    assert dspace_dims(VectorList.of([(1, 0), (0, 1)])).dims == (1,)
    X = VectorList.of([(1, 0), (2, 0), (0, 1)])
    assert dspace_basis(X).elements() == [MultiPoly.constant(2), x]


def test_pairing_matrix():
    assert duality_pairing_matrix(THREE, 0) == [[Fraction(1)]]
    assert duality_pairing_matrix(THREE, 1) == [[1, 0], [0, 1]]
    with pytest.raises(PreconditionError):
        duality_pairing_matrix(THREE, 2)


def test_kernel_is_killed_by_every_cocircuit():
    for X in list(line_multisets(2, 4, bound=1)) + EXTRAS:
        ops = [c.complement for c in cocircuits(X)]
        for f in dspace_basis(X).elements():
            for comp in ops:
                g = f
                for i in comp:
                    g = directional_derivative(g, X[i])
                assert g.is_zero()
        assert dspace_dims(X) == hilbert(X, IdealSpec.full())


def test_annihilator_and_deletion():
    assert annihilator_check(THREE, 2)
    assert annihilator_check(THREE, 0)
    assert annihilator_check(one_power(1), 1)
    assert deletion_image_check(THREE, 2) is True
    assert deletion_image_check(VectorList.of([(1, 0), (0, 1)]), 0) is None
