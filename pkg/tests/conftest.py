import itertools
from fractions import Fraction as Q

import pytest

from grrs.finite import FiniteRootSystem
from grrs.linalg import BilinearSpace, standard_space, vec


def V(*xs):
    return vec(xs)


@pytest.fixture(scope="session")
def b2():
    sp = standard_space(2)
    roots = [V(1, 0), V(-1, 0), V(0, 1), V(0, -1),
             V(1, 1), V(1, -1), V(-1, 1), V(-1, -1)]
    return FiniteRootSystem(sp, roots)


@pytest.fixture(scope="session")
def a2():
    sp = BilinearSpace([[2, -1], [-1, 2]])
    roots = [V(1, 0), V(0, 1), V(1, 1), V(-1, 0), V(0, -1), V(-1, -1)]
    return FiniteRootSystem(sp, roots)


@pytest.fixture(scope="session")
def c11():
    sp = BilinearSpace([[Q(1, 2), 0], [0, Q(-1, 2)]])
    roots = [V(2, 0), V(-2, 0), V(0, 2), V(0, -2),
             V(1, 1), V(1, -1), V(-1, 1), V(-1, -1)]
    return FiniteRootSystem(sp, roots)


@pytest.fixture(scope="session")
def a11_ambient():
    """A(1,1) in the ambient 4-dim space (spans a hyperplane only)."""
    sp = standard_space(2, 2)

    def eij(i, j):
        v = [0] * 4
        v[i], v[j] = 1, -1
        return V(*v)

    roots = [eij(i, j) for i in range(4) for j in range(4) if i != j]
    return FiniteRootSystem(sp, roots)


@pytest.fixture(scope="session")
def b11():
    sp = standard_space(1, 1)
    roots = [V(1, 0), V(-1, 0), V(0, 1), V(0, -1), V(0, 2), V(0, -2),
             V(1, 1), V(1, -1), V(-1, 1), V(-1, -1)]
    return FiniteRootSystem(sp, roots)
