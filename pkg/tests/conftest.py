from fractions import Fraction

import pytest

from fuzzint import boolean_lattice, chain, m3, n5, product_lattice

GRADES3 = (Fraction(0), Fraction(1, 2), Fraction(1))
GRADES2 = (Fraction(0), Fraction(1))
GRADES4 = (Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1))


@pytest.fixture(scope="session")
def chain2():
    return chain(2)


@pytest.fixture(scope="session")
def chain3():
    return chain(3)


@pytest.fixture(scope="session")
def chain5():
    return chain(5)


@pytest.fixture(scope="session")
def b2():
    return boolean_lattice(2)


@pytest.fixture(scope="session")
def b3():
    return boolean_lattice(3)


@pytest.fixture(scope="session")
def diamond():
    return m3()


@pytest.fixture(scope="session")
def pentagon():
    return n5()


@pytest.fixture(scope="session")
def prod23():
    return product_lattice(chain(2), chain(3))
