"""Fixtures and hypothesis strategies shared across the suite."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, settings, strategies as st

from nilforms import InnerProduct, LieAlgebra, build_algebra, get_example
from nilforms.linalg import det as exact_det

settings.register_profile(
    "suite",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def torus():
    return get_example("torus4").algebra


@pytest.fixture(scope="session")
def kt():
    return get_example("kodaira_thurston").algebra


@pytest.fixture(scope="session")
def filiform():
    return get_example("filiform_0_0_12_13").algebra


@pytest.fixture(scope="session")
def six_dim():
    return get_example("six_dim_example").algebra


@pytest.fixture(scope="session")
def so3():
    """Compact simple algebra: valid Jacobi, not nilpotent, unimodular."""
    return build_algebra(3, {
        (1, 2): (0, 0, 1),
        (2, 3): (1, 0, 0),
        (1, 3): (0, -1, 0),
    })


@pytest.fixture(scope="session")
def solvable_nonunimodular():
    """dx2 = e12, dx3 = e13, dx4 = e14.

    Jacobi holds, trace(ad X1) = -3, and every closed 2-form lies in the
    span of e12, e13, e14, so no symplectic form exists.
    """
    return LieAlgebra(4, {(1, 2, 2): -1, (1, 3, 3): -1, (1, 4, 4): -1})


# -- strategies ---------------------------------------------------------------

small_rationals = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=3)

small_nonzero = small_rationals.filter(lambda v: v != 0)


@st.composite
def two_step_algebras(draw, min_dim=3, max_dim=5):
    """Brackets landing in the last basis vector only; always a Lie algebra
    (the image is central and kills every nested bracket)."""
    dim = draw(st.integers(min_dim, max_dim))
    constants = {}
    for i in range(1, dim):
        for j in range(i + 1, dim):
            c = draw(small_rationals)
            if c:
                constants[(i, j, dim)] = c
    return LieAlgebra(dim, constants)


@st.composite
def filtered_4d_algebras(draw):
    """dx3 = a*e12, dx4 in span{e12, e13, e23}: nilpotent for every choice."""
    a = draw(small_rationals)
    b = draw(small_rationals)
    c = draw(small_rationals)
    e = draw(small_rationals)
    constants = {}
    if a:
        constants[(1, 2, 3)] = -a
    for (i, j), coeff in (((1, 2), b), ((1, 3), c), ((2, 3), e)):
        if coeff:
            constants[(i, j, 4)] = -coeff
    return LieAlgebra(4, constants)


def catalog_algebras():
    return st.sampled_from(
        ["torus4", "kodaira_thurston", "filiform_0_0_12_13", "six_dim_example"]
    ).map(lambda name: get_example(name).algebra)


@st.composite
def forms_on(draw, algebra_strategy, degrees=(0, 1, 2, 3)):
    algebra = draw(algebra_strategy)
    degree = draw(st.sampled_from([k for k in degrees if k <= algebra.dim]))
    monos = algebra.monomials(degree)
    terms = {}
    for mono in monos:
        value = draw(st.one_of(st.just(Fraction(0)), small_rationals))
        if value:
            terms[mono] = value
    return algebra.form({m: c for m, c in terms.items()}) if terms \
        else algebra.zero_form(degree)


@st.composite
def posdef_metrics(draw, dim):
    """Gram matrices A^T A with A integer and invertible; the determinant is
    det(A)^2, so the volume is always rational."""
    entries = draw(st.lists(
        st.lists(st.integers(-2, 2), min_size=dim, max_size=dim),
        min_size=dim, max_size=dim))
    assume(exact_det([list(map(Fraction, row)) for row in entries]) != 0)
    gram = [[sum(Fraction(entries[r][i]) * entries[r][j] for r in range(dim))
             for j in range(dim)] for i in range(dim)]
    return InnerProduct(gram)
