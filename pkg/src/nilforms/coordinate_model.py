"""A global coordinate realization of the filiform algebra (0,0,12,13).

The group is R^4 with coordinates (x, y, z, t) and polynomial multiplication

    (a, b, c, e) * (x, y, z, t)
        = (a + x, b + y, c + z + b*x, e + t + c*x + b*x^2/2),

and the covectors

    x1 = dx,  x2 = dy,  x3 = dz - y dx,  x4 = dt - z dx

form a left-invariant coframe whose differentials reproduce the tuple
notation "(0,0,12,13)".  Everything here is verified symbolically, as
polynomial identities with exact coefficients: invariance under a generic
translation, associativity of the law, and that the subset
2Z x Z x Z x Z is a subgroup (so the quotient is compact) while the naive
integer lattice Z^4 is not closed under the law.

``verify_realization`` runs the whole battery and reports named booleans;
nothing in it is stubbed or sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InvalidParameter
from .exterior_core import _merge_monomials
from .notation import parse_salamon
from .polynomials import Poly

#: ring layout: coordinates first, translation parameters second
NCOORDS = 4
RING_VARS = 8
_COORD_NAMES = ("x", "y", "z", "t")


def _var(index, nvars=RING_VARS):
    return Poly.variable(nvars, index)


def _const(value, nvars=RING_VARS):
    return Poly.constant(nvars, value)


class PolyForm:
    """Differential form on R^4 with polynomial coefficients.

    Keys are increasing tuples over the coordinate differentials 1..4
    (1 = dx, ..., 4 = dt); values are Poly coefficients, possibly involving
    the translation parameters.
    """

    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, degree, coeffs, nvars=RING_VARS):
        self.nvars = nvars
        self.degree = degree
        clean = {}
        for mono, poly in coeffs.items():
            mono = tuple(mono)
            if len(mono) != degree or any(not 1 <= i <= NCOORDS for i in mono):
                raise InvalidParameter(f"bad coordinate monomial {mono!r}")
            if any(a >= b for a, b in zip(mono, mono[1:])):
                raise InvalidParameter(f"monomial {mono!r} is not increasing")
            if not isinstance(poly, Poly):
                poly = Poly.constant(nvars, poly)
            if not poly.is_zero:
                clean[mono] = poly
        self.coeffs = clean

    @property
    def is_zero(self):
        return not self.coeffs

    def coefficient(self, mono):
        return self.coeffs.get(tuple(mono), Poly.constant(self.nvars, 0))

    def __add__(self, other):
        if self.degree != other.degree and not (self.is_zero or other.is_zero):
            raise InvalidParameter("degree mismatch")
        out = dict(self.coeffs)
        for mono, poly in other.coeffs.items():
            new = out.get(mono, Poly.constant(self.nvars, 0)) + poly
            if new.is_zero:
                out.pop(mono, None)
            else:
                out[mono] = new
        return PolyForm(self.degree if not self.is_zero else other.degree,
                        out, self.nvars)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, value):
        return PolyForm(self.degree,
                        {m: p * value for m, p in self.coeffs.items()},
                        self.nvars)

    def wedge(self, other):
        out = {}
        for left, lp in self.coeffs.items():
            for right, rp in other.coeffs.items():
                merged = _merge_monomials(left, right)
                if merged is None:
                    continue
                mono, sign = merged
                contribution = lp * rp if sign > 0 else -(lp * rp)
                new = out.get(mono, Poly.constant(self.nvars, 0)) + contribution
                if new.is_zero:
                    out.pop(mono, None)
                else:
                    out[mono] = new
        return PolyForm(self.degree + other.degree, out, self.nvars)

    def d(self):
        """Exterior derivative in the coordinate variables only; translation
        parameters differentiate to zero."""
        out = {}
        for mono, poly in self.coeffs.items():
            for v in range(NCOORDS):
                partial = poly.derivative(v)
                if partial.is_zero:
                    continue
                merged = _merge_monomials((v + 1,), mono)
                if merged is None:
                    continue
                new_mono, sign = merged
                contribution = partial if sign > 0 else -partial
                new = out.get(new_mono, Poly.constant(self.nvars, 0)) + contribution
                if new.is_zero:
                    out.pop(new_mono, None)
                else:
                    out[new_mono] = new
        return PolyForm(self.degree + 1, out, self.nvars)

    def pullback(self, components):
        """phi^* for the polynomial map with the given coordinate components
        (a 4-tuple of Polys); coefficients compose, differentials go through
        the Jacobian."""
        if len(components) != NCOORDS:
            raise DimensionMismatch("a coordinate map needs 4 components")
        assignment = {v: components[v] for v in range(NCOORDS)}
        differentials = []
        for comp in components:
            d_comp = PolyForm(1, {}, self.nvars)
            for v in range(NCOORDS):
                partial = comp.derivative(v)
                if not partial.is_zero:
                    d_comp = d_comp + PolyForm(1, {(v + 1,): partial}, self.nvars)
            differentials.append(d_comp)
        result = PolyForm(self.degree, {}, self.nvars)
        for mono, poly in self.coeffs.items():
            term = PolyForm(0, {(): poly.substitute(assignment)}, self.nvars)
            for index in mono:
                term = term.wedge(differentials[index - 1])
            result = result + term
        return result

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PolyForm(degree={self.degree}, terms={len(self.coeffs)})"


@dataclass(frozen=True)
class PolyMap:
    """Polynomial coordinate map, one Poly component per target coordinate."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) != NCOORDS:
            raise DimensionMismatch(f"a coordinate map needs {NCOORDS} components")
        object.__setattr__(self, "components", comps)


def poly_d(form):
    """Exterior derivative, free-function spelling of ``PolyForm.d``."""
    return form.d()


def pullback(mapping, form):
    """phi^* form, for phi given as a PolyMap or a bare component tuple."""
    components = (mapping.components if isinstance(mapping, PolyMap)
                  else tuple(mapping))
    return form.pullback(components)


# -- the group law -----------------------------------------------------------


def multiply(left, right):
    """The polynomial group law; works on any ring elements supporting
    +, * and Fraction scaling (Polys or plain numbers)."""
    a, b, c, e = left
    x, y, z, t = right
    return (
        a + x,
        b + y,
        c + z + b * x,
        e + t + c * x + b * x * x * Fraction(1, 2),
    )


def inverse(element):
    a, b, c, e = element
    return (-a, -b, -c + a * b, -e + a * c - a * a * b * Fraction(1, 2))


def invariant_coframe(nvars=RING_VARS):
    """x1 = dx, x2 = dy, x3 = dz - y dx, x4 = dt - z dx."""
    y = _var(1, nvars)
    z = _var(2, nvars)
    return (
        PolyForm(1, {(1,): _const(1, nvars)}, nvars),
        PolyForm(1, {(2,): _const(1, nvars)}, nvars),
        PolyForm(1, {(3,): _const(1, nvars), (1,): -y}, nvars),
        PolyForm(1, {(4,): _const(1, nvars), (1,): -z}, nvars),
    )


SALAMON = "(0,0,12,13)"


# -- the verification battery ------------------------------------------------


@dataclass(frozen=True)
class RealizationReport:
    """Named outcomes of the symbolic checks; all proofs, no sampling.

    ``integer_lattice_negative_control`` is True when the plain integer
    lattice FAILS to be closed under the law, as it must.
    """

    salamon: str
    checks: tuple

    @property
    def all_pass(self):
        return all(ok for _, ok in self.checks)

    def check(self, name):
        for label, ok in self.checks:
            if label == name:
                return ok
        raise KeyError(name)


def _structure_equations(coframe):
    algebra = parse_salamon(SALAMON)
    for k in range(1, NCOORDS + 1):
        expected = PolyForm(2, {})
        for (i, j), coeff in algebra.dx(k).terms():
            expected = expected + coframe[i - 1].wedge(coframe[j - 1]).scale(coeff)
        if coframe[k - 1].d() != expected:
            return False
    return True


def _left_invariance(coframe):
    params = tuple(_var(4 + i) for i in range(4))
    coords = tuple(_var(i) for i in range(4))
    translation = multiply(params, coords)
    return all(form.pullback(translation) == form for form in coframe)


def _associativity():
    g1 = tuple(Poly.variable(12, i) for i in range(4))
    g2 = tuple(Poly.variable(12, i) for i in range(4, 8))
    g3 = tuple(Poly.variable(12, i) for i in range(8, 12))
    left = multiply(multiply(g1, g2), g3)
    right = multiply(g1, multiply(g2, g3))
    return all(l == r for l, r in zip(left, right))


def _identity_law():
    coords = tuple(_var(i) for i in range(4))
    params = tuple(_var(4 + i) for i in range(4))
    zero = tuple(_const(0) for _ in range(4))
    return (all(l == r for l, r in zip(multiply(zero, coords), coords))
            and all(l == r for l, r in zip(multiply(params, zero), params)))


def _inverse_law():
    params = tuple(_var(4 + i) for i in range(4))
    inv = inverse(params)
    zero = tuple(_const(0) for _ in range(4))
    return (all(l == r for l, r in zip(multiply(params, inv), zero))
            and all(l == r for l, r in zip(multiply(inv, params), zero)))


def _is_integral(poly):
    return all(c.denominator == 1 for c in poly.terms.values())


def _is_even(poly):
    return all(c.denominator == 1 and c.numerator % 2 == 0
               for c in poly.terms.values())


def _lattice_closed():
    """2Z x Z x Z x Z: products and inverses stay integral with even first
    component.  Coefficient-level integrality, so this is a proof, not a
    spot check."""
    two = _const(2)
    left = (two * _var(4), _var(5), _var(6), _var(7))
    right = (two * _var(0), _var(1), _var(2), _var(3))
    product = multiply(left, right)
    inv = inverse(left)
    return (all(_is_integral(p) for p in product)
            and all(_is_integral(p) for p in inv)
            and _is_even(product[0]) and _is_even(inv[0]))


def _integer_lattice_fails():
    """Negative control: Z^4 is not closed, witnessed at a concrete pair."""
    witness = multiply((Fraction(0), Fraction(1), Fraction(0), Fraction(0)),
                       (Fraction(1), Fraction(0), Fraction(0), Fraction(0)))
    return any(v.denominator != 1 for v in witness)


def _coframe_dual_at_origin(coframe):
    origin = (0,) * RING_VARS
    for row, form in enumerate(coframe, start=1):
        for col in range(1, NCOORDS + 1):
            value = form.coefficient((col,)).evaluate(origin)
            if value != (1 if row == col else 0):
                return False
    return True


def verify_realization():
    coframe = invariant_coframe()
    checks = (
        ("structure_equations", _structure_equations(coframe)),
        ("left_invariance", _left_invariance(coframe)),
        ("associativity", _associativity()),
        ("identity", _identity_law()),
        ("inverse", _inverse_law()),
        ("lattice_closed", _lattice_closed()),
        ("integer_lattice_negative_control", _integer_lattice_fails()),
        ("coframe_dual_at_origin", _coframe_dual_at_origin(coframe)),
    )
    return RealizationReport(salamon=SALAMON, checks=checks)
