from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from concordia.geometry import (APTriple, Triangle, ap_to_quadric,
                                ap_to_triangle, isosceles_triangle,
                                quadric_to_ap, triangle_to_ap)
from concordia.quadrics import QuadricPoint
from concordia.triples import (ConcordantTriple, CongruentTriple,
                               concordant_to_congruent,
                               congruent_to_concordant)


def test_congruent_to_concordant_examples():
    assert congruent_to_concordant(CongruentTriple(1, 2, 1)) == \
        ConcordantTriple(1, 3, 1)
    # equal parity r, s: halve the gaps and double k
    assert congruent_to_concordant(CongruentTriple(1, 3, 1)) == \
        ConcordantTriple(1, 2, 2)
    assert congruent_to_concordant(CongruentTriple(0, 1, 5)) == \
        ConcordantTriple(1, 1, 5)
    assert congruent_to_concordant(CongruentTriple(-1, 2, 1)) == \
        ConcordantTriple(3, 1, 1)


def test_concordant_to_congruent_examples():
    assert concordant_to_congruent(ConcordantTriple(1, 3, 1)) == \
        CongruentTriple(1, 2, 1)
    assert concordant_to_congruent(ConcordantTriple(1, 2, 2)) == \
        CongruentTriple(1, 3, 1)
    with pytest.raises(ValueError):
        # opposite parities with odd k cannot come from a congruent triple
        concordant_to_congruent(ConcordantTriple(1, 2, 1))


def test_triple_validation():
    with pytest.raises(ValueError):
        ConcordantTriple(2, 4, 1)
    with pytest.raises(ValueError):
        ConcordantTriple(0, 1, 1)
    with pytest.raises(ValueError):
        CongruentTriple(2, 2, 1)
    with pytest.raises(ValueError):
        CongruentTriple(3, 2, 1)


def test_triple_curves():
    assert ConcordantTriple(1, 3, 1).curve().m == -1
    assert ConcordantTriple(1, 3, 1).curve().n == 3
    assert CongruentTriple(0, 1, 5).curve().m == -5


def _valid_congruent(r, s, k):
    return 0 < s and abs(r) < s and gcd(r, s) == 1 and k >= 1


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=-49, max_value=49),
       st.integers(min_value=1, max_value=50),
       st.integers(min_value=1, max_value=20))
def test_bijection_roundtrip(r, s, k):
    if not _valid_congruent(r, s, k):
        return
    t = CongruentTriple(r, s, k)
    ct = congruent_to_concordant(t)
    assert gcd(ct.p, ct.q) == 1
    assert concordant_to_congruent(ct) == t


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=40),
       st.integers(min_value=1, max_value=40),
       st.integers(min_value=1, max_value=20))
def test_bijection_roundtrip_reverse(p, q, k):
    if gcd(p, q) != 1:
        return
    ct = ConcordantTriple(p, q, k)
    try:
        t = concordant_to_congruent(ct)
    except ValueError:
        assert (p - q) % 2 != 0 and k % 2 == 1
        return
    assert congruent_to_concordant(t) == ct


def test_ap_triple_validation():
    APTriple(alpha=Fraction(1, 2), beta=Fraction(5, 2), gamma=Fraction(7, 2),
             step=6, p=1, q=1)
    with pytest.raises(ValueError):
        APTriple(alpha=Fraction(1), beta=Fraction(2), gamma=Fraction(3),
                 step=1, p=1, q=1)


def test_triangle_validation():
    Triangle(a=Fraction(2), b=Fraction(2), c=Fraction(2), r=1, s=2)
    with pytest.raises(ValueError):
        Triangle(a=Fraction(1), b=Fraction(1), c=Fraction(3), r=1, s=2)
    with pytest.raises(ValueError):
        # law of cosines must hold exactly for the given (r, s)
        Triangle(a=Fraction(3), b=Fraction(2), c=Fraction(2), r=1, s=2)


def test_quadric_ap_roundtrip():
    S = QuadricPoint.from_raw(5, 2, 1, 7)
    ap = quadric_to_ap(S, 1, 1, 6)
    assert (ap.alpha, ap.beta, ap.gamma) == (
        Fraction(1, 2), Fraction(5, 2), Fraction(7, 2))
    assert ap_to_quadric(ap) == S


def test_ap_to_triangle_equilateral():
    ap = APTriple(alpha=Fraction(0), beta=Fraction(1), gamma=Fraction(2),
                  step=1, p=1, q=3)
    tri = ap_to_triangle(ap, 1, 2)
    assert tri.sides() == (Fraction(2), Fraction(2), Fraction(2))
    assert tri.is_isosceles()
    back = triangle_to_ap(tri)
    assert (back.alpha, back.beta, back.gamma) == (0, 1, 2)


def test_ap_to_triangle_345_right_angle():
    # theta = pi/2: (r, s) = (0, 1); the 3-4-5 triangle scaled by 1
    ap = APTriple(alpha=Fraction(1, 2), beta=Fraction(5, 2),
                  gamma=Fraction(7, 2), step=6, p=1, q=1)
    tri = ap_to_triangle(ap, 0, 1)
    assert tri.sides() == (Fraction(4), Fraction(3), Fraction(5))
    assert tri.area_coefficient() == 6
    assert triangle_to_ap(tri) == ap


def test_ap_to_triangle_rejects_wrong_angle():
    ap = APTriple(alpha=Fraction(1, 2), beta=Fraction(5, 2),
                  gamma=Fraction(7, 2), step=6, p=1, q=1)
    with pytest.raises(ValueError):
        ap_to_triangle(ap, 1, 2)  # gaps of (1,2) are (1,3), not (1,1)


def test_isosceles_examples():
    tri, r, s, k = isosceles_triangle(1, 2)
    assert tri.sides() == (2, 2, 2) and (r, s, k) == (1, 2, 1)
    tri, r, s, k = isosceles_triangle(3, 4)
    assert tri.sides() == (4, 4, 6)
    assert (r, s, k) == (-1, 8, 1)
    tri, r, s, k = isosceles_triangle(1, 3)
    assert tri.sides() == (6, 6, 4) and k == 2


def test_isosceles_validation():
    with pytest.raises(ValueError):
        isosceles_triangle(2, 1)
    with pytest.raises(ValueError):
        isosceles_triangle(2, 4)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=12),
       st.integers(min_value=2, max_value=12))
def test_isosceles_properties(rho, sigma):
    if not (rho < sigma and gcd(rho, sigma) == 1):
        return
    tri, r, s, k = isosceles_triangle(rho, sigma)
    assert tri.is_isosceles()
    assert k in (1, 2)
    # law of cosines is enforced by the constructor; area relation ab = 2ks
    assert tri.a * tri.b == 2 * k * s
    assert tri.area_coefficient() == k
    ap = triangle_to_ap(tri)
    assert ap_to_triangle(ap, r, s).sides() == tri.sides()
