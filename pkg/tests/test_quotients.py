import random
from fractions import Fraction

import pytest

import golden_83a1 as G
from q8origami.divpoly import AffinePoint, CurveError, CurveSpec, origami_quartic
from q8origami.elimination import discriminant
from q8origami.exactnum import same_square_class, squarefree_part
from q8origami.forms import perturbed
from q8origami.polyring import parse, var
from q8origami.quotients import (
    alpha_rule, beta_map, inverse_direction_check, quotient_polys, random_curve_point,
    scaled_h1_at_beta, verify_isomorphism,
)
from q8origami.resolvent.galois import quartic_galois

E83 = CurveSpec.numeric(1269, -10746)
P83 = AffinePoint.numeric(15, -108)


def test_83a1_quotients_match_golden():
    qs = quotient_polys(E83, P83)
    assert qs.h1 == parse(G.H1)
    assert qs.h2 == parse(G.H2)
    assert qs.g == parse(G.G)
    assert qs.T4 == parse(G.T4)
    assert qs.h3 == parse(G.H3) != parse(G.H3_AS_PRINTED)


def test_h3_is_origami_quartic():
    qs = quotient_polys(E83, P83)
    assert qs.h3 == origami_quartic(E83, P83).substitute("y", var("x"))
    generic = quotient_polys()
    from q8origami.divpoly import origami_quartic_closed
    assert generic.h3 == origami_quartic_closed(CurveSpec.symbolic(), AffinePoint.symbolic(), var("x"))


def test_83a1_quotients_are_s4():
    qs = quotient_polys(E83, P83)
    for p in (qs.h1, qs.h2, qs.h3, qs.g):
        assert quartic_galois(p).is_s4


def test_disc_g_and_h1_share_square_class():
    qs = quotient_polys(E83, P83)
    dg = discriminant(qs.g, "x").constant_value()
    dh = discriminant(qs.h1, "x").constant_value()
    assert same_square_class(dg, dh)
    assert squarefree_part(dg) == squarefree_part(dh)


def test_beta_83a1():
    beta = beta_map(E83, P83)
    assert beta.numerator == parse(G.BETA_NUMERATOR)
    assert beta.denominator.constant_value() == 9 * 10746
    assert 9 * 10746 == G.BETA_SCALE
    with pytest.raises(ValueError):
        beta_map().as_poly()


def test_beta_rejects_b_zero():
    curve = CurveSpec.numeric(-2, 0)
    with pytest.raises(CurveError):
        beta_map(curve, AffinePoint.numeric(2, 2))


def test_isomorphism_symbolic():
    wit = verify_isomorphism()
    assert wit.passed, wit.to_dict()
    assert not wit.final
    assert any("8a^2" in n for n in wit.stages[-1].notes)


def test_isomorphism_83a1_and_bijection():
    assert verify_isomorphism(E83, P83).passed
    rep = inverse_direction_check(E83, P83)
    assert rep.passed, rep.notes


def test_eight_a_squared_variant_fails():
    qs = quotient_polys(E83, P83)
    from q8origami.divpoly import point_rules
    from q8origami.polyring import reduce
    bad = beta_map(E83, P83, alpha_sq_coeff=8)
    assert reduce(scaled_h1_at_beta(qs.h1, bad), alpha_rule(E83))
    good = beta_map(E83, P83)
    assert not reduce(scaled_h1_at_beta(qs.h1, good), alpha_rule(E83))


def test_isomorphism_random_curves():
    rng = random.Random(31)
    checked = 0
    while checked < 5:
        curve, P = random_curve_point(rng)
        rep = inverse_direction_check(curve, P)
        if any(n.startswith("precondition failed") for n in rep.notes):
            continue
        assert verify_isomorphism(curve, P).passed
        assert rep.passed, rep.notes
        checked += 1


def test_reducible_g_fails_precondition():
    curve, P = CurveSpec.numeric(0, 1), AffinePoint.numeric(0, 1)
    rep = inverse_direction_check(curve, P)
    assert not rep.passed
    assert rep.notes[0].startswith("precondition failed")


def test_perturbed_form_breaks_isomorphism():
    with perturbed("ISO_C2"):
        wit = verify_isomorphism()
    assert not wit.passed
    coeffs = wit.stages[1].children
    assert [c.passed for c in coeffs] == [True, True, False, True]
    assert verify_isomorphism().passed


def test_inverse_check_needs_numbers():
    with pytest.raises(ValueError):
        inverse_direction_check(CurveSpec.symbolic(), AffinePoint.symbolic())
