import pytest

from lscat import CompositionClass, DimensionMismatch, compose, identity, suspend


def test_identity_needs_equal_dims():
    identity(3)
    with pytest.raises(DimensionMismatch):
        CompositionClass(dom=3, cod=2, word=())


def test_dims_must_be_positive():
    with pytest.raises(DimensionMismatch):
        CompositionClass(dom=0, cod=0, word=())
    with pytest.raises(DimensionMismatch):
        CompositionClass(dom=3, cod=2, word=("eta_2",), susp=-1)


def test_compose_concatenates_words(cat):
    eta = cat.generator_class("eta_2")
    tail = cat.word_class(("alpha1_3_p3", "alpha1_6_p3"))
    out = compose(eta, tail)
    assert out.word == ("eta_2", "alpha1_3_p3", "alpha1_6_p3")
    assert (out.dom, out.cod) == (9, 2)


def test_compose_with_identity_is_identity_on_other_factor(cat):
    f = cat.word_class(("eta_2",))
    assert compose(f, identity(3)) == f
    assert compose(identity(2), f) == f


def test_compose_dimension_mismatch(cat):
    eta = cat.generator_class("eta_2")
    with pytest.raises(DimensionMismatch):
        compose(eta, eta)  # lands in S^2, next factor starts at S^3


def test_compose_rejects_mixed_suspension_levels(cat):
    f = suspend(cat.generator_class("eta_2"), 2)  # S^5 -> S^4
    g = cat.generator_class("eta_4")  # S^5 -> S^4 at level 0
    h = suspend(cat.generator_class("eps_3"), 2)  # S^13 -> S^5
    compose(f, h)  # same level, fine
    with pytest.raises(DimensionMismatch):
        compose(g, h)


def test_suspend_shifts_all_dimensions(cat):
    w = cat.word_class(("eta_3", "eta_4", "eps_5"))  # S^13 -> S^3
    s = suspend(w, 2)
    assert (s.dom, s.cod, s.susp) == (15, 5, 2)
    assert s.word == w.word


def test_suspend_zero_is_identity_operation(cat):
    w = cat.word_class(("eta_2",))
    assert suspend(w, 0) is w


def test_suspend_additivity(cat):
    w = cat.word_class(("eta_3", "eta_4", "eps_5"))
    assert suspend(suspend(w, 1), 1) == suspend(w, 2)


def test_render_forms(cat):
    assert identity(5).render() == "iota_5"
    w = cat.word_class(("eta_3", "eta_4"))
    assert w.render() == "eta_3*eta_4"
    assert suspend(w, 3).render() == "eta_3*eta_4^S3"
