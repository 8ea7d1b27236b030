import pytest
from hypothesis import given
from hypothesis import strategies as st

from omforge.signs import MINUS, PLUS, SignVector, char_sign, sign_char

sv = SignVector.from_string


def test_compose_examples():
    assert sv("+0-").compose(sv("0--")) == sv("+--")
    assert sv("+0-").compose(sv("000")) == sv("+0-")
    assert sv("0+").compose(sv("--")) == sv("-+")


def test_separation_examples():
    assert sv("+0-").separation(sv("-0-")) == frozenset({0})
    x = sv("+-0+")
    assert x.separation(x) == frozenset()
    assert sv("+0-").separation(sv("++0")) == frozenset()


def test_conformal_examples():
    assert sv("+0-").conformal(sv("++0"))
    x = sv("+-0")
    assert not x.conformal(-x)
    assert sv("0--").conformal(sv("+0-"))


def test_negation_involution():
    x = sv("+0--+")
    assert -(-x) == x
    assert (-x).signs() == tuple(-s for s in x.signs())


def test_length_mismatch():
    with pytest.raises(ValueError):
        sv("+-").compose(sv("+-0"))
    with pytest.raises(ValueError):
        sv("+-").separation(sv("+-0"))


def test_string_round_trip():
    s = "+0--+0+"
    assert sv(s).to_string() == s
    assert char_sign(sign_char(MINUS)) == MINUS


def test_zero_set_support_partition():
    x = sv("+0-0+")
    assert x.zero_set() | x.support() == frozenset(range(5))
    assert not (x.zero_set() & x.support())


def test_insert_swap_restrict():
    x = sv("+0-")
    assert x.insert(1, MINUS) == sv("+-0-")
    assert x.insert(3, PLUS) == sv("+0-+")
    assert sv("+-0").swap(0, 2) == sv("0-+")
    assert sv("+0-+").restrict([3, 1]) == sv("+0")


signs3 = st.lists(st.sampled_from([-1, 0, 1]), min_size=4, max_size=4).map(
    SignVector.from_signs
)


@given(signs3, signs3)
def test_separation_symmetry(x, y):
    assert x.separation(y) == y.separation(x)
    assert not (x.separation(-y) & x.separation(y))


@given(signs3, signs3, signs3)
def test_compose_associative(x, y, z):
    assert x.compose(y).compose(z) == x.compose(y.compose(z))


@given(signs3, signs3)
def test_compose_commutes_iff_conformal(x, y):
    assert (x.compose(y) == y.compose(x)) == (x.separation(y) == frozenset())


@given(signs3, signs3)
def test_compose_zero_set(x, y):
    assert x.compose(y).zero_set() == x.zero_set() & y.zero_set()
