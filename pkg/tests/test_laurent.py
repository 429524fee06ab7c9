import pytest

from csfkit.laurent import LaurentT, center_to_halfsteps, t_factorial


def test_zero_coefficients_dropped():
    f = LaurentT({0: 1, 2: 0, 4: -3})
    assert f.terms == {0: 1, 4: -3}
    assert not LaurentT({2: 0})
    assert LaurentT.zero().format() == "0"


def test_arithmetic():
    one_plus_t = LaurentT({0: 1, 2: 1})
    t = LaurentT.t_power(1)
    assert one_plus_t * one_plus_t == LaurentT({0: 1, 2: 2, 4: 1})
    assert one_plus_t - one_plus_t == LaurentT.zero()
    assert 3 * t == LaurentT({2: 3})
    assert (t * t).coefficient(4) == 1
    assert one_plus_t + LaurentT.const(-1) == t
    assert -t == LaurentT({2: -1})


def test_half_powers_and_shift():
    half = LaurentT.half_power(1)
    assert half * half == LaurentT.t_power(1)
    assert not half.exponents_are_whole()
    assert half.shifted(3) == LaurentT.half_power(4)
    assert LaurentT.t_power(2).shifted(-4) == LaurentT.one()


def test_mirror_and_palindromy():
    f = LaurentT({0: 1, 2: 2, 4: 1})  # 1 + 2t + t^2
    assert f.is_palindromic(4)
    assert not f.is_palindromic(2)
    g = LaurentT({0: 1, 2: 2})
    assert g.mirrored(2) == LaurentT({0: 2, 2: 1})
    assert not g.is_palindromic(2)


def test_at_one_and_sign():
    f = LaurentT({0: 1, 2: -2, 6: 4})
    assert f.at_one() == 3
    assert not f.is_nonnegative()
    assert LaurentT({2: 5}).is_nonnegative()


def test_format():
    assert LaurentT({0: 1, 2: 2, 4: 1}).format() == "1+2t+t^2"
    assert LaurentT({2: 1}).format() == "t"
    assert LaurentT({-2: 1}).format() == "t^-1"
    assert LaurentT({1: 3}).format() == "3t^(1/2)"
    assert LaurentT({0: -1, 2: 1}).format() == "-1+t"


def test_json_pairs_roundtrip():
    f = LaurentT({4: 2, 0: 1})
    assert f.pairs() == [[0, 1], [4, 2]]
    assert LaurentT.from_pairs(f.pairs()) == f


def test_t_factorial_values():
    assert t_factorial(0) == LaurentT.one()
    assert t_factorial(1) == LaurentT.one()
    assert t_factorial(2) == LaurentT({0: 1, 2: 1})
    assert t_factorial(3) == LaurentT({0: 1, 2: 2, 4: 2, 6: 1})


@pytest.mark.parametrize("n", range(9))
def test_t_factorial_palindromic(n):
    center = n * (n - 1) // 2
    assert t_factorial(n).is_palindromic(2 * center)


def test_center_to_halfsteps():
    assert center_to_halfsteps(2) == 4
    assert center_to_halfsteps("3/2") == 3
    with pytest.raises(ValueError):
        center_to_halfsteps("1/3")
