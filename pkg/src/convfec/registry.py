"""Named code constructors: worked examples and certified desk-scale codes.

The desk-scale entries were found by `construct.search_random_code` with
the recorded seeds and certified exhaustively; tests re-run the
certification.  Coefficients are stored verbatim so every run uses the
identical codes.
"""

from __future__ import annotations

from .blockcode import BlockCode, rs_new
from .convcode import ConvCode, PolyMatrix
from .construct import ToeplitzLT, product_toeplitz
from .gf import FieldSpec, gf2m


def _f(spec: FieldSpec, e: int) -> int:
    """alpha^e for alpha the modulus root."""
    return spec.pow(spec.p, e)


# -- fields used by the printed examples --------------------------------------

F8_A = (1, 1, 0, 1)          # a^3 + a + 1
F8_B = (1, 0, 1, 1)          # a^3 + a^2 + 1
F16_STD = (1, 1, 0, 0, 1)    # 1 + a + a^4
F32_MU = (1, 0, 1, 0, 0, 1)  # mu^5 + mu^2 + 1
F32_GAMMA = (1, 1, 1, 1, 0, 1)  # gamma^5 + gamma^3 + gamma^2 + gamma + 1
F128_Q = (1, 0, 0, 0, 0, 0, 1, 1)  # beta^7 + beta^6 + 1
F128_COMPLETE = (1, 1, 0, 1, 0, 0, 1, 1)       # a^7+a^6+a^3+a+1
F128_REVERSE = (1, 1, 1, 0, 1, 1, 1, 1)        # a^7+a^6+a^5+a^4+a^2+a+1
F16_DESK = (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1)  # 0x1002b


def example_mdp_2_1_1() -> ConvCode:
    """(2,1,1) code over GF(32), mu^5+mu^2+1: MDP and reverse-MDP.

    The supplied parity-check matrix has degree 2 (its entries share a
    constant gcd only), so nu=2 while delta/(n-k)=1; window tests run at
    L = 2 as declared."""
    s = gf2m(5, F32_MU)
    H = PolyMatrix(
        s,
        [
            [[1, _f(s, 15)]],
            [[_f(s, 25), _f(s, 10)]],
            [[_f(s, 5), _f(s, 3)]],
        ],
    )
    return ConvCode(2, 1, 1, parity=H, name="ex-mdp-2-1-1")


def example_complete_3_1_1() -> ConvCode:
    """(3,1,1) over GF(128), a^7+a^6+a^3+a+1: complete-MDP."""
    s = gf2m(7, F128_COMPLETE)
    H = PolyMatrix(
        s,
        [
            [
                [_f(s, 76), _f(s, 62), 1],
                [_f(s, 73), _f(s, 76), _f(s, 62)],
            ],
            [
                [_f(s, 77), _f(s, 85), _f(s, 76)],
                [_f(s, 37), _f(s, 77), _f(s, 85)],
            ],
        ],
    )
    return ConvCode(3, 1, 1, parity=H, name="ex-complete-3-1-1")


def example_reverse_3_1_1() -> ConvCode:
    """(3,1,1) over GF(128), a^7+a^6+a^5+a^4+a^2+a+1: reverse-MDP but not
    complete-MDP (columns 1,5,6,7 of the partial matrix are dependent)."""
    s = gf2m(7, F128_REVERSE)
    H = PolyMatrix(
        s,
        [
            [
                [_f(s, 93), _f(s, 19), _f(s, 75)],
                [_f(s, 61), _f(s, 93), _f(s, 19)],
            ],
            [
                [_f(s, 49), _f(s, 30), _f(s, 35)],
                [_f(s, 19), _f(s, 49), _f(s, 30)],
            ],
        ],
    )
    return ConvCode(3, 1, 1, parity=H, name="ex-reverse-3-1-1")


# -- printed superregular matrices ---------------------------------------------


def matrix_A() -> ToeplitzLT:
    """4x4 over GF(8), a^3+a+1: superregular, reverse not."""
    s = gf2m(3, F8_A)
    return ToeplitzLT(s, (1, 2, _f(s, 3), 2))


def matrix_B() -> ToeplitzLT:
    """4x4 over GF(8), a^3+a^2+1: reverse-superregular (equal to its
    own reverse)."""
    s = gf2m(3, F8_B)
    return ToeplitzLT(s, (1, 2, 2, 1))


def matrix_C16() -> ToeplitzLT:
    """Diagonals (1, a^4, a^6, a^3) over GF(16).

    As printed this matrix is claimed over GF(8), but there the proper
    minor rows {2,4} x cols {1,2} is a^4 a^6 - a^3 = a^3(a^7 - 1) = 0
    for every representation; over GF(16) it is reverse-superregular."""
    s = gf2m(4, F16_STD)
    return ToeplitzLT(s, (1, _f(s, 4), _f(s, 6), _f(s, 3)))


def matrix_Y() -> ToeplitzLT:
    """5x5 over GF(16), 1+a+a^4: reverse-superregular; its inverse is not."""
    s = gf2m(4, F16_STD)
    return ToeplitzLT(s, (1, _f(s, 12), _f(s, 4), 1, _f(s, 6)))


def matrix_Y_inverse_rev_printed() -> ToeplitzLT:
    """The diagonal-reversed inverse of Y as printed (corner entry a^14;
    the directly computed inverse ends in a^6 instead).  Kept as data:
    its displayed rows 2-5 x cols 1-4 minor is zero."""
    s = gf2m(4, F16_STD)
    return ToeplitzLT(s, (_f(s, 14), _f(s, 13), _f(s, 14), _f(s, 12), 1))


def matrix_P() -> ToeplitzLT:
    """6x6 product-construction matrix over GF(32), mu^5+mu^2+1."""
    return product_toeplitz(gf2m(5, F32_MU), 2, 5)


def matrix_Q() -> ToeplitzLT:
    """8x8 product-construction matrix over GF(128), beta^7+beta^6+1."""
    return product_toeplitz(gf2m(7, F128_Q), 2, 7)


def matrix_S_lower() -> ToeplitzLT:
    """Lower-triangular form of the 6x6 matrix behind the (3,1,1)
    generator extraction, diagonals (1, g^19, g^16, g^20, g^5, g^16).

    Reverse-superregular over GF(32) with modulus
    g^5+g^3+g^2+g+1 (the reciprocal of the printed polynomial; under the
    printed modulus the matrix is not superregular)."""
    s = gf2m(5, F32_GAMMA)
    return ToeplitzLT(s, (1, _f(s, 19), _f(s, 16), _f(s, 20), _f(s, 5), _f(s, 16)))


# -- certified desk-scale codes -------------------------------------------------
#
# Found by search_random_code(n, k, delta, GF(2^16) [0x1002b], seed=2024)
# and certified exhaustively (complete-MDP).

_DESK_COEFFS = {
    "2/5": (
        5, 2, 3,
        [
            [[38502, 62777, 51214, 36379, 15744],
             [202, 60372, 48904, 55393, 55168],
             [19858, 20024, 16468, 53677, 22257]],
            [[8494, 61526, 28977, 33822, 34451],
             [56425, 28767, 30685, 25676, 7325],
             [15831, 62682, 49357, 47993, 7438]],
        ],
    ),
    "1/2": (
        2, 1, 3,
        [
            [[60629, 62162]],
            [[42367, 47193]],
            [[17274, 23275]],
            [[12951, 42898]],
        ],
    ),
    "3/5": (
        5, 3, 2,
        [
            [[60629, 62162, 42367, 47193, 17274],
             [23275, 12951, 42898, 58672, 817]],
            [[41785, 52507, 43915, 44933, 21333],
             [13511, 245, 64287, 8731, 8775]],
        ],
    ),
    "2/3": (
        3, 2, 3,
        [
            [[60629, 62162, 42367]],
            [[47193, 17274, 23275]],
            [[12951, 42898, 58672]],
            [[817, 41785, 52507]],
        ],
    ),
    "7/10": (
        10, 7, 3,
        [
            [[39681, 23401, 60632, 38128, 35393, 49155, 10990, 57765, 5826, 41737],
             [64253, 28322, 53894, 1090, 39871, 58401, 12369, 16217, 62962, 49697],
             [46920, 40250, 30228, 28867, 58344, 35128, 39858, 6112, 11427, 10099]],
            [[62691, 59810, 48350, 25843, 49052, 41556, 34828, 10984, 38412, 46631],
             [61579, 57838, 24940, 18129, 224, 31137, 37718, 33995, 1030, 8367],
             [30013, 10699, 40775, 44991, 21439, 10102, 53481, 12607, 13968, 45011]],
        ],
    ),
}

DESK_RATES = tuple(_DESK_COEFFS)


def desk_spec() -> FieldSpec:
    return gf2m(16, F16_DESK)


def desk_complete_code(rate: str) -> ConvCode:
    """Certified complete-MDP desk code at one of the five table rates."""
    if rate not in _DESK_COEFFS:
        from . import errors

        raise errors.BadParams(f"rate must be one of {DESK_RATES}")
    n, k, delta, coeffs = _DESK_COEFFS[rate]
    H = PolyMatrix(desk_spec(), coeffs)
    return ConvCode(n, k, delta, parity=H, name=f"desk-{rate.replace('/', '-')}")


def desk_block_code(rate: str) -> BlockCode:
    """Same-rate MDS baseline with N = (L+1)n (block length matches the
    convolutional code's maximal window)."""
    code = desk_complete_code(rate)
    N = (code.L + 1) * code.n
    K = N * code.k // code.n
    return rs_new(N, K, gf2m(5, F32_MU))
