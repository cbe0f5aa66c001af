"""Built-in torsion-family data: coefficient polynomials and factored discriminants.

Each family of curves y^2 = x^3 + f(t) x + g(t) is stored with f and g in
factored, integer form: f = f_scale * prod(f_parts), g = g_scale *
prod(g_parts), with polynomials as integer coefficient lists, lowest degree
first.  The discriminant polynomial obeys the exact identity

    4 f(t)^3 + 27 g(t)^2 = d_unit * prod(p^mult for (p, mult) in d_parts)

which the registry re-derives and the test suite asserts.  nu classifies
the scaling freedom (nu=1: only twelfth-power rescalings; nu=2: the family
is closed under quadratic twists), and (n, m) is the reduced degree datum
nu * max(deg f / 4, deg g / 6) = n / m.  qset lists the rational scaling
constants that can be needed to clear coefficient denominators when
specializing t (sign variants of the same constants also occur for nu=2).

The C2 family is stored through the substitution t = a/b^2, under which
A = u^2 t and B = u^3 (t + 1) with u = b reproduce the direct description
A = a, B = b^3 + a*b of curves with a rational 2-torsion point.
"""

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class FamilyRow:
    nu: int
    n: int
    m: int
    f_parts: list
    f_scale: Fraction
    g_parts: list
    g_scale: Fraction
    d_parts: list
    d_unit: int
    qset: tuple

    @property
    def weights(self):
        return (1, 1)


FAMILY_ROWS = {
    "C3": FamilyRow(
        nu=1, n=1, m=3,
        f_parts=[[1, -24]],
        f_scale=Fraction(-1, 3),
        g_parts=[[1, -36, 216]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 3), ([1, -27], 1)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C4": FamilyRow(
        nu=1, n=1, m=2,
        f_parts=[[1, -16, 16]],
        f_scale=Fraction(-1, 3),
        g_parts=[[-1, 8], [-1, 16, 8]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 4), ([1, -16], 1)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C5": FamilyRow(
        nu=1, n=1, m=1,
        f_parts=[[1, -12, 14, 12, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[1, 0, 1], [1, -18, 74, 18, 1]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 5), ([1, -11, -1], 1)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C6": FamilyRow(
        nu=1, n=1, m=1,
        f_parts=[[3, 1], [3, 3, 9, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[-3, 6, 1], [9, 36, 30, 12, 1]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 2), ([9, 1], 1), ([1, 1], 3)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C7": FamilyRow(
        nu=1, n=2, m=1,
        f_parts=[[1, -1, 1], [1, -11, 30, -15, -10, 5, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[1, -18, 117, -354, 570, -486, 273, -222, 174, -46, -15, 6, 1]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 7), ([1, -1], 7), ([1, -8, 5, 1], 1)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C8": FamilyRow(
        nu=1, n=2, m=1,
        f_parts=[[16, -64, 224, -448, 480, -288, 96, -16, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[8, -16, 16, -8, 1], [-8, 32, 80, -352, 456, -288, 96, -16, 1]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 2), ([-2, 1], 4), ([-1, 1], 8), ([8, -8, 1], 1)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C9": FamilyRow(
        nu=1, n=3, m=1,
        f_parts=[[1, -3, 0, 1], [1, -9, 27, -48, 54, -45, 27, -9, 0, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[1, -18, 135, -570, 1557, -2970, 4128, -4230, 3240, -2032, 1359, -1080, 735, -306, 27, 42, -18, 0, 1]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 9), ([1, -1], 9), ([1, -1, 1], 3), ([1, -6, 3, 1], 1)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C10": FamilyRow(
        nu=1, n=3, m=1,
        f_parts=[[16, -128, 416, -720, 720, -288, -256, 432, -240, 40, 16, -8, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[2, -2, 1], [2, 0, 0, -2, 1], [-4, 12, -6, -2, 1], [-4, 32, -104, 176, -146, 48, 4, -6, 1]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 5), ([-2, 1], 5), ([-1, 1], 10), ([-4, 2, 1], 1), ([1, -3, 1], 2)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C12": FamilyRow(
        nu=1, n=4, m=1,
        f_parts=[[6, -12, 12, -6, 1], [24, -144, 864, -3000, 6132, -8112, 7368, -4728, 2154, -684, 144, -18, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[24, -96, 216, -312, 288, -168, 60, -12, 1], [-72, 576, 1008, -17136, 65880, -146304, 222552, -248688, 211296, -138720, 70632, -27696, 8208, -1776, 264, -24, 1]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 2), ([-2, 1], 6), ([-1, 1], 12), ([6, -6, 1], 1), ([2, -2, 1], 3), ([3, -3, 1], 4)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C2xC4": FamilyRow(
        nu=1, n=1, m=1,
        f_parts=[[256, 128, 80, 16, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[-16, 8, 1], [8, 8, 1], [32, 8, 1]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 1], 2), ([8, 1], 2), ([4, 1], 4)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C2xC6": FamilyRow(
        nu=1, n=2, m=1,
        f_parts=[[1, -6, 21], [1, -18, 75, 180, -825, -2178, 6861]],
        f_scale=Fraction(-1, 3),
        g_parts=[[-1, 12, -30, -36, 183], [1, -12, 30, -156, 393], [-1, 12, -30, -228, 759]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 2], 6), ([1, -9], 2), ([1, -3], 2), ([1, 3], 2), ([1, -5], 6), ([1, -1], 6)],
        d_unit=-256,
        qset=(1, 3),
    ),
    "C2xC8": FamilyRow(
        nu=1, n=4, m=1,
        f_parts=[[16777216, 67108864, 117440512, 117440512, 72351744, 26214400, 3276800, -1900544, -1183744, -237568, 51200, 51200, 17664, 3584, 448, 32, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[-8192, -16384, -12288, -4096, -256, 256, 96, 16, 1], [-2048, -4096, -3072, -1024, 128, 256, 96, 16, 1], [4096, 8192, 6144, 2048, 512, 256, 96, 16, 1]],
        g_scale=Fraction(2, 27),
        d_parts=[([0, 2], 8), ([2, 1], 8), ([4, 1], 8), ([-8, 0, 1], 2), ([8, 8, 1], 2), ([8, 4, 1], 4)],
        d_unit=-256,
        qset=(1, 3),
    ),
    # one rational point of order 2: A = a, B = b^3 + a b  <->  f = t, g = t+1
    "C2": FamilyRow(
        nu=2, n=1, m=2,
        f_parts=[[0, 1]],
        f_scale=Fraction(1),
        g_parts=[[1, 1]],
        g_scale=Fraction(1),
        d_parts=[([3, 1], 2), ([3, 4], 1)],
        d_unit=1,
        qset=(1,),
    ),
    # full rational 2-torsion
    "C2xC2": FamilyRow(
        nu=2, n=1, m=1,
        f_parts=[[1, -1, 1]],
        f_scale=Fraction(-1, 3),
        g_parts=[[-2, 3, 3, -2]],
        g_scale=Fraction(1, 27),
        d_parts=[([0, 1], 2), ([-1, 1], 2)],
        d_unit=-1,
        qset=(1, 3),
    ),
}

#: groups whose scaled-coefficient data (f_parts against -3f, g_parts
#: against (27/2)g, d_unit = -2^8) follows the tabulated convention
TABULATED_GROUPS = (
    "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12",
    "C2xC4", "C2xC6", "C2xC8",
)
