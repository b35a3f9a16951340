"""Transcribed reference tables (golden data) for the verification suites.

Every number here is independently recomputable from the package's own
closed forms and maximisers; the verify suites diff regeneration against
this transcription cell by cell, so a slip on either side is caught.

Four printed cells in the source tables contradict the rest of the same
data set (each is forced by the other tables and the displayed closed
forms).  The transcription stores the forced value; ``CORRECTED_CELLS``
records what was printed, and the verify report annotates those cells.
Two further cells are genuine discrepancies rather than misprints and are
reported as *flagged*, never silently resolved: ``lemma_ei2a.n2`` (printed
maximum 2, oracle maximum 1) and ``theorem_un5.D_even`` (printed constant
bound 6, exact supremum 4110/5^4 = 6.5760).
"""

from __future__ import annotations

from fractions import Fraction

# ---------------------------------------------------------------------------
# Table 1: closed form of beta(n) and its unique maximiser for n >= 8,
# keyed by n mod 4: (coefficient, exponent offset, fixed large parts).
# ---------------------------------------------------------------------------

TABLE1 = {
    0: (1, 0, ()),
    1: (7, 5, (5,)),
    2: (11, 6, (6,)),
    3: (77, 11, (6, 5)),
}

# ---------------------------------------------------------------------------
# Table 2: n -> (beta, alpha, alpha_plus, alpha_minus) for 1 <= n <= 43.
# ---------------------------------------------------------------------------

TABLE2 = {
    1: (1, 2, 1, 1),
    2: (2, 6, 4, 2),
    3: (3, 12, 5, 5),
    4: (5, 25, 14, 10),
    5: (7, 46, 20, 20),
    6: (11, 86, 42, 36),
    7: (15, 148, 65, 65),
    8: (25, 255, 120, 110),
    9: (35, 420, 186, 186),
    10: (55, 686, 316, 302),
    11: (77, 1088, 486, 486),
    12: (125, 1712, 784, 762),
    13: (175, 2634, 1185, 1185),
    14: (275, 4020, 1836, 1806),
    15: (385, 6036, 2730, 2730),
    16: (625, 8988, 4110, 4066),
    17: (875, 13214, 6007, 6007),
    18: (1375, 19282, 8830, 8770),
    19: (1925, 27840, 12711, 12711),
    20: (3125, 39923, 18326, 18242),
    21: (4375, 56750, 26007, 26007),
    22: (6875, 80160, 36884, 36772),  # alpha corrected, see CORRECTED_CELLS
    23: (9625, 112384, 51675, 51675),
    24: (15625, 156660, 72260, 72106),
    25: (21875, 216958, 100058, 100058),
    26: (34375, 298894, 138186, 137984),
    27: (48125, 409420, 189322, 189322),
    28: (78125, 558119, 258610, 258340),
    29: (109375, 756950, 350877, 350877),
    30: (171875, 1022090, 474580, 474228),
    31: (240625, 1373760, 638203, 638203),
    32: (390625, 1838932, 855536, 855074),
    33: (546875, 2451366, 1141125, 1141125),
    34: (859375, 3255480, 1517336, 1516742),
    35: (1203125, 4306920, 2008633, 2008633),
    36: (1953125, 5678104, 2651020, 2650250),
    37: (2734375, 7459634, 3484969, 3484969),
    38: (4296875, 9768386, 4568010, 4567030),
    39: (6015625, 12750360, 5966183, 5966183),
    40: (9765625, 16592332, 7770754, 7769500),
    41: (13671875, 21527228, 10088066, 10088066),
    42: (21484375, 27850932, 13061880, 13060296),
    43: (30078125, 35931532, 16861595, 16861595),
}

# ---------------------------------------------------------------------------
# Tables 3 and 4: maxima of the two-slot products (with a beta tail) for
# 1 <= n <= 33.  ``pairs`` lists the printed maximising (a, b); the printed
# cells are representatives, not always the complete argmax set.
# ---------------------------------------------------------------------------

TABLE3 = {
    1: {"aa": (((1, 0),), 2), "a_plus": (((1, 0),), 2)},
    2: {"aa": (((2, 0),), 6), "a_plus": (((2, 0),), 6)},
    3: {"aa": (((2, 1), (3, 0)), 12), "a_plus": (((3, 0),), 12)},
    4: {"aa": (((2, 2),), 36), "a_plus": (((4, 0),), 25)},
    5: {"aa": (((3, 2),), 72), "a_plus": (((3, 2),), 48)},
    6: {"aa": (((4, 2),), 150), "a_plus": (((4, 2),), 100)},
    7: {"aa": (((4, 3),), 300), "a_plus": (((5, 2),), 184)},
    8: {"aa": (((4, 4),), 625), "a_plus": (((4, 4),), 350)},
    9: {"aa": (((5, 4),), 1150), "a_plus": (((5, 4),), 644)},
    10: {"aa": (((6, 4),), 2150), "a_plus": (((6, 4),), 1204)},
    11: {"aa": (((6, 5),), 3956), "a_plus": (((7, 4),), 2072)},
    12: {"aa": (((6, 6),), 7396), "a_plus": (((6, 6),), 3612)},
    13: {"aa": (((7, 6),), 12728), "a_plus": (((7, 6),), 6216)},
    14: {"aa": (((8, 6),), 21930), "a_plus": (((8, 6),), 10710)},
    15: {"aa": (((8, 7),), 37740), "a_plus": (((7, 8),), 17760)},
    16: {"aa": (((8, 8),), 65025), "a_plus": (((8, 8),), 30600)},
    17: {"aa": (((9, 8),), 107100), "a_plus": (((9, 8),), 50400)},
    18: {"aa": (((9, 9),), 176400), "a_plus": (((10, 8),), 82320)},
    19: {"aa": (((10, 9),), 288120), "a_plus": (((9, 10),), 132720)},
    20: {"aa": (((10, 10),), 470596), "a_plus": (((10, 10),), 216776)},
    21: {"aa": (((11, 10),), 746368), "a_plus": (((11, 10),), 343808)},
    22: {"aa": (((11, 11),), 1183744), "a_plus": (((12, 10),), 540992)},
    23: {"aa": (((12, 11),), 1862656), "a_plus": (((11, 12),), 852992)},
    24: {"aa": (((12, 12),), 2930944), "a_plus": (((12, 12),), 1342208)},
    25: {"aa": (((13, 12),), 4509408), "a_plus": (((13, 12),), 2065056)},
    26: {"aa": (((13, 13),), 6937956), "a_plus": (((14, 12),), 3151680)},
    27: {"aa": (((14, 13),), 10588680), "a_plus": (((13, 14),), 4836024)},
    28: {"aa": (((14, 14),), 16160400), "a_plus": (((14, 14),), 7380720)},
    29: {"aa": (((15, 14),), 24264720), "a_plus": (((15, 14),), 11082096)},
    30: {"aa": (((15, 15),), 36433296), "a_plus": (((14, 16),), 16522200)},
    31: {"aa": (((16, 15),), 54251568), "a_plus": (((15, 16),), 24807960)},
    32: {"aa": (((14, 14),), 80802000), "a_plus": (((16, 16),), 36940680)},
    33: {"aa": (((15, 14),), 121323600), "a_plus": (((15, 14),), 55410480)},
}

TABLE4 = {
    1: {"plusplus": (((1, 0),), 1), "plus_minus": (((1, 0),), 1)},
    2: {"plusplus": (((2, 0),), 4), "plus_minus": (((0, 2),), 4)},
    3: {"plusplus": (((3, 0),), 5), "plus_minus": (((3, 0),), 5)},
    4: {"plusplus": (((2, 2),), 16), "plus_minus": (((0, 4),), 14)},
    5: {"plusplus": (((3, 2), (5, 0)), 20), "plus_minus": (((3, 2), (5, 0)), 20)},
    6: {"plusplus": (((4, 2),), 56), "plus_minus": (((0, 6),), 42)},
    7: {"plusplus": (((5, 2),), 80), "plus_minus": (((5, 2),), 80)},
    8: {"plusplus": (((4, 4),), 196), "plus_minus": (((6, 2),), 144)},
    9: {"plusplus": (((5, 4),), 280), "plus_minus": (((5, 4),), 280)},
    10: {"plusplus": (((6, 4),), 588), "plus_minus": (((6, 4),), 504)},
    11: {"plusplus": (((7, 4),), 910), "plus_minus": (((7, 4),), 910)},
    12: {"plusplus": (((6, 6),), 1764), "plus_minus": (((8, 4),), 1540)},
    13: {"plusplus": (((7, 6),), 2730), "plus_minus": (((7, 6),), 2730)},
    14: {"plusplus": (((8, 6),), 5040), "plus_minus": (((8, 6),), 4620)},
    15: {"plusplus": (((9, 6),), 7812), "plus_minus": (((9, 6),), 7812)},
    16: {"plusplus": (((8, 8),), 14400), "plus_minus": (((8, 8),), 13200)},
    17: {"plusplus": (((9, 8),), 22320), "plus_minus": (((9, 8),), 22320)},
    18: {"plusplus": (((10, 8),), 37920), "plus_minus": (((10, 8),), 36240)},
    19: {"plusplus": (((9, 10),), 58776), "plus_minus": (((9, 10),), 58776)},
    20: {"plusplus": (((10, 10),), 99856), "plus_minus": (((10, 10),), 95432)},
    21: {"plusplus": (((11, 10),), 153576), "plus_minus": (((11, 10),), 153576)},
    22: {"plusplus": (((12, 10),), 247744), "plus_minus": (((12, 10),), 240792)},
    23: {"plusplus": (((11, 12),), 381024), "plus_minus": (((11, 12),), 381024)},
    24: {"plusplus": (((12, 12),), 614656), "plus_minus": (((12, 12),), 597408)},  # corrected
    25: {"plusplus": (((13, 12),), 929040), "plus_minus": (((13, 12),), 929040)},
    26: {"plusplus": (((14, 12),), 1439424), "plus_minus": (((14, 12),), 1415904)},
    27: {"plusplus": (((13, 14),), 2175660), "plus_minus": (((13, 14),), 2175660)},
    28: {"plusplus": (((14, 14),), 3370896), "plus_minus": (((14, 14),), 3315816)},
    29: {"plusplus": (((15, 14),), 5012280), "plus_minus": (((15, 14),), 5012280)},
    30: {"plusplus": (((16, 14),), 7545960), "plus_minus": (((16, 14),), 7465176)},
    31: {"plusplus": (((15, 16),), 11220300), "plus_minus": (((15, 16),), 11220300)},
    32: {"plusplus": (((16, 16),), 16892100), "plus_minus": (((16, 16),), 16711260)},
    33: {"plusplus": (((15, 14),), 25061400), "plus_minus": (((15, 14),), 25061400)},
}

# Maxima of alpha(a)alpha(b) restricted to a+b = n (remark under Table 3).
GAMMA_EQ_REMARK = {
    32: (80784144, ((16, 16),)),
    33: (118767432, ((17, 16),)),
}

# ---------------------------------------------------------------------------
# Ratio tables: beta(k+n)/(beta(k)beta(n)) by residues mod 4.  The main
# table applies when both k and n avoid {1,2,3,7}; the small table covers
# k in {1,2,3,7} with n > 7.
# ---------------------------------------------------------------------------

BO1_MAIN = {
    (0, 0): Fraction(1), (0, 1): Fraction(1), (0, 2): Fraction(1), (0, 3): Fraction(1),
    (1, 0): Fraction(1), (2, 0): Fraction(1), (3, 0): Fraction(1),
    (1, 1): Fraction(55, 49),
    (1, 2): Fraction(1), (2, 1): Fraction(1),
    (1, 3): Fraction(625, 539), (3, 1): Fraction(625, 539),
    (2, 2): Fraction(125, 121),
    (2, 3): Fraction(125, 121), (3, 2): Fraction(125, 121),  # corrected
    (3, 3): Fraction(625, 539),
}

BO1_SMALL = {
    (1, 0): Fraction(7, 5),
    (1, 1): Fraction(11, 7),  # corrected
    (1, 2): Fraction(7, 5),
    (1, 3): Fraction(125, 77),
    (2, 0): Fraction(11, 10),
    (2, 1): Fraction(11, 10),
    (2, 2): Fraction(25, 22),
    (2, 3): Fraction(25, 22),
    (3, 0): Fraction(77, 75),
    (3, 1): Fraction(25, 21),
    (3, 2): Fraction(35, 33),
    (3, 3): Fraction(25, 21),
    (7, 0): Fraction(77, 75),
    (7, 1): Fraction(25, 21),
    (7, 2): Fraction(35, 33),
    (7, 3): Fraction(25, 21),
}

# ---------------------------------------------------------------------------
# Odd-part-restricted maxima: small values and residue closed forms
# (coefficient, exponent offset) valid for even n >= 14 resp. 16.
# ---------------------------------------------------------------------------

NK8_SMALL = {2: 1, 4: 3, 6: 9, 8: 21, 12: 105}
NK8_RESIDUE = {2: (49, 10), 0: (539, 16)}

# Stated small-rank maxima for minus-type orthogonal groups with no +/-1
# eigenvalues; the n=2 entry disagrees with the shape oracle and is flagged.
EI2A_SMALL = {6: 9, 4: 3, 2: 2}

# Maximal series sizes for minus-type orthogonal groups, odd q, tiny rank
# (remark values; the plain two-slot maximum does not apply there).
DMINUS_ODD_SMALL = {2: (2, "α⁻(2)α⁺(0)"), 4: (10, "α⁻(4)α⁺(0)"), 6: (40, "α⁻(4)α⁺(2)")}

# ---------------------------------------------------------------------------
# Sharp-bound coefficient blocks, duplicated from the computational module
# on purpose: the verify suite diffs the two transcriptions.
# kind -> {n mod 4: (coefficient, exponent offset)}.
# ---------------------------------------------------------------------------

BOUND_COEFFS = {
    "f": {0: (8988, 16), 1: (66396, 21), 2: (4020, 14), 3: (6036, 15)},
    "f_plus": {0: (4110, 16), 1: (6007, 17), 2: (1836, 14), 3: (2730, 15)},
    "f_minus": {0: (4066, 16), 1: (6007, 17), 2: (1806, 14), 3: (2730, 15)},
    "tau": {0: (16160400, 28), 1: (24264720, 29), 2: (36433296, 30), 3: (54251568, 31)},
    "theta": {0: (36940680, 32), 1: (11082096, 29), 2: (16522200, 30), 3: (24807960, 31)},
    "theta_plus": {0: (16892100, 32), 1: (5012280, 29), 2: (7545960, 30), 3: (11220300, 31)},
    "theta_minus": {0: (16711260, 32), 1: (5012280, 29), 2: (7465176, 30), 3: (11220300, 31)},
}

# Stated argmax positions of the one-slot products for n >= 18, by n mod 4.
Q_EVEN_ARGMAX = {
    "symplectic": {0: 16, 1: 15, 2: 14, 3: 15},
    "plus": {0: 16, 1: 17, 2: 14, 3: 15},
    "minus": {0: 16, 1: 17, 2: 14, 3: 15},
}

# Stated argmax pairs of the two-slot products for n >= 32, by n mod 4.
# plus_minus pairs are in the artifact's slot order (minus-type first).
ALAALB1_ARGMAX = {
    "aa": {0: (14, 14), 1: (15, 14), 2: (15, 15), 3: (16, 15)},
    "a_plus": {0: (16, 16), 1: (15, 14), 2: (14, 16), 3: (15, 16)},
    "plusplus": {0: (16, 16), 1: (15, 14), 2: (16, 14), 3: (16, 15)},
    "plus_minus": {0: (16, 16), 1: (15, 14), 2: (16, 14), 3: (15, 16)},
}

# Stated constant bounds c (the artifact checks c_exact < bound via 4th powers).
UN5_BOUND = {
    "A": Fraction(3, 2),
    "C_even": Fraction(15),
    "D_even": Fraction(6),
    "B_odd": Fraction(95),
    "C_odd": Fraction(209),
    "D_odd": Fraction(44),
}

# ---------------------------------------------------------------------------
# Printed values that the transcription corrects (forced by the rest of the
# data), keyed by the claim id of the affected verify entry.
# ---------------------------------------------------------------------------

CORRECTED_CELLS = {
    "table2.row22.alpha": "printed 86160; the displayed count formula forces 80160",
    "table4.row24.plus_minus": "printed 397408; Table 2 forces 762*784 = 597408",
    "lemma_bo1.ratio.k2n3": "printed 125/77; the closed forms force 125/121",
    "lemma_bo1.ratio.k3n2": "printed 125/77; the closed forms force 125/121",
    "lemma_bo1.small.k1n1": "printed 11/5; the closed forms force 11/7",
}
