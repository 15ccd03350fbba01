"""Frozen reference inventory for the rank-2 family.

Pins the canonical enumeration so the verification checks and the test
suite can compare library output row for row against static data: the
28-word head table, the twelve shift words, the sixty relation rows with
their outside-cylinder sets and residues, the sixty labeled function
specs, the three symmetry permutations, and the printed reference
constants.  Nothing here calls the enumeration code; the only processing
is expanding compact block notation into index tuples.
"""

WORDS = (
    "x1 x2' x1'", "x1 x2' x1", "x1 x2' x2'", "x1 x2 x2", "x1 x2 x1'",
    "x1 x2 x1", "x1 x1", "x2' x1' x2'", "x2' x1' x2", "x2' x1' x1'",
    "x2' x1 x1", "x2' x1 x2'", "x2' x1 x2", "x2' x2'", "x2 x1' x2'",
    "x2 x1' x2", "x2 x1' x1'", "x2 x1 x1", "x2 x1 x2'", "x2 x1 x2",
    "x2 x2", "x1' x2' x1'", "x1' x2' x1", "x1' x2' x2'", "x1' x2 x2",
    "x1' x2 x1'", "x1' x2 x1", "x1' x1'",
)

SHIFT_WORDS = (
    "x1'", "x2", "x2'", "x1",
    "x1 x2 x1'", "x1 x2' x1'", "x2' x1 x2", "x2' x1' x2",
    "x2 x1 x2'", "x2 x1' x2'", "x1' x2 x1", "x1' x2' x1",
)

TRIPLES = {
    1: (1, 2, 3), 2: (4, 5, 6), 3: (8, 9, 10), 4: (11, 12, 13),
    5: (15, 16, 17), 6: (18, 19, 20), 7: (22, 23, 24), 8: (25, 26, 27),
}

QUARTERS = {
    1: tuple(range(1, 8)),
    2: tuple(range(8, 15)),
    3: tuple(range(15, 22)),
    4: tuple(range(22, 29)),
}

ALL_INDICES = tuple(range(1, 29))


def _minus(excluded):
    gone = set(excluded)
    return tuple(i for i in ALL_INDICES if i not in gone)


_FIVE = ("1", "x1", "x1'", "x2", "x2'")

# One row per relation: (gamma, index of the tiled word, outside-cylinder
# indices, residue words, cancellation).  Order matches the enumeration:
# shift words first, head-table order within each.
RELATION_ROWS = (
    # gamma = x1'
    ("x1'", 1, _minus(TRIPLES[3]), _FIVE, 1),
    ("x1'", 2, _minus(TRIPLES[4]), _FIVE, 1),
    ("x1'", 3, _minus((14,)), _FIVE, 1),
    ("x1'", 4, _minus((21,)), _FIVE, 1),
    ("x1'", 5, _minus(TRIPLES[5]), _FIVE, 1),
    ("x1'", 6, _minus(TRIPLES[6]), _FIVE, 1),
    ("x1'", 7, _minus(QUARTERS[1]), ("1", "x1'", "x2", "x2'"), 1),
    # gamma = x2
    ("x2", 8, _minus(TRIPLES[7]), _FIVE, 1),
    ("x2", 9, _minus(TRIPLES[8]), _FIVE, 1),
    ("x2", 10, _minus((28,)), _FIVE, 1),
    ("x2", 11, _minus((7,)), _FIVE, 1),
    ("x2", 12, _minus(TRIPLES[1]), _FIVE, 1),
    ("x2", 13, _minus(TRIPLES[2]), _FIVE, 1),
    ("x2", 14, _minus(QUARTERS[2]), ("1", "x1", "x1'", "x2"), 1),
    # gamma = x2'
    ("x2'", 15, _minus(TRIPLES[7]), _FIVE, 1),
    ("x2'", 16, _minus(TRIPLES[8]), _FIVE, 1),
    ("x2'", 17, _minus((28,)), _FIVE, 1),
    ("x2'", 18, _minus((7,)), _FIVE, 1),
    ("x2'", 19, _minus(TRIPLES[1]), _FIVE, 1),
    ("x2'", 20, _minus(TRIPLES[2]), _FIVE, 1),
    ("x2'", 21, _minus(QUARTERS[3]), ("1", "x1", "x1'", "x2'"), 1),
    # gamma = x1
    ("x1", 22, _minus(TRIPLES[3]), _FIVE, 1),
    ("x1", 23, _minus(TRIPLES[4]), _FIVE, 1),
    ("x1", 24, _minus((14,)), _FIVE, 1),
    ("x1", 25, _minus((21,)), _FIVE, 1),
    ("x1", 26, _minus(TRIPLES[5]), _FIVE, 1),
    ("x1", 27, _minus(TRIPLES[6]), _FIVE, 1),
    ("x1", 28, _minus(QUARTERS[4]), ("1", "x1", "x2", "x2'"), 1),
    # gamma = x1 x2 x1'
    ("x1 x2 x1'", 1, QUARTERS[1], ("x1",), 3),
    ("x1 x2 x1'", 2, _minus((7,)), _FIVE, 2),
    ("x1 x2 x1'", 3, _minus(TRIPLES[1]), _FIVE, 2),
    ("x1 x2 x1'", 7, _minus((6,)), _FIVE, 1),
    # gamma = x1 x2' x1'
    ("x1 x2' x1'", 4, _minus(TRIPLES[2]), _FIVE, 2),
    ("x1 x2' x1'", 5, QUARTERS[1], ("x1",), 3),
    ("x1 x2' x1'", 6, _minus((7,)), _FIVE, 2),
    ("x1 x2' x1'", 7, _minus((2,)), _FIVE, 1),
    # gamma = x2' x1 x2
    ("x2' x1 x2", 8, _minus((14,)), _FIVE, 2),
    ("x2' x1 x2", 9, QUARTERS[2], ("x2'",), 3),
    ("x2' x1 x2", 10, _minus(TRIPLES[3]), _FIVE, 2),
    ("x2' x1 x2", 14, _minus((12,)), _FIVE, 1),
    # gamma = x2' x1' x2
    ("x2' x1' x2", 11, _minus(TRIPLES[4]), _FIVE, 2),
    ("x2' x1' x2", 12, _minus((14,)), _FIVE, 2),
    ("x2' x1' x2", 13, QUARTERS[2], ("x2'",), 3),
    ("x2' x1' x2", 14, _minus((8,)), _FIVE, 1),
    # gamma = x2 x1 x2'
    ("x2 x1 x2'", 15, QUARTERS[3], ("x2",), 3),
    ("x2 x1 x2'", 16, _minus((21,)), _FIVE, 2),
    ("x2 x1 x2'", 17, _minus(TRIPLES[5]), _FIVE, 2),
    ("x2 x1 x2'", 21, _minus((20,)), _FIVE, 1),
    # gamma = x2 x1' x2'
    ("x2 x1' x2'", 18, _minus(TRIPLES[6]), _FIVE, 2),
    ("x2 x1' x2'", 19, QUARTERS[3], ("x2",), 3),
    ("x2 x1' x2'", 20, _minus((21,)), _FIVE, 2),
    ("x2 x1' x2'", 21, _minus((16,)), _FIVE, 1),
    # gamma = x1' x2 x1
    ("x1' x2 x1", 22, _minus((28,)), _FIVE, 2),
    ("x1' x2 x1", 23, QUARTERS[4], ("x1'",), 3),
    ("x1' x2 x1", 24, _minus(TRIPLES[7]), _FIVE, 2),
    ("x1' x2 x1", 28, _minus((26,)), _FIVE, 1),
    # gamma = x1' x2' x1
    ("x1' x2' x1", 25, _minus(TRIPLES[8]), _FIVE, 2),
    ("x1' x2' x1", 26, _minus((28,)), _FIVE, 2),
    ("x1' x2' x1", 27, QUARTERS[4], ("x1'",), 3),
    ("x1' x2' x1", 28, _minus((22,)), _FIVE, 1),
)

# One row per labeled function: (label, denominator index, numerator
# indices, source gamma, cancellation).  The h rows at three-letter
# denominators come from transported siblings of the conjugate rows.
FUNCTION_ROWS = (
    ("f1", 1, QUARTERS[1], "x1 x2 x1'", 3),
    ("g1", 1, _minus(TRIPLES[3]), "x1'", 1),
    ("h1", 1, _minus((28,)), "x1' x2 x1'", 2),
    ("f2", 2, _minus(TRIPLES[4]), "x1'", 1),
    ("f3", 3, _minus(TRIPLES[1]), "x1 x2 x1'", 2),
    ("g3", 3, _minus((14,)), "x1'", 1),
    ("f4", 4, _minus(TRIPLES[2]), "x1 x2' x1'", 2),
    ("g4", 4, _minus((21,)), "x1'", 1),
    ("f5", 5, QUARTERS[1], "x1 x2' x1'", 3),
    ("g5", 5, _minus(TRIPLES[5]), "x1'", 1),
    ("h5", 5, _minus((28,)), "x1' x2' x1'", 2),
    ("f6", 6, _minus(TRIPLES[6]), "x1'", 1),
    ("f7", 7, _minus(QUARTERS[1]), "x1'", 1),
    ("h7", 7, _minus((2,)), "x1 x2' x1'", 1),
    ("u7", 7, _minus((6,)), "x1 x2 x1'", 1),
    ("f8", 8, _minus(TRIPLES[7]), "x2", 1),
    ("f9", 9, QUARTERS[2], "x2' x1 x2", 3),
    ("g9", 9, _minus(TRIPLES[8]), "x2", 1),
    ("h9", 9, _minus((21,)), "x2 x1 x2", 2),
    ("f10", 10, _minus(TRIPLES[3]), "x2' x1 x2", 2),
    ("g10", 10, _minus((28,)), "x2", 1),
    ("f11", 11, _minus(TRIPLES[4]), "x2' x1' x2", 2),
    ("g11", 11, _minus((7,)), "x2", 1),
    ("f12", 12, _minus(TRIPLES[1]), "x2", 1),
    ("f13", 13, QUARTERS[2], "x2' x1' x2", 3),
    ("g13", 13, _minus(TRIPLES[2]), "x2", 1),
    ("h13", 13, _minus((21,)), "x2 x1' x2", 2),
    ("f14", 14, _minus(QUARTERS[2]), "x2", 1),
    ("h14", 14, _minus((8,)), "x2' x1' x2", 1),
    ("u14", 14, _minus((12,)), "x2' x1 x2", 1),
    ("f15", 15, QUARTERS[3], "x2 x1 x2'", 3),
    ("g15", 15, _minus(TRIPLES[7]), "x2'", 1),
    ("h15", 15, _minus((14,)), "x2' x1 x2'", 2),
    ("f16", 16, _minus(TRIPLES[8]), "x2'", 1),
    ("f17", 17, _minus(TRIPLES[5]), "x2 x1 x2'", 2),
    ("g17", 17, _minus((28,)), "x2'", 1),
    ("f18", 18, _minus(TRIPLES[6]), "x2 x1' x2'", 2),
    ("g18", 18, _minus((7,)), "x2'", 1),
    ("f19", 19, QUARTERS[3], "x2 x1' x2'", 3),
    ("g19", 19, _minus(TRIPLES[1]), "x2'", 1),
    ("h19", 19, _minus((14,)), "x2' x1' x2'", 2),
    ("f20", 20, _minus(TRIPLES[2]), "x2'", 1),
    ("f21", 21, _minus(QUARTERS[3]), "x2'", 1),
    ("h21", 21, _minus((16,)), "x2 x1' x2'", 1),
    ("u21", 21, _minus((20,)), "x2 x1 x2'", 1),
    ("f22", 22, _minus(TRIPLES[3]), "x1", 1),
    ("f23", 23, QUARTERS[4], "x1' x2 x1", 3),
    ("g23", 23, _minus(TRIPLES[4]), "x1", 1),
    ("h23", 23, _minus((7,)), "x1 x2 x1", 2),
    ("f24", 24, _minus(TRIPLES[7]), "x1' x2 x1", 2),
    ("g24", 24, _minus((14,)), "x1", 1),
    ("f25", 25, _minus(TRIPLES[8]), "x1' x2' x1", 2),
    ("g25", 25, _minus((21,)), "x1", 1),
    ("f26", 26, _minus(TRIPLES[5]), "x1", 1),
    ("f27", 27, QUARTERS[4], "x1' x2' x1", 3),
    ("g27", 27, _minus(TRIPLES[6]), "x1", 1),
    ("h27", 27, _minus((7,)), "x1 x2' x1", 2),
    ("f28", 28, _minus(QUARTERS[4]), "x1", 1),
    ("h28", 28, _minus((22,)), "x1' x2' x1", 1),
    ("u28", 28, _minus((26,)), "x1' x2 x1", 1),
)

CONJ_INDICES = (1, 5, 9, 13, 15, 19, 23, 27)
ABA_INDICES = (2, 6, 8, 12, 16, 20, 22, 26)
ABB_INDICES = (3, 4, 10, 11, 17, 18, 24, 25)
SQUARE_INDICES = (7, 14, 21, 28)

# Index permutations induced by the three reference letter substitutions:
# negate the second generator, negate the first, and the cross map
# x1 -> x2', x2 -> x1'.  perm[i-1] is the image of index i.
PERMUTATIONS = (
    (5, 6, 4, 3, 1, 2, 7, 16, 15, 17, 18, 20, 19, 21,
     9, 8, 10, 11, 13, 12, 14, 26, 27, 25, 24, 22, 23, 28),
    (23, 22, 24, 25, 27, 26, 28, 12, 13, 11, 10, 8, 9, 14,
     19, 20, 18, 17, 15, 16, 21, 2, 1, 3, 4, 6, 5, 7),
    (13, 12, 11, 10, 9, 8, 14, 6, 5, 4, 3, 2, 1, 7,
     27, 26, 25, 24, 23, 22, 28, 20, 19, 18, 17, 16, 15, 21),
)

# Printed 4-decimal reference values for the rank-2 solution.
LEVEL_POLY = (21, -496, -654, 24, 81)
LEVEL_POLY_RANK3 = (115, -13786, -9300, 1610, 625)
PRINTED_ROOTS = (-1.1835, -0.3968, 0.3302, 24.8692)
PRINTED_LEVEL = 24.8692
PRINTED_HALF_LOG = 1.6068
PRINTED_TRACE_BOUND = 1.5937
PRINTED_CLASS_VALUES = {"conj": 0.1076, "aba": 0.0053, "abb": 0.0053, "square": 0.0132}
PRINTED_NONDOMINANT = {
    "g_square_numer": 2.4822,
    "g_conj_denom": 1.1131,
    "hu_square_denom": 0.4028,
    "h_conj_denom": 0.1111,
}
PRINTED_CONVEX_INTERVAL = (0.0134, 0.1670)
