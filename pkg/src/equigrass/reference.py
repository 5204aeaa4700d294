"""Reference values the verification suites compare against.

Charts are stored as {(p, q): count}; boxes not listed are blank (zero)
within the printed window p <= *_WINDOW, q <= *_QWINDOW.
"""

from __future__ import annotations

# Inv_4, window p <= 14, q <= 8
INV4_CHART = {
    (0, 0): 1, (1, 1): 1, (2, 1): 1, (2, 2): 1, (3, 2): 2, (3, 3): 1,
    (4, 2): 2, (4, 3): 2, (4, 4): 1, (5, 3): 4, (5, 4): 2,
    (6, 3): 3, (6, 4): 5, (6, 5): 1, (7, 4): 7, (7, 5): 4,
    (8, 4): 5, (8, 5): 8, (8, 6): 2, (9, 5): 11, (9, 6): 7,
    (10, 5): 6, (10, 6): 14, (10, 7): 3, (11, 6): 16, (11, 7): 11,
    (12, 6): 9, (12, 7): 20, (12, 8): 5, (13, 7): 23, (13, 8): 16,
    (14, 7): 11, (14, 8): 30,
}
INV4_WINDOW = 14
INV4_QWINDOW = 8

# Inv_5, window p <= 21, q <= 13
INV5_CHART = {
    (0, 0): 1, (1, 1): 1, (2, 1): 1, (2, 2): 1, (3, 2): 2, (3, 3): 1,
    (4, 2): 2, (4, 3): 2, (4, 4): 1, (5, 3): 4, (5, 4): 2, (5, 5): 1,
    (6, 3): 3, (6, 4): 5, (6, 5): 2, (7, 4): 7, (7, 5): 5, (7, 6): 1,
    (8, 4): 5, (8, 5): 9, (8, 6): 4, (9, 5): 12, (9, 6): 9, (9, 7): 2,
    (10, 5): 7, (10, 6): 16, (10, 7): 7, (11, 6): 18, (11, 7): 16, (11, 8): 3,
    (12, 6): 10, (12, 7): 25, (12, 8): 12, (13, 7): 27, (13, 8): 25, (13, 9): 5,
    (14, 7): 13, (14, 8): 39, (14, 9): 18, (15, 8): 38, (15, 9): 39, (15, 10): 7,
    (16, 8): 18, (16, 9): 56, (16, 10): 27, (17, 9): 53, (17, 10): 56, (17, 11): 10,
    (18, 9): 23, (18, 10): 80, (18, 11): 38, (19, 10): 71, (19, 11): 80, (19, 12): 13,
    (20, 10): 30, (20, 11): 109, (20, 12): 53, (21, 11): 94, (21, 12): 109, (21, 13): 18,
}
INV5_WINDOW = 21
INV5_QWINDOW = 13

# Schubert cells of Gr_5, window p <= 21, q <= 18
GR5_CELLS_CHART = {
    (0, 0): 1, (1, 1): 1, (2, 1): 2, (3, 2): 2, (3, 3): 1, (4, 2): 5, (5, 3): 5,
    (5, 4): 2, (6, 3): 9, (6, 6): 1, (7, 4): 9, (7, 5): 4, (8, 4): 16, (8, 7): 2,
    (9, 5): 16, (9, 6): 7, (10, 5): 25, (10, 8): 4, (10, 10): 1, (11, 6): 25,
    (11, 7): 12, (12, 6): 39, (12, 9): 7, (12, 11): 1, (13, 7): 39, (13, 8): 18,
    (14, 7): 56, (14, 10): 12, (14, 12): 2, (15, 8): 56, (15, 9): 27, (15, 15): 1,
    (16, 8): 80, (16, 11): 18, (16, 13): 3, (17, 9): 80, (17, 10): 38, (17, 16): 1,
    (18, 9): 109, (18, 12): 27, (18, 14): 5, (19, 10): 109, (19, 11): 53,
    (19, 17): 2, (20, 10): 147, (20, 13): 38, (20, 15): 7, (21, 11): 147,
    (21, 12): 71, (21, 18): 3,
}
GR5_CELLS_WINDOW = 21
GR5_CELLS_QWINDOW = 18

# the 15 cells of Gr_2(U^6), as a bidegree multiset
GR2_U6_CELLS = {
    (0, 0): 1, (1, 1): 1, (2, 1): 2, (3, 2): 1, (3, 3): 1, (4, 2): 3, (5, 3): 1,
    (5, 4): 1, (6, 3): 2, (7, 5): 1, (8, 4): 1,
}

# cells of Gr_1, dimension <= 7
GR1_CELLS = [(0, 0), (1, 1), (2, 1), (3, 2), (4, 2), (5, 3), (6, 3), (7, 4)]

# ranks along the 2-line of Inv_4
INV4_TWO_LINE = [1, 2, 5, 8, 14, 20, 30, 40, 55]

# Inv_4 indecomposables by name
INV4_INDECOMPOSABLES = ["c_1", "c_2", "c_3", "c_4", "w_1", "w_1^(1)", "w_1^(2)",
                        "w_1^(3)", "w_2", "w_2^(1)", "w_4"]
