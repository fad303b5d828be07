"""Known-good F4 tables transcribed from an independent reference
implementation of the same classification.

Indices are 1-based positions in the ascending total order on the 24
positive roots.  SUMS[i][j] = k records root_i + root_j = root_k (stored
for i > j only).  BRACKETS[i][j] holds the reference bracket coefficient
for the ordered pair (root_i, root_j), i > j; the reverse order is its
negative.  Only the magnitudes are convention-independent.
"""

SUMS = {
    23: {10: 24},
    22: {4: 23, 11: 24},
    21: {2: 22, 5: 23, 12: 24},
    20: {1: 21, 3: 22, 6: 23, 13: 24},
    19: {2: 21, 7: 23, 14: 24},
    18: {1: 19, 2: 20, 3: 21, 8: 23, 15: 24},
    17: {1: 18, 3: 20, 9: 23, 16: 24},
    16: {4: 19, 5: 21, 7: 22},
    15: {1: 16, 4: 18, 5: 20, 6: 21, 8: 22},
    14: {1: 15, 4: 17, 6: 20, 9: 22},
    13: {2: 15, 3: 16, 5: 18, 6: 19, 7: 20, 8: 21},
    12: {1: 13, 2: 14, 3: 15, 5: 17, 6: 18, 8: 20, 9: 21},
    11: {2: 12, 3: 13, 7: 17, 8: 18, 9: 19},
    10: {4: 11, 5: 12, 6: 13, 7: 14, 8: 15, 9: 16},
    8: {1: 9},
    7: {1: 8},
    6: {2: 8, 3: 9},
    5: {1: 6, 2: 7, 3: 8},
    4: {2: 5, 3: 6},
    2: {1: 3},
}

BRACKETS = {
    23: {10: -1},
    22: {4: -1, 11: -1},
    21: {2: -2, 5: -2, 12: -2},
    20: {1: -1, 3: -2, 6: -2, 13: -2},
    19: {2: -1, 7: 1, 14: 1},
    18: {1: -2, 2: -1, 3: -1, 8: 2, 15: 2},
    17: {1: 1, 3: 1, 9: 1, 16: 1},
    16: {4: -1, 5: 1, 7: 1},
    15: {1: -2, 4: -1, 5: 1, 6: 1, 8: 2},
    14: {1: 1, 4: -1, 6: -1, 9: 1},
    13: {2: -1, 3: 2, 5: -1, 6: 2, 7: -1, 8: 1},
    12: {1: 1, 2: -2, 3: -1, 5: -2, 6: -1, 8: 1, 9: 1},
    11: {2: 1, 3: 1, 7: -1, 8: -1, 9: -1},
    10: {4: 1, 5: 1, 6: 1, 7: 1, 8: 1, 9: 1},
    8: {1: -2},
    7: {1: 1},
    6: {2: -1, 3: 2},
    5: {1: 1, 2: -2, 3: -1},
    4: {2: 1, 3: 1},
    2: {1: 1},
}
