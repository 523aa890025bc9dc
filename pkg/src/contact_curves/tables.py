"""Known counts of rational contact curves, keyed by (n, d) then conditions."""

KNOWN_COUNTS: dict[tuple[int, int], dict[tuple[int, ...], int]] = {
    # P^3
    (1, 1): {(3, 0): 2, (1, 1): 1},
    (1, 2): {(5, 0): 40, (3, 1): 8, (1, 2): 2},
    (1, 3): {(7, 0): 4160, (5, 1): 512, (3, 2): 72, (1, 3): 12},
    # P^5
    (2, 1): {
        (7, 0, 0, 0): 14,
        (5, 1, 0, 0): 9,
        (4, 0, 1, 0): 4,
        (3, 2, 0, 0): 6,
        (2, 1, 1, 0): 3,
        (1, 3, 0, 0): 4,
        (1, 1, 0, 1): 1,
        (1, 0, 2, 0): 2,
        (0, 2, 1, 0): 2,
        (0, 0, 1, 1): 1,
    },
    (2, 2): {
        (11, 0, 0, 0): 103876,
        (9, 1, 0, 0): 30864,
        (8, 0, 1, 0): 5798,
        (7, 2, 0, 0): 9420,
        (7, 0, 0, 1): 544,
        (6, 1, 1, 0): 1898,
        (5, 3, 0, 0): 2924,
        (5, 1, 0, 1): 202,
        (5, 0, 2, 0): 436,
        (4, 2, 1, 0): 624,
        (4, 0, 1, 1): 541,
        (3, 4, 0, 0): 912,
        (3, 2, 0, 1): 76,
        (3, 1, 2, 0): 152,
        (3, 0, 0, 2): 8,
        (2, 3, 1, 0): 200,
        (2, 1, 1, 1): 22,
        (2, 0, 3, 0): 44,
        (1, 5, 0, 0): 288,
        (1, 3, 0, 1): 28,
        (1, 2, 2, 0): 48,
        (1, 1, 0, 2): 4,
        (1, 0, 2, 1): 8,
        (0, 4, 1, 0): 64,
        (0, 2, 1, 1): 8,
        (0, 1, 3, 0): 12,
        (0, 0, 1, 2): 2,
    },
}
