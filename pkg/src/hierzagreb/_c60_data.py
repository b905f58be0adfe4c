"""Bundled truncated icosahedron (C60 buckminsterfullerene) adjacency.

Vertices are the darts of an icosahedron in sorted order; each pentagon
of the truncation surrounds one icosahedron vertex.
"""

C60_EDGES = (
    (0, 1), (0, 4), (0, 5), (1, 3), (1, 10), (2, 3), (2, 4), (2, 25),
    (3, 30), (4, 35), (5, 6), (5, 8), (6, 9), (6, 11), (7, 8), (7, 9),
    (7, 15), (8, 36), (9, 40), (10, 11), (10, 13), (11, 14), (12, 13), (12, 14),
    (12, 20), (13, 31), (14, 41), (15, 16), (15, 17), (16, 19), (16, 37), (17, 18),
    (17, 42), (18, 19), (18, 45), (19, 55), (20, 21), (20, 22), (21, 24), (21, 32),
    (22, 23), (22, 43), (23, 24), (23, 46), (24, 50), (25, 26), (25, 27), (26, 28),
    (26, 33), (27, 29), (27, 38), (28, 29), (28, 51), (29, 56), (30, 31), (30, 33),
    (31, 32), (32, 34), (33, 34), (34, 52), (35, 36), (35, 38), (36, 37), (37, 39),
    (38, 39), (39, 57), (40, 41), (40, 42), (41, 43), (42, 44), (43, 44), (44, 47),
    (45, 47), (45, 49), (46, 47), (46, 48), (48, 49), (48, 53), (49, 58), (50, 52),
    (50, 53), (51, 52), (51, 54), (53, 54), (54, 59), (55, 57), (55, 58), (56, 57),
    (56, 59), (58, 59),
)
