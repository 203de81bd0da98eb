"""Bundled transcription of the previously published classification
listings that the sweeps reproduce.

The tuples are copied verbatim from the printed tables, typos included;
``quadlat.sweep`` recomputes every row from the defining congruences and
reports any cell where this transcription disagrees.  The formulas win.
"""

# (k, m, a, b): all shift-k quasigroups x*y = ax + by (mod m) with k < 40
# and m <= 1200 (one printed row has m = 1297, beyond its stated bound).
REFERENCE_SCAN_ROWS = (
    (2, 5, 2, 4),
    (3, 5, 4, 2),
    (4, 17, 7, 11),
    (5, 13, 11, 7),
    (6, 37, 16, 22),
    (7, 25, 22, 4),
    (8, 13, 3, 11),
    (8, 65, 29, 37),
    (9, 41, 37, 5),
    (10, 101, 46, 56),
    (11, 61, 56, 6),
    (12, 29, 9, 21),
    (12, 145, 67, 79),
    (13, 17, 11, 7),
    (13, 85, 79, 7),
    (14, 197, 92, 106),
    (15, 113, 106, 8),
    (16, 257, 121, 137),
    (17, 29, 21, 9),
    (17, 145, 137, 9),
    (18, 25, 4, 22),
    (18, 65, 24, 42),
    (18, 325, 154, 172),
    (19, 181, 172, 10),
    (20, 401, 191, 211),
    (21, 221, 211, 11),
    (22, 97, 38, 60),
    (22, 485, 232, 254),
    (23, 53, 42, 12),
    (23, 265, 254, 12),
    (24, 577, 277, 301),
    (25, 313, 301, 13),
    (26, 677, 326, 352),
    (27, 73, 60, 14),
    (27, 365, 352, 14),
    (28, 157, 65, 93),
    (28, 785, 379, 407),
    (29, 421, 407, 15),
    (30, 53, 12, 42),
    (30, 901, 436, 466),
    (31, 37, 22, 16),
    (31, 481, 466, 16),
    (32, 41, 5, 37),
    (32, 205, 87, 119),
    (32, 1025, 497, 529),
    (33, 109, 93, 17),
    (33, 545, 529, 17),
    (34, 89, 28, 62),
    (34, 1157, 562, 596),
    (35, 613, 596, 18),
    (36, 1297, 631, 667),
    (37, 137, 119, 19),
    (37, 685, 667, 198),
    (38, 85, 24, 62),
    (38, 289, 126, 164),
    (39, 761, 742, 20),
)

# (m, a, b, k): representatives with a < b for m < 500; duals omitted.
REFERENCE_CLASSIFY_ROWS = (
    (5, 2, 4, 2),
    (13, 3, 11, 8),
    (17, 7, 11, 4),
    (25, 4, 22, 18),
    (29, 9, 21, 12),
    (37, 16, 22, 6),
    (41, 5, 37, 32),
    (53, 12, 42, 30),
    (61, 6, 56, 50),
    (65, 24, 42, 18),
    (65, 29, 37, 8),
    (73, 14, 60, 46),
    (85, 7, 79, 72),
    (85, 24, 62, 38),
    (89, 28, 62, 34),
    (97, 38, 60, 22),
    (101, 46, 56, 10),
    (109, 17, 93, 76),
    (113, 8, 106, 98),
    (125, 29, 97, 68),
    (137, 19, 119, 100),
    (145, 9, 137, 128),
    (145, 67, 79, 12),
    (149, 53, 97, 44),
    (157, 65, 93, 28),
    (169, 50, 120, 70),
    (173, 47, 127, 80),
    (181, 10, 172, 162),
    (185, 22, 164, 142),
    (185, 59, 127, 68),
    (193, 41, 153, 112),
    (197, 92, 106, 14),
    (205, 37, 169, 132),
    (205, 87, 119, 32),
    (221, 11, 211, 200),
    (221, 24, 198, 174),
    (229, 54, 176, 122),
    (233, 45, 189, 144),
    (241, 89, 153, 64),
    (257, 121, 137, 16),
    (265, 12, 254, 242),
    (265, 42, 224, 182),
    (269, 94, 176, 82),
    (277, 109, 169, 60),
    (281, 27, 255, 228),
    (289, 126, 164, 38),
    (293, 78, 216, 138),
    (305, 67, 239, 172),
    (305, 117, 189, 72),
    (313, 13, 301, 288),
    (317, 102, 216, 114),
    (325, 29, 297, 268),
    (325, 154, 172, 18),
    (337, 95, 243, 148),
    (349, 107, 243, 136),
    (353, 156, 198, 42),
    (365, 14, 352, 338),
    (365, 87, 279, 192),
    (373, 135, 239, 104),
    (377, 50, 328, 278),
    (377, 154, 224, 70),
    (389, 58, 332, 274),
    (397, 32, 366, 334),
    (401, 191, 211, 20),
    (409, 72, 338, 266),
    (421, 15, 407, 392),
    (425, 79, 347, 268),
    (425, 147, 279, 132),
    (433, 90, 344, 254),
    (445, 62, 384, 322),
    (445, 117, 329, 212),
    (449, 34, 416, 382),
    (457, 55, 403, 348),
    (461, 207, 255, 48),
    (481, 16, 466, 450),
    (481, 133, 349, 216),
    (485, 157, 329, 172),
    (485, 232, 254, 22),
    (493, 79, 415, 336),
    (493, 96, 398, 302),
)
