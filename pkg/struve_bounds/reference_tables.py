# struve_bounds/reference_tables.py
"""
Published relative-error tables and crossover points, kept as regression data.

Each matrix row follows nu_rows, each column follows x_cols; math.inf marks
an infinite limit.
"""
import math

INF = math.inf

RATIO_NU_ROWS = [0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0]
RATIO_X_COLS = [0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0, 15.0, 25.0]
RATIO_X_COLS_WIDE = RATIO_X_COLS + [50.0]
POINTWISE_NU_ROWS = [0.0, 1.0, 2.5, 5.0, 10.0]
POINTWISE_X_COLS = [0.5, 1.0, 2.5, 5.0, 10.0, 15.0, 25.0, 50.0, 100.0, 200.0]

REFERENCE_TABLES = {
    1: {
        "caption": "(I_{nu-1}/I_nu + 2 b_nu/x)^-1 against L_nu/L_{nu-1}",
        "nu_rows": RATIO_NU_ROWS,
        "x_cols": RATIO_X_COLS,
        "values": [
            [0.0000, 0.0355, 0.0947, 0.1073, 0.0196, 0.0022, 0.0002, 0.0000, 0.0000],
            [0.0000, 0.0097, 0.0312, 0.0623, 0.0200, 0.0030, 0.0003, 0.0000, 0.0000],
            [0.0000, 0.0040, 0.0138, 0.0377, 0.0186, 0.0037, 0.0005, 0.0000, 0.0000],
            [0.0000, 0.0007, 0.0027, 0.0112, 0.0122, 0.0047, 0.0011, 0.0000, 0.0000],
            [0.0000, 0.0001, 0.0006, 0.0028, 0.0054, 0.0039, 0.0016, 0.0001, 0.0000],
            [0.0000, 0.0000, 0.0002, 0.0011, 0.0026, 0.0026, 0.0016, 0.0002, 0.0000],
            [0.0000, 0.0000, 0.0001, 0.0005, 0.0014, 0.0018, 0.0013, 0.0003, 0.0000],
        ],
    },
    2: {
        "caption": "I_nu/I_{nu-1} against L_nu/L_{nu-1}",
        "nu_rows": RATIO_NU_ROWS,
        "x_cols": RATIO_X_COLS,
        "values": [
            [INF, 7.7021, 1.7232, 0.1394, 0.0061, 0.0004, 0.0000, 0.0000, 0.0000],
            [1.0000, 0.8868, 0.6481, 0.1631, 0.0135, 0.0011, 0.0001, 0.0000, 0.0000],
            [0.5000, 0.4711, 0.3981, 0.1587, 0.0206, 0.0022, 0.0002, 0.0000, 0.0000],
            [0.2000, 0.1957, 0.1833, 0.1200, 0.0344, 0.0066, 0.0010, 0.0000, 0.0000],
            [0.1000, 0.0990, 0.0961, 0.0780, 0.0387, 0.0132, 0.0034, 0.0001, 0.0000],
            [0.0667, 0.0662, 0.0650, 0.0568, 0.0354, 0.0165, 0.0059, 0.0004, 0.0000],
            [0.0500, 0.0498, 0.0491, 0.0445, 0.0313, 0.0175, 0.0078, 0.0009, 0.0000],
        ],
    },
    3: {
        "caption": "square-root lower bound against L_nu/L_{nu-1}",
        "nu_rows": RATIO_NU_ROWS,
        "x_cols": RATIO_X_COLS_WIDE,
        "values": [
            [0.0000, 0.1057, 0.1973, 0.1545, 0.0319, 0.0073, 0.0030, 0.0012, 0.0004, 0.0001],
            [0.0000, 0.0267, 0.0732, 0.1073, 0.0383, 0.0117, 0.0053, 0.0022, 0.0008, 0.0002],
            [0.0000, 0.0102, 0.0329, 0.0725, 0.0390, 0.0147, 0.0071, 0.0031, 0.0011, 0.0003],
            [0.0000, 0.0017, 0.0063, 0.0243, 0.0287, 0.0173, 0.0100, 0.0049, 0.0020, 0.0006],
            [0.0000, 0.0003, 0.0012, 0.0062, 0.0132, 0.0128, 0.0098, 0.0059, 0.0029, 0.0009],
            [0.0000, 0.0001, 0.0004, 0.0024, 0.0063, 0.0081, 0.0076, 0.0056, 0.0033, 0.0012],
            [0.0000, 0.0000, 0.0002, 0.0011, 0.0034, 0.0051, 0.0055, 0.0048, 0.0033, 0.0014],
        ],
    },
    4: {
        "caption": "square-root upper bound against L_nu/L_{nu-1}",
        "nu_rows": RATIO_NU_ROWS[1:],
        "x_cols": RATIO_X_COLS_WIDE,
        "values": [
            [INF, 3.0830, 1.1640, 0.1789, 0.0136, 0.0011, 0.0001, 0.0000, 0.0000, 0.0000],
            [2.0000, 1.5128, 0.9357, 0.2417, 0.0338, 0.0074, 0.0030, 0.0012, 0.0004, 0.0001],
            [0.5000, 0.4824, 0.4360, 0.2524, 0.0777, 0.0259, 0.0117, 0.0047, 0.0017, 0.0004],
            [0.2222, 0.2199, 0.2131, 0.1736, 0.0950, 0.0460, 0.0239, 0.0099, 0.0036, 0.0009],
            [0.1429, 0.1421, 0.1397, 0.1247, 0.0864, 0.0523, 0.0310, 0.0139, 0.0054, 0.0014],
            [0.1053, 0.1049, 0.1037, 0.0962, 0.0747, 0.0516, 0.0341, 0.0166, 0.0069, 0.0019],
        ],
    },
    5: {
        "caption": "explicit pointwise upper bound against L_nu",
        "nu_rows": POINTWISE_NU_ROWS,
        "x_cols": POINTWISE_X_COLS,
        "values": [
            [0.0743, 0.2403, 0.8053, 1.3722, 1.7107, 1.7994, 1.8540, 1.8839, 1.8951, 1.9000],
            [0.0163, 0.0618, 0.2928, 0.6854, 1.0716, 1.2020, 1.2914, 1.3462, 1.3690, 1.3792],
            [0.0052, 0.0204, 0.1151, 0.3523, 0.7301, 0.9026, 1.0340, 1.1214, 1.1602, 1.1782],
            [0.0017, 0.0070, 0.0431, 0.1612, 0.4601, 0.6600, 0.8388, 0.9706, 1.0333, 1.0635],
            [0.0005, 0.0021, 0.0135, 0.0582, 0.2302, 0.4133, 0.6309, 0.8216, 0.9238, 0.9762],
        ],
    },
    6: {
        "caption": "Bessel-based elementary upper bound against L_nu",
        "nu_rows": POINTWISE_NU_ROWS,
        "x_cols": POINTWISE_X_COLS,
        "values": [
            [5.3417, 3.2145, 1.1605, 0.6502, 0.4549, 0.3931, 0.3445, 0.3086, 0.2908, 0.2820],
            [1.7475, 1.5473, 1.0183, 0.7830, 0.7437, 0.7328, 0.7207, 0.7098, 0.7039, 0.7008],
            [0.8072, 0.7908, 0.7309, 0.7459, 0.9201, 1.0127, 1.0853, 1.1374, 1.1627, 1.1751],
            [0.4167, 0.4215, 0.4563, 0.5838, 0.9410, 1.1928, 1.4306, 1.6218, 1.7208, 1.7712],
            [0.2102, 0.2151, 0.2491, 0.3664, 0.7552, 1.1596, 1.6780, 2.1815, 2.4709, 2.6250],
        ],
    },
}

# printed cells that the series evaluation does not reproduce to 2e-4;
# (table, nu, x) -> (printed, reproduced)
REFERENCE_CELL_CORRECTIONS = {
    (3, 0.0, 2.5): (0.1545, 0.1548),
    (5, 0.0, 200.0): (1.9000, 1.8997),
}

# (bound a, bound b, nu, expected crossover, tolerance)
REFERENCE_CROSSOVERS = [
    ("eq20_upper", "eq18_upper", 0.625, 4.21, 0.02),
    ("eq20_upper", "eq18_upper", 0.75, 3.26, 0.02),
    ("eq20_upper", "eq18_upper", 0.875, 2.66, 0.02),
    ("eq20_upper", "eq18_upper", 1.0, 2.18, 0.02),
    ("eq20_upper", "eq18_upper", 1.125, 1.76, 0.02),
    ("eq20_upper", "eq18_upper", 1.25, 1.35, 0.02),
    ("eq20_upper", "eq18_upper", 1.375, 0.91, 0.02),
    # printed as 5.34; the two bounds meet once, at 4.907
    ("eq24_upper", "eq18_upper", 1.0, 4.907, 0.02),
    ("eq24_upper", "eq18_upper", 2.5, 8.42, 0.02),
    ("eq24_upper", "eq18_upper", 5.0, 14.9, 0.1),
]

REFERENCE_A_NU_CROSSOVER = (2.521, 0.005)

# (bound a, bound b, nu) -> (printed, reproduced)
REFERENCE_CROSSOVER_CORRECTIONS = {
    ("eq24_upper", "eq18_upper", 1.0): (5.34, 4.907),
}
