"""Published counts of rational knots by crossing number n = 3..26.

Rows (mirror images identified unless noted):
    f       fibered knots
    fa      fibered achiral knots (even n only)
    u       unknotting number one
    au      achiral with unknotting number one (even n only)
    fu      fibered with unknotting number one
    p       positive knots (odd n only)
    sigma0  signature zero, both knots of a chiral pair counted
"""

N_MIN, N_MAX = 3, 26


def _row(values, start=3, step=1) -> dict:
    return {start + step * i: v for i, v in enumerate(values)}


TABLE1 = {
    "f": _row([1, 1, 1, 2, 3, 4, 7, 10, 16, 25, 40, 62, 101, 159, 257, 410, 663,
               1062, 1719, 2764, 4472, 7209, 11664, 18828]),
    "fa": _row([1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144], start=4, step=2),
    "u": _row([1, 1, 1, 3, 3, 6, 7, 15, 15, 30, 31, 63, 63, 126, 127, 255, 255, 510, 511,
               1023, 1023, 2046, 2047, 4095]),
    "au": _row([1, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1], start=4, step=2),
    "fu": _row([1, 1, 0, 2, 2, 2, 2, 4, 4, 6, 6, 10, 10, 16, 16, 26, 26, 42, 42, 68, 68,
                110, 110, 178]),
    "p": _row([1, 2, 5, 12, 30, 76, 195, 504, 1309, 3410, 8900, 23256], start=3, step=2),
    "sigma0": _row([0, 1, 0, 3, 2, 9, 6, 29, 30, 99, 112, 351, 450, 1275, 1734, 4707, 6762,
                    17577, 26208, 66197, 101862, 250953, 395804, 956385]),
}
