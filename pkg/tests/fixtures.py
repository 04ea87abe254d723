"""Golden values transcribed from the published tables.

Polynomials are given as descending coefficient lists (leading first).
"""

from fractions import Fraction as F

ATKIN_A = {
    (1, 0): [1],
    (2, 0): [1, -824],
    (0, 2): [1],
    (1, 2): [1, -720],
    (3, 2): [1, F(-12576, 5), 1526958, -107765856],
    (0, 6): [1],
    (1, 6): [1, -1266],
    (2, 6): [1, -2115, 870630],
    (4, 6): [1, F(-7671, 2), 4871313, -2260803660, 273189722310],
    (9, 6): [
        1, F(-24454, 3), F(474979296, 17), F(-888804457205, 17), 58002865348421,
        -38759471954111394, 15135088185868167792, -3173598010686486090312,
        297473555337690122052390, -7840346480159903987708940,
    ],
    (0, 8): [1],
    (1, 8): [1, -330],
    (2, 8): [1, -1215, 129030],
    (5, 8): [1, F(-19098, 5), F(25015408, 5), F(-12959037322, 5), 441761976414, -9018997829292],
    (6, 8): [1, -4685, F(89349390, 11), -6372443376, 2195718854056, -261120476348550, 3783879543834780],
}

ATKIN_B = {
    (1, 0): [1, -1008],
    (2, 0): [1, -1832, 497952],
    (0, 2): [],
    (1, 2): [1],
    (3, 2): [1, F(-8976, 5), 627534],
    (0, 6): [1],
    (1, 6): [1, -546],
    (2, 6): [1, -1395, 259350],
    (4, 6): [1, F(-6231, 2), 3021273, -948582060, 53723885670],
    (9, 6): [
        1, F(-22294, 3), F(390702816, 17), F(-651013930805, 17), 37180279576181,
        -21228003877921074, 6835398004395374832, -1114698418843177975752,
        72322444486635699257190, -919318930586739576036780,
    ],
    (0, 8): [1],
    (1, 8): [1, -1338],
    (2, 8): [1, -2223, 1021110],
    (5, 8): [1, F(-24138, 5), F(42602992, 5), F(-33192286666, 5), F(10734540754806, 5), -202399435400844],
    (6, 8): [1, -5693, F(137637630, 11), F(-146033508816, 11), 6911247661864, -1568906774156358, 105994437115386300],
}

_P30 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113]


def _fac(*pairs):
    return list(pairs)


# (m, a) -> (clearing multiple printed on the left, factorization of that multiple times N)
NORMALIZING_FACTORIZATIONS = {
    (1, 0): (1, _fac((2, 5), (3, 3), (5, 1), (7, 1), (11, 1))),
    (2, 0): (1, _fac((2, 6), (3, 3), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1))),
    (0, 2): (1, []),
    (1, 2): (1, _fac((2, 5), (3, 3), (5, 1), (7, 1), (13, 1))),
    (3, 2): (5, _fac((2, 7), (3, 4), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1), (31, 1), (37, 1))),
    (0, 6): (1, _fac((2, 4), (3, 2), (5, 1))),
    (1, 6): (1, _fac((2, 6), (3, 3), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1))),
    (2, 6): (1, _fac((2, 6), (3, 4), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1))),
    (4, 6): (2, _fac((2, 7), (3, 4), (5, 2), (7, 2), *[(p, 1) for p in _P30[4:16]])),
    (9, 6): (51, _fac((2, 8), (3, 5), (5, 2), (7, 2), *[(p, 1) for p in _P30[4:]])),
    (0, 8): (1, _fac((2, 4), (3, 2), (7, 1))),
    (1, 8): (1, _fac((2, 6), (3, 3), (5, 1), (7, 1), (11, 1), (13, 1), (19, 1))),
    (2, 8): (1, _fac((2, 6), (3, 4), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (31, 1))),
    (5, 8): (5, _fac((2, 8), (3, 4), (5, 2), (7, 2), *[(p, 1) for p in _P30[4:19]])),
    (6, 8): (11, _fac((2, 8), (3, 4), (5, 2), (7, 2), *[(p, 1) for p in _P30[4:22]])),
}

CLEARING = {(3, 2): 5, (4, 6): 2, (9, 6): 51, (5, 8): 5, (6, 8): 11}

FIRST_COEFFICIENTS = {
    2: [-24, -72, -96, -168, -144],
    6: [18, 84, 292, 630, 1512],
    8: [66, 732, 4228, 15630, 48312],
    10: [258, 6564, 66052, 390630, 1693512],
    12: [56, 1002, 9296, 57708, 269040],
    14: [128, 4050, 58880, 525300, 3338496],
    16: [296, 16602, 377456, 4846908, 41943120],
    18: [99, 3510, 64944, 764874, 6478758],
    20: [183, 10134, 269832, 4326546, 47862918],
    22: [339, 29430, 1127904, 24615834, 355679478],
    24: [144, 7944, 235840, 4451130, 59405952],
    28: [384, 44664, 2460160, 79196970, 1693028352],
    30: [190, 14460, 608570, 16463120, 314562708],
    32: [286, 29988, 1652834, 56608952, 1335336084],
    34: [430, 62220, 4496090, 195047840, 5680752948],
    38: [336, 43587, 3065648, 136437750, 4219436160],
    54: [378, 62532, 6109740, 401161950, 19083824856],
    58: [618, 155412, 21940620, 2005126350, 128986599096],
    68: [581, 147042, 21956168, 2203554570, 160242315903],
    80: [678, 204756, 37135249, 4592036697, 416237464122],
    114: [855, 341886, 85507600, 15092041050, 2010698806050],
    118: [1095, 549246, 169413760, 36358101930, 5819797557810],
}

# label -> (kind, index, first five coefficients); kind "P", "Q", "sP" or "sQ"
# ("s" marks multiplication by (1 - 1728 t)^(-1/2))
PQ_LEADING = {
    ("P", 0): [1, 120, 83160, 81681600, 93699005400],
    ("P", 2): [1, 944, 1054170, 1297994880, 1700941165560],
    ("P", 4): [1, 1800, 2783760, 4183182720, 6274984354650],
    ("sP", 1): [1, 1386, 2042040, 3123300180, 4891088081880],
    ("sP", 3): [1, 2235, 4129650, 7217526960, 12344776903800],
    ("sP", 5): [1, 3094, 6975504, 13953546090, 26319290241530],
    ("sP", 9): [1, 4818, 14913288, 37889152860, 86182007602320],
    ("sP", 19): [1, 9135, 47828730, 188818914000, 625280243661000],
    ("sQ", 0): [1, 840, 1081080, 1551950400, 2342475135000],
    ("sQ", 2): [1, 1760, 2877930, 4667789280, 7590443164920],
    ("sQ", 6): [1, 3504, 8597259, 18287498240, 36144224452050],
    ("Q", 1): [1, 450, 394680, 429557700, 522037315800],
    ("Q", 3): [1, 1335, 1757970, 2386445040, 3336565609080],
    ("Q", 5): [1, 2206, 3863952, 6319180098, 10079991804410],
    ("Q", 11): [1, 4805, 14658030, 36441948000, 80761720666320],
    ("Q", 13): [1, 5670, 19748832, 54741797937, 132878837538099],
}

P9 = (F(1, 1303566339087601789200), [301163357, 8876894690, 97346883895, 470641033450, 846250112568])
P19 = (
    F(1, 7586413113700225869154849509970478998385924877600),
    [
        116055861444395385601913, 15530138946748752922984725, 920111315629981006299003510,
        31676880792353832401375777850, 698329420677409164956468289249, 10222801871323855615909703388405,
        99369498641304011775924341700640, 618440343527755839046417085216700,
        2236089229125717720580535903583888, 3578581860690243122001381266421120,
    ],
)
Q11 = (
    F(1, 15716643102160534111758180),
    [13252649705176, 665298552506263, 13797873461407945, 151287554887490515,
     924734694751472239, 2986992686186751022, 3982438425105968520],
)
Q13 = (
    F(1, 32176447673406729078990845541300),
    [74198322973160504, 5124808625350611463, 150642927750066254963, 2442571823969345600665,
     23590276457107577780801, 135688184492311416306712, 430315970858396108150652, 580367220881648001413040],
)


def horner(poly, r):
    scale, coeffs = poly
    acc = 0
    for c in coeffs:
        acc = acc * r + c
    return scale * acc


def _f(n):
    from math import factorial

    return factorial(n)


# closed forms for the r-th coefficient, keyed like PQ_LEADING
def pq_closed_form(key, r):
    f = _f
    kind, n = key
    table = {
        ("P", 0): lambda: F(f(6 * r), f(3 * r) * f(r) ** 3),
        ("P", 2): lambda: F((41 * r + 77) * f(6 * r + 6), 2310 * f(3 * r + 3) * f(r) * f(r + 2) ** 2),
        ("P", 4): lambda: F((17377 * r * r + 117219 * r + 193154) * f(6 * r + 12),
                            223092870 * f(3 * r + 6) * f(r) * f(r + 4) ** 2),
        ("sP", 1): lambda: F(f(6 * r + 6), 120 * f(3 * r + 3) * f(r) * f(r + 1) ** 2),
        ("sP", 3): lambda: F((77 * r + 221) * f(6 * r + 12), 4084080 * f(3 * r + 6) * f(r) * f(r + 3) ** 2),
        ("sP", 5): lambda: F((33649 * r * r + 294051 * r + 633650) * f(6 * r + 18),
                             776363187600 * f(3 * r + 9) * f(r) * f(r + 5) ** 2),
        ("sP", 9): lambda: horner(P9, r) * F(f(6 * r + 30), f(3 * r + 15) * f(r) * f(r + 9) ** 2),
        ("sP", 19): lambda: horner(P19, r) * F(f(6 * r + 60), f(3 * r + 30) * f(r) * f(r + 19) ** 2),
        ("sQ", 0): lambda: F(f(6 * r + 1), f(3 * r) * f(r) ** 3),
        ("sQ", 2): lambda: F((7 * r + 13) * f(6 * r + 7), 2730 * f(3 * r + 3) * f(r) * f(r + 2) ** 2),
        ("sQ", 6): lambda: F((1043119 * r ** 3 + 15220608 * r * r + 72947639 * r + 114757350) * f(6 * r + 19),
                             74207381348100 * f(3 * r + 9) * f(r) * f(r + 6) ** 2),
        ("Q", 1): lambda: F((8 * r + 7) * f(6 * r + 1), 7 * f(3 * r) * f(r) * f(r + 1) ** 2),
        ("Q", 3): lambda: F((1528 * r * r + 7231 * r + 8151) * f(6 * r + 7),
                            190190 * f(3 * r + 3) * f(r) * f(r + 3) ** 2),
        ("Q", 5): lambda: F((1070744 * r ** 3 + 12418991 * r * r + 46901365 * r + 57574750) * f(6 * r + 13),
                            34579394850 * f(3 * r + 6) * f(r) * f(r + 5) ** 2),
        ("Q", 11): lambda: horner(Q11, r) * F(f(6 * r + 31), f(3 * r + 15) * f(r) * f(r + 11) ** 2),
        ("Q", 13): lambda: horner(Q13, r) * F(f(6 * r + 37), f(3 * r + 18) * f(r) * f(r + 13) ** 2),
    }
    return table[(kind, n)]()


def pq_series(key, n):
    from exqmf.hypergeom import inv_sqrt_disc, p_series, q_series
    from exqmf.series import mul

    kind, k = key
    base = p_series(k, n) if kind.endswith("P") else q_series(k, n)
    return mul(inv_sqrt_disc(n), base) if kind.startswith("s") else base


# generalized Atkin polynomials A^{(r)}_{2,2r}, ascending coefficients
GENERALIZED_ATKIN = {
    1: [269280, -1640, 1],
    2: [F(97748640, 4847), F(5367564, 4847), 1],
    3: [F(184720492440000, 6736603), F(-100925285400, 6736603), 1],
    4: [F(8760324756150000, 303744733), F(13326301537125, 303744733), 1],
    5: [F(302601299124728270224800000, 7988288882724700441), F(-567274769925055704588000, 7988288882724700441), 1],
    6: [F(-163976620145430859347886034400000, 433955868750758754759533),
        F(67508245504783855161034500000, 433955868750758754759533), 1],
}

INTEGRAL_WEIGHTS = sorted(FIRST_COEFFICIENTS)
