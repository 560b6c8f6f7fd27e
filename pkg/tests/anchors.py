"""Frozen reference series used as regression anchors.

Rates are in bits per channel use on the integer-dB grid A/sigma =
10**(d/10), d = 0..20, with sigma = 1.  The ESDU series use the level count
K = max(2, ceil(A/delta0) + 1) at the stated spacing target delta0 = 0.5.
"""

# capacity upper bound series, d = 0..20 dB
C_UPPER_DB = (
    0.160964047443681,
    0.240764845172548,
    0.351537769479087,
    0.498291242926011,
    0.682956368898559,
    0.819814175671874,
    0.973282700318478,
    1.14582506250897,
    1.33727268473667,
    1.54697680854408,
    1.77387282394493,
    2.01657866458013,
    2.27350918813765,
    2.54298866830575,
    2.82334783530117,
    3.11299800861738,
    3.41048059767537,
    3.71449433269512,
    4.02390473640102,
    4.33774090510789,
    4.65518421732466,
)

# uniform-input rate lower bound series, d = 0..20 dB
C_LOWER_DB = (
    0.0410445931048853,
    0.0640115453347339,
    0.0989770489302889,
    0.151139681465882,
    0.22678484439847,
    0.332468172214542,
    0.473534676711565,
    0.652461462134994,
    0.867958354866731,
    1.11544651205882,
    1.38857656014063,
    1.68085070365482,
    1.98667029720715,
    2.30171251845218,
    2.62287039490101,
    2.94801276068759,
    3.27572132068937,
    3.60507034921808,
    3.93546306855791,
    4.26651778228777,
    4.59799157689679,
)

# exact ESDU rate, delta0 = 0.5*sigma
MI_HALF_SIGMA_DB = (
    0.111166693415685,
    0.143451091398157,
    0.196791377636354,
    0.290598886814533,
    0.381466301931511,
    0.520498650122386,
    0.691748500668513,
    0.876290445624623,
    1.09711338235769,
    1.33570294054145,
    1.59082183063296,
    1.85885809059391,
    2.14142439211109,
    2.43313500412782,
    2.73233943866256,
    3.03847858563571,
    3.34989450951698,
    3.66535355432904,
    3.9842476867549,
    4.3058757742271,
    4.62961580676271,
)

# ESDU upper bound, delta0 = 0.5*sigma
G_UPPER_HALF_SIGMA_DB = (
    0.115016970696966,
    0.146089559554917,
    0.199107665312887,
    0.294306602358885,
    0.385058219173179,
    0.527072221466701,
    0.704917516411174,
    0.899330627245337,
    1.13657765595849,
    1.39552500436116,
    1.67332689560707,
    1.9643846464807,
    2.26947827144492,
    2.54298866830575,
    2.82334783530117,
    3.11299800861738,
    3.41048059767537,
    3.71449433269512,
    4.02390473640102,
    4.33774090510789,
    4.65518421732466,
)

# ESDU lower bound, delta0 = 0.5*sigma
F_LOWER_HALF_SIGMA_DB = (
    0.0743957727703369,
    0.0996371576914942,
    0.139834501986853,
    0.209226120923704,
    0.283380386885741,
    0.397560090034825,
    0.545587162289458,
    0.733994892933732,
    0.976516225194942,
    1.23486219309477,
    1.50742090442986,
    1.79035892514079,
    2.08571887879487,
    2.38803497501657,
    2.69594664328627,
    3.00922555396541,
    3.32644232823165,
    3.64658295480584,
    3.96924947396894,
    4.29390793429995,
    4.62007408702805,
)

# analytic sweep points for peak 10**1.5, sigma1 = 1, sigma2 = 2 at the
# single spacing target delta0 = 3: one point per k1, with k2 the smallest
# count that reaches the target spacing
BC15_DELTA3_SPLIT_POINTS = (
    (1, 0.0, 2.14975213776292),
    (2, 0.614593593172419, 1.84936562997861),
    (3, 1.1382485113329, 1.50968492441925),
    (4, 1.52736018075666, 1.2190026617744),
    (5, 1.56038369189476, 1.2086163461867),
    (6, 2.08685453687196, 0.738144815193142),
    (7, 2.10640221775589, 0.736174247575017),
    (8, 2.10621813946571, 0.734690256056108),
    (9, 2.10223803717872, 0.733548649820954),
    (10, 2.09799817161639, 0.732649137263544),
    (11, 2.09410864706785, 0.731924750577867),
    (12, 3.06182819782385, 0.0),
)
