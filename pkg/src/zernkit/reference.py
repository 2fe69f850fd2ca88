"""Tabulated reference values from the published benchmark runs.

Rows are keyed by the number of radial nodes m (angular count 2m).
"""

F1_EXACT = 0.4094244859413851
# m -> (quadrature value, relative error)
F1_ROWS = {
    5: (0.4097244673896003, 0.732691e-3),
    10: (0.4094251051077367, 0.151228e-5),
    15: (0.4094244870531256, 0.271537e-8),
    20: (0.4094244859432513, 0.455821e-11),
    25: (0.4094244859413883, 0.791759e-14),
    30: (0.4094244859413848, 0.630994e-15),
    35: (0.4094244859413850, 0.142503e-15),
    40: (0.4094244859413858, 0.181146e-14),
}

F2_ROWS = {
    5: 0.2670074163846569e-1, 10: 0.2606355680939063e-2, 15: 0.3119143925398078e-15,
    20: 0.0, 25: 0.3228321977714574e-1, 30: 0.4945592102178045e-16,
    35: 0.1147861841710902e-16, 40: 0.8148891073315595e-16, 45: -0.7432759692263743e-16,
    50: 0.3207999037057322e-1, 55: -0.1399753743762347e-15, 60: 0.3075136040459932e-16,
    65: -0.9458788981593222e-16, 70: 0.2045957446273746e-17, 75: 0.2416178317504225e-16,
}

F3_EXACT = -0.1527947805159123e-2
F3_ROWS = {
    5: -0.8998055487754142e-2, 10: 0.1655201967553289e-1, 15: -0.1527947805159138e-2,
    20: -0.1527947805159132e-2, 25: -0.1527947805159108e-2, 30: -0.1527947805159144e-2,
    35: -0.1527947805159128e-2, 40: -0.1527947805159155e-2,
}

# (N, n) -> coefficient of the cosine term, degree <= 8
F4_COEFFS = {
    (0, 0): 0.02942, (0, 1): 0.03297, (0, 2): -0.11998, (0, 3): 0.01373, (0, 4): 0.53776e-16,
    (1, 0): -0.48788e-16, (1, 1): 0.76567e-17, (1, 2): 0.99670e-18, (1, 3): 0.22059e-16,
    (2, 0): 0.02967, (2, 1): 0.11495, (2, 2): -0.00647, (2, 3): -0.90206e-16,
    (3, 0): 0.58217e-16, (3, 1): -0.73297e-16, (3, 2): 0.19321e-17,
    (4, 0): 0.04926, (4, 1): -0.03238, (4, 2): -0.13010e-16,
    (5, 0): 0.77604e-16, (5, 1): 0.10474e-15,
    (6, 0): 0.09714, (6, 1): -0.11102e-15,
    (7, 0): -0.18100e-16,
    (8, 0): 0.77241e-16,
}

# roots of Pt_20^1, ascending
NODES_20 = [
    0.0083000442070672, 0.0276430533525631, 0.0575344576368137, 0.0973041282065463,
    0.1460632469641095, 0.2027224916634053, 0.2660161417643405, 0.3345303010944863,
    0.4067344665164935, 0.4810157112964263, 0.5557147130369888, 0.6291628194156031,
    0.6997193231640498, 0.7658081136864078, 0.8259528873644578, 0.8788101326763239,
    0.9231991629103781, 0.9581285688822349, 0.9828187818547442, 0.9967238933309499,
]
# theta column for 40 angular nodes
ANGLES_40 = [
    0.0000000000000000, 0.1570796326794897, 0.3141592653589793, 0.4712388980384690,
    0.6283185307179586, 0.7853981633974483, 0.9424777960769379, 1.0995574287564280,
    1.2566370614359170, 1.4137166941154070, 1.5707963267948970, 1.7278759594743860,
    1.8849555921538760, 2.0420352248333660, 2.1991148575128550, 2.3561944901923450,
    2.5132741228718340, 2.6703537555513240, 2.8274333882308140, 2.9845130209103030,
    3.1415926535897930, 3.2986722862692830, 3.4557519189487720, 3.6128315516282620,
    3.7699111843077520, 3.9269908169872410, 4.0840704496667310, 4.2411500823462210,
    4.3982297150257100, 4.5553093477052000, 4.7123889803846900, 4.8694686130641790,
    5.0265482457436690, 5.1836278784231590, 5.3407075111026480, 5.4977871437821380,
    5.6548667764616280, 5.8119464091411170, 5.9690260418206070, 6.1261056745000970,
]

# log10 |coefficient| of R_{10,n} cos(10 theta) for J_10(10 r) cos(10 theta),
# 41 radial and 81 angular nodes; entry i is n = i - 1
BESSEL_ZERNIKE_LOG10 = [
    -0.9898973637462893, -1.5819586550661100, -2.3588831162234810, -3.2818384538878600,
    -4.3265899327402020, -5.4763255881423960, -6.7185889712528420, -8.0437256952401060,
    -9.4440037263722940, -10.9130714107455100, -12.4457655714899900, -14.0303912755872500,
    -15.8930077195246900, -16.3457963962040700, -15.7586036824183800, -15.6123213406515100,
]
# log10 |coefficient| of the Chebyshev interpolant of the radial factor; entry i is degree i - 1
BESSEL_CHEBYSHEV_LOG10 = [
    -1.0595713478383200, -0.8238192166464383, -1.0293346132799840, -1.4184210516931150,
    -2.2236928015527780, -2.4320890160470980, -2.5458791787004040, -3.1529353540202170,
    -4.0684262705269870, -4.0164562320349430, -4.8033818867489570, -5.3788871564204650,
    -5.7771701061737610, -7.5330217317784680, -7.0809635324045650, -8.3203906346855500,
    -8.5720716277244970, -9.5869646653661940, -10.2017710131164700, -11.1192420938158200,
    -11.9441235125173900, -12.8058618265459900, -13.7926138070249200, -14.6726336554743400,
    -15.3358881075438200, -15.6272308358046700, -15.8313508184606000, -15.9754399091641200,
    -15.9973417506119500, -15.9478563875320300, -15.8915380244439100, -15.8549738638070200,
    -15.8416916517988200, -15.8469558917911700, -15.8212504915562700, -15.7458293943819500,
    -15.6907318775671300, -15.6753007742882200, -15.6761934662405600, -15.6916568927877700,
    -15.6802334440423000,
]

# (n, m) -> index, as printed in the tables and the ordering figures
FRINGE_TABLE = {
    0: (0, 0), 1: (1, 1), 2: (1, -1), 3: (2, 0), 4: (2, 2), 5: (2, -2), 6: (3, 1), 7: (3, -1),
    8: (4, 0), 9: (3, 3), 10: (3, -3), 11: (4, 2), 12: (4, -2), 13: (5, 1), 14: (5, -1),
    15: (6, 0), 16: (4, 4), 17: (4, -4), 18: (5, 3), 19: (5, -3), 20: (6, 2), 21: (6, -2),
    22: (7, 1), 23: (7, -1), 24: (8, 0),
}
FRINGE_FIGURE = {
    (0, 0): 0, (1, 1): 1, (1, -1): 2, (2, 0): 3, (2, 2): 4, (2, -2): 5, (3, 1): 6, (3, -1): 7,
    (4, 0): 8, (3, 3): 9, (3, -3): 10, (4, 2): 11, (4, -2): 12, (5, 1): 13, (5, -1): 14,
    (6, 0): 15, (4, 4): 16, (4, -4): 17, (5, 3): 18, (5, -3): 19, (6, 2): 20, (6, -2): 21,
    (5, 5): 26, (5, -5): 27, (6, 4): 28, (6, -4): 29, (6, 6): 37, (6, -6): 38,
}
ANSI_TABLE = {
    0: (0, 0), 1: (1, -1), 2: (1, 1), 3: (2, -2), 4: (2, 0), 5: (2, 2), 6: (3, -3), 7: (3, -1),
    8: (3, 1), 9: (3, 3), 10: (4, -4), 11: (4, -2), 12: (4, 0), 13: (4, 2), 14: (4, 4),
    15: (5, -5), 16: (5, -3), 17: (5, -1), 18: (5, 1), 19: (5, 3), 20: (5, 5), 21: (6, -6),
    22: (6, -4), 23: (6, -2), 24: (6, 0),
}

# circled values of the ANSI ordering figure, n <= 6
ANSI_FIGURE = {
    (0, 0): 0, (1, -1): 1, (1, 1): 2, (2, -2): 3, (2, 0): 4, (2, 2): 5, (3, -3): 6, (3, -1): 7,
    (3, 1): 8, (3, 3): 9, (4, -4): 10, (4, -2): 11, (4, 0): 12, (4, 2): 13, (4, 4): 14,
    (5, -5): 15, (5, -3): 16, (5, -1): 17, (5, 1): 18, (5, 3): 19, (5, 5): 20, (6, -6): 21,
    (6, -4): 22, (6, -2): 23, (6, 0): 24, (6, 2): 25, (6, 4): 26, (6, 6): 27,
}
