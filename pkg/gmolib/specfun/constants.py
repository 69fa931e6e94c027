"""
Mathematical constants

Each value is the 30-digit literal rounded by the parser to the nearest double.
"""

EULER_GAMMA = 0.577215664901532860606512090082
LN_2PI = 1.83787706640934548356065947281
LN_2 = 0.693147180559945309417232121458
LN_PI = 1.14472988584940017414342735135
PI = 3.14159265358979323846264338328
HALF_PI = 1.57079632679489661923132169164

# Distance to a non-positive integer below which an argument is a pole
POLE_TOL = 1e-12
EPS = 2.220446049250313e-16
