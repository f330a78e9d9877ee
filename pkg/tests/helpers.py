"""Shared fixtures-by-convention for the test suite.

The polynomial coefficient tables below express the recurrence families as
polynomials in t = a*b.  They were derived once by symbolic expansion of the
recurrence X(j) = (t - 2) X(j-1) - X(j-2) and are frozen here so the tests
exercise the package against an independent record rather than against
itself.  Coefficients are listed from the highest power of t down to the
constant term.
"""

# gamma(0) = 0, gamma(1) = 1
GAMMA_POLYS = {
    0: [0],
    1: [1],
    2: [1, -2],
    3: [1, -4, 3],
    4: [1, -6, 10, -4],
    5: [1, -8, 21, -20, 5],
    6: [1, -10, 36, -56, 35, -6],
    7: [1, -12, 55, -120, 126, -56, 7],
    8: [1, -14, 78, -220, 330, -252, 84, -8],
}

# eta(0) = 1, eta(1) = t - 1
ETA_POLYS = {
    0: [1],
    1: [1, -1],
    2: [1, -3, 1],
    3: [1, -5, 6, -1],
    4: [1, -7, 15, -10, 1],
    5: [1, -9, 28, -35, 15, -1],
    6: [1, -11, 45, -84, 70, -21, 1],
    7: [1, -13, 66, -165, 210, -126, 28, -1],
    8: [1, -15, 91, -286, 495, -462, 210, -36, 1],
}

# delta(d) = eta(d) - eta(d-1), defined for d >= 1
DELTA_POLYS = {
    1: [1, -2],
    2: [1, -4, 2],
    3: [1, -6, 9, -2],
    4: [1, -8, 20, -16, 2],
    5: [1, -10, 35, -50, 25, -2],
    6: [1, -12, 54, -112, 105, -36, 2],
}

# epsilon(d) = gamma(d+1) - gamma(d), defined for d >= 0
EPSILON_POLYS = {
    0: [1],
    1: [1, -3],
    2: [1, -5, 5],
    3: [1, -7, 14, -7],
    4: [1, -9, 27, -30, 9],
    5: [1, -11, 44, -77, 55, -11],
    6: [1, -13, 65, -156, 182, -91, 13],
}

# The six systems used by the cross-system checks: the two affine systems,
# two symmetric ones, and two generic hyperbolic ones.
GRID6 = [(5, 1), (4, 1), (3, 2), (2, 2), (7, 3), (5, 5)]


def eval_poly(coeffs, t):
    """Evaluate a coefficient list (highest power first) at integer t."""
    value = 0
    for c in coeffs:
        value = value * t + c
    return value
