"""Reference values for the curve 83a1: y^2 = x^3 + 1269x - 10746, P = (15, -108).

Constants are kept in the factored style they are usually quoted in; the
expression parser expands them.
"""

A, B, Z, W = 1269, -10746, 15, -108

F_X = "x^4 - 60*x^3 - 2538*x^2 + 9828*x + 2255121"
F_XY = ("x^6 + 6345*x^4 + 864*x^3*y - 214920*x^3 - 8051805*x^2 + 1096416*x*y"
        " + 54546696*x - 9284544*y - 2967360237")
F_Y = "y^4 + 864*y^3 + 34992*y^2 - 11292058368"

# The octic as printed next to the curve data. Its middle term carries y^2
# where y^4 belongs (every other display of this octic has 2^4*3^7*x^4).
F_P_AS_PRINTED = "y^8 + 864*y^6 + 34992*y^2 - 11292058368"
F_MINUS_P_AS_PRINTED = "y^8 - 864*y^6 + 34992*y^2 - 11292058368"
F_P = "x^8 + 864*x^6 + 2^4*3^7*x^4 - 2^8*3^12*83"
R = "x^4 + 864*x^3 + 2^4*3^7*x^2 - 2^8*3^12*83"

K = ("x^6 - 2^4*3^7*x^5 + 2^8*3^12*83*x^4 + 2^13*3^18*29*83*x^3"
     " - 2^16*7*19*103*2281*2579*5209*x^2 - 2^20*3^31*83^2*x - 2^24*3^36*83^3")

H = ("x^12 - 2^5*3^8*x^11 + 2^8*3^12*5*193*x^10 - 2^13*3^19*5*433*x^9"
     " + 2^18*3^24*5*7*43*71*x^8 - 2^21*3^31*740603*x^7 + 2^24*3^36*257*159337*x^6"
     " - 2^29*3^44*5*7*61*73*83*x^5 - 2^32*3^48*5^2*83*103*62003*x^4"
     " + 2^38*3^55*5*11*37*83^2*491*x^3 + 2^42*3^60*7*83^2*731921*x^2"
     " - 2^48*3^67*7*83^3*4153*x + 2^52*3^72*83^3*227*340633")

# The two sextic factors of h over Q(sqrt D), with t standing for sqrt D.
# The printed second factor has "x^2x^2" where x^2 is meant.
H_FACTOR_1 = ("x^6 - 2^4*3^8*x^5 + 2^9*3^12*13*17*x^4 - 2^12*3^19*839*x^3"
              " + 2^16*3^26*5^3*83*x^2 + (-t - 2^37*3^46*5*83*739)*x/(2^14*3^12*739)"
              " + (t - 2^36*3^41*5*83^2*383*739)/(2^11*3^5*739)")
H_FACTOR_2 = ("x^6 - 2^4*3^8*x^5 + 2^9*3^12*13*17*x^4 - 2^12*3^19*839*x^3"
              " + 2^16*3^26*5^3*83*x^2 + (t - 2^37*3^46*5*83*739)*x/(2^14*3^12*739)"
              " + (-t - 2^36*3^41*5*83^2*383*739)/(2^11*3^5*739)")

P1 = "x^2 + 2^24*3^34*5*83*x + 2^44*3^60*83^2*45984143"
P2 = "x^2 + 2^26*3^36*5*83^2*383*x + 2^52*3^72*83^3*227*340633"

# Magnitudes as printed; the computed values are all negative.
D_ABS = 2**72 * 3**84 * 83**3 * 739**4
D1_ABS = 2**46 * 3**60 * 83**3 * 739**2
D2_ABS = 2**52 * 3**74 * 83**3 * 739**2

H1 = "x^4 - 2^17*3^12*83*x^2 + 2^27*3^18*83*x - 2^32*3^24*7^2*83"
H2 = "x^4 - 2^17*3^12*83*x^2 + 2^27*3^18*83*x + 2^30*3^25*83*181"
# Printed with -2^4*3^7*x^2; the quartic r above (same polynomial) has +.
H3_AS_PRINTED = "x^4 + 2^5*3^3*x^3 - 2^4*3^7*x^2 - 2^8*3^12*83"
H3 = "x^4 + 2^5*3^3*x^3 + 2^4*3^7*x^2 - 2^8*3^12*83"
G = "x^4 + 2^14*3^12*83*x + 2^14*3^16*47*83"
BETA_NUMERATOR = "alpha^3 - 2^2*3^3*47*alpha^2 + 2^6*3^8*89*alpha + 2^12*3^13*83"
BETA_SCALE = 2 * 3**5 * 199  # beta = numerator / BETA_SCALE
T4 = ("x^12 - 2^2*3^6*199*x^10 + 2^8*3^13*11*83*x^8 - 2^11*3^18*83*199*x^6"
      " - 2^16*3^25*11*83^2*x^4 - 2^18*3^30*83^2*199*x^2 - 2^24*3^36*83^3")

# Non-example: r = x^4 - 2x^3 + 2x^2 + 4x - 4.
NONEX_R = (-2, 2, 4, -4)
NONEX_OCTIC = "x^8 - 2*x^6 + 2*x^4 + 4*x^2 - 4"
NONEX_K = "x^6 - 2*x^5 - 4*x^4 - 16*x^3 + 16*x^2 - 32*x - 64"
NONEX_H = ("x^12 - 12*x^11 + 68*x^10 - 240*x^9 + 832*x^8 - 3008*x^7 + 7104*x^6"
           " - 8192*x^5 + 14592*x^4 - 46080*x^3 + 239616*x^2 - 385024*x + 671744")
NONEX_P1 = "x^2 + 512*x + 405504"
NONEX_P2 = "x^2 + 1152*x + 671744"
NONEX_D_CANDIDATES = (-(2**26) * 83**2, 2**16 * 7 * 71 * 10711)
NONEX_D1 = -(2**14) * 83
NONEX_R_DISC_ABS = 2**8 * 83
