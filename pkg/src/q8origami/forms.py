"""Published closed forms, transcribed into the package's expression grammar.

These are the long printed polynomials that the verification routines
compare against. They are stored expanded, in canonical term order, and
parsed lazily. Anything computed by the library should agree with them;
where a printed form is known to be wrong, the verifying routine reports
the discrepancy rather than silently fixing the text here.

Symbols: c0..c3 are quartic coefficients, e1..e4 the elementary symmetric
values (e1 = -c3, e2 = c2, e3 = -c1, e4 = c0), v1..v4 the roots of p1, p2.
"""
from contextlib import contextmanager
from functools import lru_cache

from .polyring import MultiPoly, parse

# Res over x of f_x and y^2 - (x^3 + a*x + b), generic a, b, z.
R_OCTIC = (
    'y^8 - 64*z^3*y^6 - 40*a*z*y^6 - 28*b*y^6 + 144*a^2*z^2*y^4 + 432*a*b*z*y^4 - '
    '8*a^3*y^4 + 270*b^2*y^4 - 96*a^4*z*y^2 - 648*a*b^2*z*y^2 - 144*a^3*b*y^2 - '
    '972*b^3*y^2 + 16*a^6 + 216*a^3*b^2 + 729*b^4'
)

# Res over x of f_x and f_xy, divided by 2^12 * (4a^3 + 27b^2)^2.
RAW_Y_QUARTIC = (
    'w^4*y^4 - 8*z^3*w^3*y^3 - 8*a*z*w^3*y^3 - 8*b*w^3*y^3 + 12*a*z^4*w^2*y^2 + '
    '18*b*z^3*w^2*y^2 + 12*a^2*z^2*w^2*y^2 + 30*a*b*z*w^2*y^2 + 18*b^2*w^2*y^2 - '
    '4*a^3*z^6 - 27*b^2*z^6 - 8*a^4*z^4 - 54*a*b^2*z^4 - 8*a^3*b*z^3 - 54*b^3*z^3 '
    '- 4*a^5*z^2 - 27*a^2*b^2*z^2 - 8*a^4*b*z - 54*a*b^3*z - 4*a^3*b^2 - 27*b^4'
)

# Cofactor q in the discriminant of the generic origami octic.
Q_POLY = (
    '108*a^3*w^4 + 729*b^2*w^4 - 108*a^3*z^3*w^2 - 486*a^2*b*z^2*w^2 - '
    '108*a^4*z*w^2 - 1458*a*b^2*z*w^2 - 162*a^3*b*w^2 - 1458*b^3*w^2 + 81*a^4*z^4 '
    '+ 486*a^3*b*z^3 + 18*a^5*z^2 + 1215*a^2*b^2*z^2 + 54*a^4*b*z + 1458*a*b^3*z '
    '+ a^6 + 54*a^3*b^2 + 729*b^4'
)

# Common part (degrees 6..2) of the two sextic factors of h, generic origami case.
H_COMMON_SEXTIC = (
    'x^6 - 36*a*z*x^5 - 54*b*x^5 + 432*a^2*z^2*x^4 + 1296*a*b*z*x^4 + 20*a^3*x^4 '
    '+ 1107*b^2*x^4 - 1728*a^3*z^3*x^3 - 7776*a^2*b*z^2*x^3 - 480*a^4*z*x^3 - '
    '14904*a*b^2*z*x^3 - 720*a^3*b*x^3 - 10692*b^3*x^3 - 3072*a^4*z*w^2*x^2 - '
    '20736*a*b^2*z*w^2*x^2 - 4608*a^3*b*w^2*x^2 - 31104*b^3*w^2*x^2 + '
    '4608*a^5*z^2*x^2 + 31104*a^2*b^2*z^2*x^2 + 13824*a^4*b*z*x^2 + '
    '93312*a*b^3*z*x^2 + 240*a^6*x^2 + 13608*a^3*b^2*x^2 + 80919*b^4*x^2'
)

# Symmetric-function formulas for p1 = x^2 - sum1*x + product1 and
# p2 = x^2 - sum2*x + product2; product1 = g2 - sum2 * PRODUCT1_COFACTOR.
SUM1 = (
    '-2*e1^2*e2^2*e4 - 2*e1^2*e2*e3^2 + 14*e1*e2*e3*e4 + 6*e2^3*e4 - 2*e2^2*e3^2 '
    '- 30*e2*e4^2'
)

SUM2 = (
    '-2*e1^4*e4^2 + 2*e1^3*e2*e3*e4 + 7*e1^2*e2*e4^2 - 4*e1^2*e3^2*e4 - '
    '7*e1*e2^2*e3*e4 + 2*e1*e2*e3^3 - 2*e1*e3*e4^2 + 2*e2^2*e4^2 + 7*e2*e3^2*e4 - '
    '2*e3^4 + 10*e4^3'
)

PRODUCT2 = (
    'e1^8*e4^4 - 2*e1^7*e2*e3*e4^3 + e1^6*e2^2*e3^2*e4^2 - 7*e1^6*e2*e4^4 + '
    '4*e1^6*e3^2*e4^3 + 14*e1^5*e2^2*e3*e4^3 - 6*e1^5*e2*e3^3*e4^2 + '
    '2*e1^5*e3*e4^4 - 7*e1^4*e2^3*e3^2*e4^2 + 2*e1^4*e2^2*e3^4*e4 + '
    '17*e1^4*e2^2*e4^4 - 23*e1^4*e2*e3^2*e4^3 + 6*e1^4*e3^4*e4^2 - 10*e1^4*e4^5 - '
    '27*e1^3*e2^3*e3*e4^3 + 29*e1^3*e2^2*e3^3*e4^2 - 6*e1^3*e2*e3^5*e4 + '
    '3*e1^3*e2*e3*e4^4 + 4*e1^3*e3^3*e4^3 + e1^2*e2^5*e4^3 + '
    '12*e1^2*e2^4*e3^2*e4^2 - 7*e1^2*e2^3*e3^4*e4 - 29*e1^2*e2^3*e4^4 + '
    'e1^2*e2^2*e3^6 + 29*e1^2*e2^2*e3^2*e4^3 - 23*e1^2*e2*e3^4*e4^2 + '
    '35*e1^2*e2*e4^5 + 4*e1^2*e3^6*e4 - 19*e1^2*e3^2*e4^4 + 13*e1*e2^4*e3*e4^3 - '
    '27*e1*e2^3*e3^3*e4^2 + 14*e1*e2^2*e3^5*e4 + 11*e1*e2^2*e3*e4^4 - '
    '2*e1*e2*e3^7 + 3*e1*e2*e3^3*e4^3 + 2*e1*e3^5*e4^2 - 10*e1*e3*e4^5 - '
    '4*e2^6*e4^3 + e2^5*e3^2*e4^2 + 33*e2^4*e4^4 - 29*e2^3*e3^2*e4^3 + '
    '17*e2^2*e3^4*e4^2 - 54*e2^2*e4^5 - 7*e2*e3^6*e4 + 35*e2*e3^2*e4^4 + e3^8 - '
    '10*e3^4*e4^3 + 25*e4^6'
)

G2 = (
    '-2*e1^6*e2*e4^3 - 2*e1^6*e3^2*e4^2 - 2*e1^5*e2^2*e3*e4^2 + 2*e1^5*e2*e3^3*e4 '
    '+ 14*e1^5*e3*e4^3 + e1^4*e2^4*e4^2 + 6*e1^4*e2^3*e3^2*e4 + e1^4*e2^2*e3^4 + '
    '23*e1^4*e2^2*e4^3 - 13*e1^4*e2*e3^2*e4^2 - 4*e1^4*e3^4*e4 - 3*e1^4*e4^4 - '
    '23*e1^3*e2^3*e3*e4^2 - 25*e1^3*e2^2*e3^3*e4 + 2*e1^3*e2*e3^5 - '
    '39*e1^3*e2*e3*e4^3 + 30*e1^3*e3^3*e4^2 - 6*e1^2*e2^5*e4^2 - '
    '18*e1^2*e2^4*e3^2*e4 + 6*e1^2*e2^3*e3^4 - 20*e1^2*e2^3*e4^3 + '
    '171*e1^2*e2^2*e3^2*e4^2 - 13*e1^2*e2*e3^4*e4 - 29*e1^2*e2*e4^4 - 2*e1^2*e3^6 '
    '- 30*e1^2*e3^2*e4^3 + 102*e1*e2^4*e3*e4^2 - 23*e1*e2^3*e3^3*e4 - '
    '2*e1*e2^2*e3^5 - 213*e1*e2^2*e3*e4^3 - 39*e1*e2*e3^3*e4^2 + 14*e1*e3^5*e4 + '
    '92*e1*e3*e4^4 + 9*e2^6*e4^2 - 6*e2^5*e3^2*e4 + e2^4*e3^4 - 122*e2^4*e4^3 - '
    '20*e2^3*e3^2*e4^2 + 23*e2^2*e3^4*e4 + 303*e2^2*e4^4 - 2*e2*e3^6 - '
    '29*e2*e3^2*e4^3 - 3*e3^4*e4^2 - 106*e4^5'
)

PRODUCT1_COFACTOR = (
    'c0*c2*c3^2 + c1^2*c3^2 + 2*c1*c2^2*c3 - 7*c0*c1*c3 - 8*c0*c2^2 + c1^2*c2 + '
    '15*c0^2'
)

# The degree-12 resolvent in terms of c0..c3 and v1..v4.
H_GENERAL = (
    'x^12 - 6*c2*x^11 + 4*c1*c3*x^10 + 15*c2^2*x^10 - 10*c0*x^10 - '
    '20*c1*c2*c3*x^9 - 20*c2^3*x^9 + 50*c0*c2*x^9 + 2*c0*c2*c3^2*x^8 + '
    '6*c1^2*c3^2*x^8 + 40*c1*c2^2*c3*x^8 - 34*c0*c1*c3*x^8 + 15*c2^4*x^8 - '
    '106*c0*c2^2*x^8 + 2*c1^2*c2*x^8 + 55*c0^2*x^8 - 6*c0*c2^2*c3^2*x^7 - '
    '22*c1^2*c2*c3^2*x^7 - 40*c1*c2^3*c3*x^7 + 122*c0*c1*c2*c3*x^7 - 6*c2^5*x^7 + '
    '118*c0*c2^3*x^7 - 6*c1^2*c2^2*x^7 - 190*c0^2*c2*x^7 + v1*x^7 + v2*x^7 + '
    '4*c0*c1*c2*c3^3*x^6 + 4*c1^3*c3^3*x^6 + 6*c0*c2^3*c3^2*x^6 + '
    '30*c1^2*c2^2*c3^2*x^6 - 10*c0^2*c2*c3^2*x^6 - 38*c0*c1^2*c3^2*x^6 + '
    '20*c1*c2^4*c3*x^6 - 174*c0*c1*c2^2*c3*x^6 + 4*c1^3*c2*c3*x^6 + '
    '130*c0^2*c1*c3*x^6 + c2^6*x^6 - 68*c0*c2^4*x^6 + 6*c1^2*c2^3*x^6 + '
    '270*c0^2*c2^2*x^6 - 10*c0*c1^2*c2*x^6 - 3*c2*v1*x^6 - 3*c2*v2*x^6 - '
    '150*c0^3*x^6 + v3*x^6 + v4*x^6 - 8*c0*c1*c2^2*c3^3*x^5 - 8*c1^3*c2*c3^3*x^5 '
    '- 2*c0*c2^4*c3^2*x^5 - 18*c1^2*c2^3*c3^2*x^5 + 20*c0^2*c2^2*c3^2*x^5 + '
    '76*c0*c1^2*c2*c3^2*x^5 - 4*c1*c2^5*c3*x^5 + 118*c0*c1*c2^3*c3*x^5 - '
    '8*c1^3*c2^2*c3*x^5 - 260*c0^2*c1*c2*c3*x^5 + 2*c1*c3*v1*x^5 + 2*c1*c3*v2*x^5 '
    '+ 16*c0*c2^5*x^5 - 2*c1^2*c2^4*x^5 - 190*c0^2*c2^3*x^5 + 20*c0*c1^2*c2^2*x^5 '
    '+ 3*c2^2*v1*x^5 + 3*c2^2*v2*x^5 + 300*c0^3*c2*x^5 - 3*c2*v3*x^5 - '
    '3*c2*v4*x^5 - 5*c0*v1*x^5 - 5*c0*v2*x^5 + c0^2*c2^2*c3^4*x^4 + '
    '2*c0*c1^2*c2*c3^4*x^4 + c1^4*c3^4*x^4 + 4*c0*c1*c2^3*c3^3*x^4 + '
    '4*c1^3*c2^2*c3^3*x^4 - 14*c0^2*c1*c2*c3^3*x^4 - 14*c0*c1^3*c3^3*x^4 + '
    '4*c1^2*c2^4*c3^2*x^4 - 16*c0^2*c2^3*c3^2*x^4 - 42*c0*c1^2*c2^2*c3^2*x^4 + '
    '2*c1^4*c2*c3^2*x^4 + 30*c0^3*c2*c3^2*x^4 + 79*c0^2*c1^2*c3^2*x^4 - '
    '32*c0*c1*c2^4*c3*x^4 + 4*c1^3*c2^3*c3*x^4 + 172*c0^2*c1*c2^2*c3*x^4 - '
    '14*c0*c1^3*c2*c3*x^4 - 4*c1*c2*c3*v1*x^4 - 4*c1*c2*c3*v2*x^4 - '
    '210*c0^3*c1*c3*x^4 + 2*c1*c3*v3*x^4 + 2*c1*c3*v4*x^4 + 64*c0^2*c2^4*x^4 - '
    '16*c0*c1^2*c2^3*x^4 - c2^3*v1*x^4 - c2^3*v2*x^4 + c1^4*c2^2*x^4 - '
    '240*c0^3*c2^2*x^4 + 3*c2^2*v3*x^4 + 3*c2^2*v4*x^4 + 30*c0^2*c1^2*c2*x^4 + '
    '10*c0*c2*v1*x^4 + 10*c0*c2*v2*x^4 + 225*c0^4*x^4 - 5*c0*v3*x^4 - 5*c0*v4*x^4 '
    '+ c0*c2*c3^2*v1*x^3 + c0*c2*c3^2*v2*x^3 + c1^2*c3^2*v1*x^3 + '
    'c1^2*c3^2*v2*x^3 + 2*c1*c2^2*c3*v1*x^3 + 2*c1*c2^2*c3*v2*x^3 - '
    '4*c1*c2*c3*v3*x^3 - 4*c1*c2*c3*v4*x^3 - 7*c0*c1*c3*v1*x^3 - '
    '7*c0*c1*c3*v2*x^3 - c2^3*v3*x^3 - c2^3*v4*x^3 - 8*c0*c2^2*v1*x^3 - '
    '8*c0*c2^2*v2*x^3 + c1^2*c2*v1*x^3 + c1^2*c2*v2*x^3 + 10*c0*c2*v3*x^3 + '
    '10*c0*c2*v4*x^3 + 15*c0^2*v1*x^3 + 15*c0^2*v2*x^3 + c0*c2*c3^2*v3*x^2 + '
    'c0*c2*c3^2*v4*x^2 + c1^2*c3^2*v3*x^2 + c1^2*c3^2*v4*x^2 + '
    '2*c1*c2^2*c3*v3*x^2 + 2*c1*c2^2*c3*v4*x^2 - 7*c0*c1*c3*v3*x^2 - '
    '7*c0*c1*c3*v4*x^2 - 8*c0*c2^2*v3*x^2 - 8*c0*c2^2*v4*x^2 + c1^2*c2*v3*x^2 + '
    'c1^2*c2*v4*x^2 + 15*c0^2*v3*x^2 + 15*c0^2*v4*x^2 + v1*v2*x^2 + v1*v4*x + '
    'v2*v3*x + v3*v4'
)

# Polynomial whose roots are the x-coordinates of the points of exact order 4.
T4_POLY = (
    'x^12 + 54*b*x^10 + 132*a^3*x^8 + 891*b^2*x^8 + 432*a^3*b*x^6 + 2916*b^3*x^6 '
    '- 528*a^6*x^4 - 7128*a^3*b^2*x^4 - 24057*b^4*x^4 + 864*a^6*b*x^2 + '
    '11664*a^3*b^3*x^2 + 39366*b^5*x^2 - 64*a^9 - 1296*a^6*b^2 - 8748*a^3*b^4 - '
    '19683*b^6'
)

# 3^8 * b^4 * h1(beta) expanded in alpha, before any reduction.
ISO_EXPANSION = (
    'alpha^12 - 16*a*alpha^11 - 288*b*z*alpha^10 + 160*a^2*alpha^10 + '
    '3456*a*b*z*alpha^9 - 256*a^3*alpha^9 + 5184*b^2*alpha^9 + '
    '31104*b^2*z^2*alpha^8 - 27648*a^2*b*z*alpha^8 - 4352*a^4*alpha^8 - '
    '62208*a*b^2*alpha^8 - 248832*a*b^2*z^2*alpha^7 - 36864*a^3*b*z*alpha^7 - '
    '1119744*b^3*z*alpha^7 + 57344*a^5*alpha^7 + 497664*a^2*b^2*alpha^7 - '
    '1492992*b^3*z^3*alpha^6 + 1492992*a^2*b^2*z^2*alpha^6 + '
    '884736*a^4*b*z*alpha^6 + 8957952*a*b^3*z*alpha^6 - 81920*a^6*alpha^6 + '
    '497664*a^3*b^2*alpha^6 + 8957952*b^4*alpha^6 + 5971968*a*b^3*z^3*alpha^5 + '
    '7962624*a^3*b^2*z^2*alpha^5 + 80621568*b^4*z^2*alpha^5 - '
    '7077888*a^5*b*z*alpha^5 - 53747712*a^2*b^3*z*alpha^5 - 655360*a^7*alpha^5 - '
    '14598144*a^4*b^2*alpha^5 - 71663616*a*b^4*alpha^5 + 26873856*b^4*z^4*alpha^4 '
    '- 23887872*a^2*b^3*z^3*alpha^4 - 39813120*a^4*b^2*z^2*alpha^4 - '
    '322486272*a*b^4*z^2*alpha^4 - 11796480*a^6*b*z*alpha^4 - '
    '262766592*a^3*b^3*z*alpha^4 - 1289945088*b^5*z*alpha^4 + 8323072*a^8*alpha^4 '
    '+ 119439360*a^5*b^2*alpha^4 + 429981696*a^2*b^4*alpha^4 - '
    '95551488*a^3*b^3*w^2*alpha^3 - 644972544*b^5*w^2*alpha^3 - '
    '286654464*a^3*b^3*z^3*alpha^3 - 1934917632*b^5*z^3*alpha^3 + '
    '191102976*a^5*b^2*z^2*alpha^3 + 1289945088*a^2*b^4*z^2*alpha^3 + '
    '84934656*a^7*b*z*alpha^3 + 1337720832*a^4*b^3*z*alpha^3 + '
    '5159780352*a*b^5*z*alpha^3 + 3145728*a^9*alpha^3 + 169869312*a^6*b^2*alpha^3 '
    '+ 1863254016*a^3*b^4*alpha^3 + 5804752896*b^6*alpha^3 + '
    '382205952*a^4*b^3*w^2*alpha^2 + 2579890176*a*b^5*w^2*alpha^2 + '
    '1146617856*a^6*b^2*z^2*alpha^2 + 14619377664*a^3*b^4*z^2*alpha^2 + '
    '46438023168*b^6*z^2*alpha^2 - 509607936*a^8*b*z*alpha^2 - '
    '6497501184*a^5*b^3*z*alpha^2 - 20639121408*a^2*b^5*z*alpha^2 - '
    '56623104*a^10*alpha^2 - 1316487168*a^7*b^2*alpha^2 - '
    '9746251776*a^4*b^4*alpha^2 - 23219011584*a*b^6*alpha^2 + '
    '6879707136*a^3*b^4*z*w^2*alpha + 46438023168*b^6*z*w^2*alpha - '
    '1528823808*a^5*b^3*w^2*alpha - 10319560704*a^2*b^5*w^2*alpha - '
    '2038431744*a^9*b*z*alpha - 36691771392*a^6*b^3*z*alpha - '
    '216710774784*a^3*b^5*z*alpha - 417942208512*b^7*z*alpha + '
    '452984832*a^11*alpha + 8153726976*a^8*b^2*alpha + 48157949952*a^5*b^4*alpha '
    '+ 92876046336*a^2*b^6*alpha + 20639121408*a^4*b^4*z*w^2 + '
    '139314069504*a*b^6*z*w^2 - 18345885696*a^6*b^3*w^2 - '
    '309586821120*a^3*b^5*w^2 - 1253826625536*b^7*w^2 + 185752092672*a^3*b^5*z^3 '
    '+ 1253826625536*b^7*z^3 - 61917364224*a^5*b^4*z^2 - 417942208512*a^2*b^6*z^2 '
    '+ 1358954496*a^12 + 30576476160*a^9*b^2 + 247669456896*a^6*b^4 + '
    '882322440192*a^3*b^6 + 1253826625536*b^8'
)

# Its coefficients after reducing with alpha^4 = 4*Delta*alpha + 12*a*Delta.
ISO_C0 = (
    '20639121408*a^4*b^4*z*w^2 + 139314069504*a*b^6*z*w^2 - '
    '18345885696*a^6*b^3*w^2 - 309586821120*a^3*b^5*w^2 - 1253826625536*b^7*w^2 - '
    '20639121408*a^4*b^4*z^4 - 139314069504*a*b^6*z^4 + 18345885696*a^6*b^3*z^3 + '
    '309586821120*a^3*b^5*z^3 + 1253826625536*b^7*z^3 - 20639121408*a^5*b^4*z^2 - '
    '139314069504*a^2*b^6*z^2 + 18345885696*a^7*b^3*z + 288947699712*a^4*b^5*z + '
    '1114512556032*a*b^7*z + 18345885696*a^6*b^4 + 309586821120*a^3*b^6 + '
    '1253826625536*b^8'
)

ISO_C1 = (
    '6879707136*a^3*b^4*z*w^2 + 46438023168*b^6*z*w^2 - 1528823808*a^5*b^3*w^2 - '
    '10319560704*a^2*b^5*w^2 - 6879707136*a^3*b^4*z^4 - 46438023168*b^6*z^4 + '
    '1528823808*a^5*b^3*z^3 + 10319560704*a^2*b^5*z^3 - 6879707136*a^4*b^4*z^2 - '
    '46438023168*a*b^6*z^2 + 1528823808*a^6*b^3*z + 3439853568*a^3*b^5*z - '
    '46438023168*b^7*z + 1528823808*a^5*b^4 + 10319560704*a^2*b^6'
)

ISO_C2 = (
    '382205952*a^4*b^3*w^2 + 2579890176*a*b^5*w^2 - 382205952*a^4*b^3*z^3 - '
    '2579890176*a*b^5*z^3 - 382205952*a^5*b^3*z - 2579890176*a^2*b^5*z - '
    '382205952*a^4*b^4 - 2579890176*a*b^6'
)

ISO_C3 = (
    '-95551488*a^3*b^3*w^2 - 644972544*b^5*w^2 + 95551488*a^3*b^3*z^3 + '
    '644972544*b^5*z^3 + 95551488*a^4*b^3*z + 644972544*a*b^5*z + '
    '95551488*a^3*b^4 + 644972544*b^6'
)


NAMES = (
    "R_OCTIC", "RAW_Y_QUARTIC", "Q_POLY", "H_COMMON_SEXTIC", "SUM1", "SUM2",
    "PRODUCT2", "G2", "PRODUCT1_COFACTOR", "H_GENERAL", "T4_POLY",
    "ISO_EXPANSION", "ISO_C0", "ISO_C1", "ISO_C2", "ISO_C3",
)


_OVERRIDES: dict[str, MultiPoly] = {}


@lru_cache(maxsize=None)
def _parsed(name: str) -> MultiPoly:
    if name not in NAMES:
        raise KeyError(name)
    return parse(globals()[name])


def form(name: str) -> MultiPoly:
    """Parsed polynomial for one of the constants listed in NAMES."""
    if name in _OVERRIDES:
        return _OVERRIDES[name]
    return _parsed(name)


@contextmanager
def perturbed(name: str, delta=1):
    """Temporarily replace a stored form by form + delta (a test hook: every
    check that reads this form should then fail)."""
    _OVERRIDES[name] = _parsed(name) + delta
    try:
        yield
    finally:
        _OVERRIDES.pop(name, None)
