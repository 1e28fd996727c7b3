"""F_p counts of I(a_x) for x = long simple root vector of so5 (matrix model)."""
import sys, itertools
from so5_locus import *

def count(p):
    # a is central: N_p = p * #{(b,c,d,e,f)}
    Cm = [[[int(sp.Rational(C[i][j][k]).p * pow(sp.Rational(C[i][j][k]).q, -1, p)) % p
            for k in range(6)] for j in range(6)] for i in range(6)]
    tot = 0
    for v in itertools.product(range(p), repeat=5):
        y = (0,) + v
        M = [[sum(y[i] * Cm[i][j][k] for i in range(6)) % p for j in range(6)] for k in range(6)]
        if 6 - rank_mod(M, p) > 2:
            tot += 1
    return tot * p

for p in map(int, sys.argv[1:]):
    print(p, count(p))
