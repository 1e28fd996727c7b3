"""Irregular locus of the centralizer of the long simple root vector in so5,
computed in the matrix model of so5_matrix_model.py, plus F_p point counts
by brute force and of the union of six candidate 3-dim subspaces."""
import sys, itertools
import sympy as sp
from so5_matrix_model import *

x = X[(1, 0)]
B = [X[(1, 0)], X[(1, 1)], X[(1, 2)], X[(0, -1)], X[(-1, -2)], H[(1, 2)]]
for M in B:
    assert br(x, M) == sp.zeros(n)
basis_flat = sp.Matrix([list(M) for M in B]).T
# structure constants of a_x in basis B: C[i][j] = coords of [B_i, B_j]
def coords(v):
    k = sp.symbols('k0:6')
    (s,) = sp.linsolve(list(basis_flat * sp.Matrix(k) - sp.Matrix(list(v))), k)
    return [sp.nsimplify(t) for t in s]
C = [[coords(br(Bi, Bj)) for Bj in B] for Bi in B]

def ad_matrix(y):
    # column j = coordinates of [y, B_j]
    return [[sum(y[i] * C[i][j][k] for i in range(6)) for j in range(6)] for k in range(6)]

def rank_mod(rows, p):
    m = [[int(sp.Rational(v).p * pow(sp.Rational(v).q, -1, p)) % p for v in r] for r in rows]
    rk = 0
    for col in range(len(m[0])):
        piv = next((i for i in range(rk, len(m)) if m[i][col]), None)
        if piv is None: continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = pow(m[rk][col], p - 2, p)
        for i in range(len(m)):
            if i != rk and m[i][col]:
                f = m[i][col] * inv % p
                m[i] = [(u - f * v) % p for u, v in zip(m[i], m[rk])]
        rk += 1
    return rk

if __name__ == '__main__':
    a, b, c, d, e, f = sp.symbols('a b c d e f')
    A = sp.Matrix(ad_matrix([a, b, c, d, e, f]))
    print('ad matrix (rows=output coord, cols=input basis):'); sp.pprint(A)
    I = sp.I
    cands = {
        '<a,c,d>': {b: 0, e: 0, f: 0}, '<a,b,c>': {d: 0, e: 0, f: 0},
        '<a,b,d>': {c: 0, e: 0, f: 0}, '<a,d,e>': {b: 0, c: 0, f: 0},
        '<a,d+ib,c>': {e: 0, f: 0, b: I * d}, '<a,d-ib,c>': {e: 0, f: 0, b: -I * d},
        '<a,d+b,c>': {e: 0, f: 0, b: d}, '<a,d-b,c>': {e: 0, f: 0, b: -d},
        '<a,d+2b..>': {e: 0, f: 0, b: 2 * d},
    }
    for k, s in cands.items():
        print(k, 'rank', A.subs(s).rank())
