"""Brute-force oracle for the so5 non-subregular centralizer.

Uses only the explicit 5x6 matrix A(b,c,d,e,f), whose rank r gives
dim (a_x)_y = 6 - rank.  A point is irregular when 6 - rank > 2.
Also counts the union of the six listed 3-dim subspaces directly.
"""
import itertools, sys

def rank_mod(rows, p):
    m = [list(r) for r in rows]
    rk, col, ncol = 0, 0, len(m[0])
    for col in range(ncol):
        piv = next((i for i in range(rk, len(m)) if m[i][col] % p), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = pow(m[rk][col], p - 2, p)
        for i in range(len(m)):
            if i != rk and m[i][col] % p:
                f = m[i][col] * inv % p
                m[i] = [(u - f * v) % p for u, v in zip(m[i], m[rk])]
        rk += 1
    return rk

def sqrt_m1(p):
    return next(t for t in range(p) if t * t % p == p - 1)

def count(p):
    irr = 0
    for b, c, d, e, f in itertools.product(range(p), repeat=5):
        A = [[-2*d, f, 0, -e, 0, 0],
             [0, d, 0, 0, 2*f, e],
             [2*b, -c, 0, -f, 0, 0],
             [0, 0, 0, b, -2*f, 0],
             [0, b, -2*c, d, 2*e, 0]]
        if 6 - rank_mod(A, p) > 2:
            irr += 1
    # coordinates (a,b,c,d,e,f) = X_a1, X_a1+a2, X_a1+2a2, X_-a2, X_-a1-2a2, H
    i = sqrt_m1(p)
    def in_union(b, c, d, e, f):
        return ((b == 0 and e == 0 and f == 0) or     # <a, c, d>
                (d == 0 and e == 0 and f == 0) or     # <a, b, c>
                (c == 0 and e == 0 and f == 0) or     # <a, b, d>
                (b == 0 and c == 0 and f == 0) or     # <a, d, e>
                (e == 0 and f == 0 and b == (i * d) % p) or
                (e == 0 and f == 0 and b == (-i * d) % p))
    union = sum(1 for v in itertools.product(range(p), repeat=5) if in_union(*v))
    return irr * p, union * p

for p in map(int, sys.argv[1:] or [5, 13, 17]):
    print(p, *count(p))
