"""Independent oracles for the frozen expected values used in the C++ tests.

Run with `python3 tests/oracles/frozen_values.py`. Uses exact fractions where
the quantity is rational and mpmath at 50 digits elsewhere.
"""
from fractions import Fraction as F
import mpmath as mp

mp.mp.dps = 50


def build_candidate(p, i, plus, step, sig):
    q = list(p)
    q[i] += step if plus else -step
    for l in sig:
        q[l] += (-step if plus else step) / len(sig)
    return q


def feasible(q):
    return all(x >= 0 for x in q) and sum(q) == 1


def backoff(p, i, plus, s, rho, phi, lam):
    sig = [l for l in range(len(p)) if l != i and p[l] > lam]
    if not sig:
        return None
    while s > phi:
        q = build_candidate(p, i, plus, s, sig)
        if feasible(q):
            return s, q
        s = s / rho
    return None


third = F(1, 3)
q = build_candidate([third] * 3, 0, True, F(3, 10), [1, 2])
print("build (1/3..) plus 0.3:", [float(x) for x in q], "sum", sum(q))
print("backoff (0.9,.05,.05):", backoff([F(9, 10), F(1, 20), F(1, 20)], 0, True, F(1), F(2), F(1, 1000), F(1, 1000)))
print("backoff (0.5,0.5) minus:", backoff([F(1, 2), F(1, 2)], 0, False, F(1), F(2), F(1, 1000), F(1, 1000)))
print("sqdist:", float((F(25, 100) - F(8, 10)) ** 2 + (F(75, 100) - F(2, 10)) ** 2))

def npdf(x, mu, var):
    d2 = sum((a - b) ** 2 for a, b in zip(x, mu))
    return mp.exp(-d2 / (2 * var)) / (2 * mp.pi * var)

mu1, mu2 = [mp.mpf('0.25'), mp.mpf('0.75')], [mp.mpf('0.8'), mp.mpf('0.2')]
var = mp.mpf('0.1')
for pt in (mu1, mu2):
    a, b = 8 * npdf(pt, mu1, var), 5 * npdf(pt, mu2, var)
    print("gauss at", pt, "terms", mp.nstr(a, 17), mp.nstr(b, 17), "-> min form", mp.nstr(-max(a, b), 17))

print("easom vertex:", mp.nstr(-mp.exp(-6 * mp.pi ** 2), 17))
print("power4 uniform n=3:", -F(6, 81), float(-F(6, 81)))
print("griewank d=1 x=pi:", mp.nstr(mp.pi ** 2 / 4000 + 2, 17))
print("rastrigin d=1 x=0.5:", 10 + 0.25 + 10)
