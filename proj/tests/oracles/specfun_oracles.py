"""Reference values for the special-function unit tests, computed with mpmath at 40 digits.

Run: python3 tests/oracles/specfun_oracles.py
The printed initializer lists are pasted into tests/unit/test_specfun.cpp and test_weber.cpp.
"""
import mpmath as mp

mp.mp.dps = 40


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (repr(float(z.real)), repr(float(z.imag)))


def ci(z):
    z = complex(*z) if isinstance(z, tuple) else complex(z)
    return "{%r, %r}" % (z.real, z.imag)


def theta(p, z):
    p, z = mp.mpc(p), mp.mpc(z)
    if z.real >= 0:
        return mp.hyperu(p, 0.5, z * z)
    return 2 * mp.sqrt(mp.pi) * mp.hyp1f1(p, 0.5, z * z) / mp.gamma(p + 0.5) - mp.hyperu(p, 0.5, z * z)


def weber(lam, z):
    lam, z = mp.mpc(lam), mp.mpc(z)
    g = mp.exp(-z * z / 2)
    w1 = g * mp.hyp1f1((1 - lam) / 4, 0.5, z * z)
    w2 = g * z * mp.hyp1f1((3 - lam) / 4, 1.5, z * z)
    return w1, w2


def table(name, rows):
    print("// %s" % name)
    for r in rows:
        print("    {" + ", ".join(r) + "},")
    print()


gamma_pts = [0.5, 5, -2.5, (0.3, 2.0), (-3.7, 1.2), (12.0, -7.0), (0.1, -0.01)]
table("gamma: z, Gamma(z)", [[ci(z), c(mp.gamma(mp.mpc(*z) if isinstance(z, tuple) else z))] for z in gamma_pts])

phi_pts = [((1, 0), (2, 0), (1, 0)), ((0.25, 0.1), (0.5, 0), (3, 1)), ((-2.5, 1), (1.5, -0.5), (-8, 2)),
           ((0.7, 0), (1.3, 0.2), (25, 5)), ((1.5, -2), (0.5, 0), (-30, -4)), ((0.2, 0.3), (2.5, 0), (0.5, 12))]
table("phi: p, q, z, 1F1", [[ci(p), ci(q), ci(z), c(mp.hyp1f1(mp.mpc(*p), mp.mpc(*q), mp.mpc(*z)))] for p, q, z in phi_pts])

theta_pts = [((0, 0), (3, 1)), ((0.25, 0), (1.5, 0.5)), ((-1.72003, -2.44759), (0.419633, 2.99799)),
             ((0.6, -0.3), (-2.0, 1.0)), ((-0.5, 0.5), (0.2, -0.1)), ((1.2, 0.4), (9.0, 3.0))]
table("theta: p, z, Theta", [[ci(p), ci(z), c(theta(mp.mpc(*p), mp.mpc(*z)))] for p, z in theta_pts])

airy_pts = [(0, 0), (1, 0), (-3, 0), (2, 2), (-5, 1), (12, -4), (-15, -0.5), (0.5, -6)]
table("airy: z, Ai, Bi", [[ci(z), c(mp.airyai(mp.mpc(*z))), c(mp.airybi(mp.mpc(*z)))] for z in airy_pts])

weber_pts = [((0, 0), (1.3, 0)), ((2, 1), (1.3, 0)), ((1, 0), (-2.5, 0.4)), ((-3.2, 1.5), (0.7, 2.2)), ((5, 0), (4, 0))]
rows = []
for lam, z in weber_pts:
    w1, w2 = weber(mp.mpc(*lam), mp.mpc(*z))
    rows.append([ci(lam), ci(z), c(w1), c(w2)])
table("weber: lambda, z, w1, w2", rows)
