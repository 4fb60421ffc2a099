#!/usr/bin/env python3
"""Independent high-precision oracles for the frozen test values.

Nothing here shares code with the C++ implementation. Piecewise-linear
profiles are handled exactly with sympy:

* Hs norms go through the one-dimensional odd extension g(x) = x*phi(|x|):
  ||phi||^2_{Hs(R^3)} = 2*pi * ||g||^2_{Hs(R)}, and the 1-D Gagliardo form
  integrates the exact piecewise polynomial P(h) = int |g(x+h)-g(x)|^2 dx.
* Coulomb energies use Newton's theorem in exact rational arithmetic.

Gaussian quantities come from closed forms or mpmath quadrature.

Run:  python3 tests/oracles/oracles.py
"""

import itertools

import mpmath as mp
import sympy as sp

mp.mp.dps = 30
x, h, r, t = sp.symbols("x h r t", real=True)


def tent_pieces(eps, R, S):
    """Profile pieces (lo, hi, expr(r)) of the tent, exact rationals."""
    eps, R, S = sp.nsimplify(eps), sp.nsimplify(R), sp.nsimplify(S)
    return [
        (R - S, R, eps * (r - (R - S)) / S),
        (R, R + S, eps * ((R + S) - r) / S),
    ]


def odd_extension(pieces):
    """Pieces of g(x) = x*phi(|x|) on the whole line."""
    out = []
    for lo, hi, e in pieces:
        out.append((lo, hi, sp.expand(x * e.subs(r, x))))
        out.append((-hi, -lo, sp.expand(x * e.subs(r, -x))))
    return sorted(out, key=lambda p: p[0])


def g_at(pieces, xv):
    for lo, hi, e in pieces:
        if lo <= xv <= hi:
            return e
    return sp.Integer(0)


def hs_squared_exact(pieces, s):
    """||phi||^2_{Hs(R^3)} for a piecewise-polynomial radial profile."""
    s = sp.nsimplify(s)
    g = odd_extension(pieces)
    breaks = sorted({p[0] for p in g} | {p[1] for p in g})
    diffs = sorted({b - a for a in breaks for b in breaks if b - a >= 0})
    total = sp.Integer(0)
    for ha, hb in zip(diffs[:-1], diffs[1:]):
        hm = (ha + hb) / 2
        # Same combinatorial ordering holds on the whole open h-interval.
        symbolic = sorted(set(breaks) | {b - h for b in breaks},
                          key=lambda e: e.subs(h, hm))
        P = sp.Integer(0)
        for a, b in zip(symbolic[:-1], symbolic[1:]):
            mid = ((a + b) / 2).subs(h, hm)
            e1 = g_at(g, mid + hm).subs(x, x + h)
            e0 = g_at(g, mid)
            if e1 == 0 and e0 == 0:
                continue
            P += sp.integrate(sp.expand((e1 - e0) ** 2), (x, a, b))
        P = sp.expand(P)
        poly = sp.Poly(P, h)
        for (k,), c in poly.terms():
            ex = k - 1 - 2 * s
            if ex == -1:
                total += c * sp.log(hb / ha)
            else:
                assert ha != 0 or ex + 1 > 0, "non-integrable term at h=0"
                total += c * (hb ** (ex + 1) - ha ** (ex + 1)) / (ex + 1)
    hmax = diffs[-1]
    g2 = sum(sp.integrate(e ** 2, (x, lo, hi)) for lo, hi, e in g)
    total += 2 * g2 * hmax ** (-2 * s) / (2 * s)
    c1 = 2 ** (2 * s - 1) * sp.gamma(sp.Rational(1, 2) + s) / (
        sp.sqrt(sp.pi) * sp.Abs(sp.gamma(-s)))
    return 2 * sp.pi * c1 * 2 * total


def coulomb_exact(pieces):
    """D = 2 (4 pi)^2 int r f(r) A(r) dr, f = phi^2, A(r) = int_0^r t^2 f."""
    D = sp.Integer(0)
    acc = sp.Integer(0)
    for lo, hi, e in pieces:
        f = sp.expand(e ** 2)
        A = acc + sp.integrate((t ** 2) * f.subs(r, t), (t, lo, r))
        D += sp.integrate(sp.expand(r * f * A), (r, lo, hi))
        acc = A.subs(r, hi)
    return 2 * (4 * sp.pi) ** 2 * D


def num(v):
    return mp.mpf(sp.N(v, 30))


def main():
    out = {}
    g = lambda rr: mp.e ** (-rr * rr / 2)

    # Gaussian closed forms.
    out["gauss_l2"] = mp.pi ** mp.mpf(0.75)
    out["gauss_h1"] = mp.sqrt(mp.mpf(1.5) * mp.pi ** 1.5)
    out["gauss_hhalf"] = mp.sqrt(2 * mp.pi)
    out["gauss_coulomb"] = mp.sqrt(2) * mp.pi ** 2.5
    out["gauss_energy_s1"] = mp.sqrt(out["gauss_h1"] ** 2 + mp.sqrt(out["gauss_coulomb"]))
    out["gauss_l4"] = (mp.pi / 2) ** (mp.mpf(3) / 8)
    out["gauss_J_s1_2p4"] = out["gauss_l4"] / (
        out["gauss_h1"] ** (mp.mpf(2) / 3) * out["gauss_coulomb"] ** (mp.mpf(1) / 12))
    out["gauss_decay_s1_q2_a0"] = mp.e ** -0.5 / mp.sqrt(out["gauss_h1"] * out["gauss_l2"])

    ruiz = lambda f, a: 4 * mp.pi * (
        mp.quad(lambda rr: rr ** 1.5 * f(rr) ** 2 / (1 + abs(mp.log(rr))) ** a, [0, 1])
        + mp.quad(lambda rr: rr ** 1.5 * f(rr) ** 2 / (1 + abs(mp.log(rr))) ** a, [1, mp.inf]))
    out["gauss_ruiz_a1"] = ruiz(g, 1)

    # Tent(1,2,1).
    tp = tent_pieces(1, 2, 1)
    tent = lambda rr: max(0, 1 - abs(rr - 2)) if 1 <= rr <= 3 else 0
    out["tent_l2"] = mp.sqrt(mp.mpf(164) * mp.pi / 15)
    out["tent_dirichlet"] = mp.sqrt(mp.mpf(104) * mp.pi / 3)
    out["tent_coulomb"] = num(coulomb_exact(tp))
    for sv in ("3/5", "3/4", "9/10", "1/2", "5/4"):
        if sv == "5/4":
            continue  # 1-D Gagliardo form needs s < 1
        out["tent_hs_" + sv] = mp.sqrt(num(hs_squared_exact(tp, sp.Rational(sv))))
    out["tent_ruiz_a1"] = 4 * mp.pi * sum(
        mp.quad(lambda rr: rr ** 1.5 * tent(rr) ** 2 / (1 + abs(mp.log(rr))), [a, b])
        for a, b in ((1, 2), (2, 3)))

    # Tent(1,10,1) pointwise decay at s=0.8, q=2, a=-0.6.
    tp10 = tent_pieces(1, 10, 1)
    hs08 = mp.sqrt(num(hs_squared_exact(tp10, sp.Rational(4, 5))))
    tent10 = lambda rr: 1 - abs(rr - 10)
    l2a = mp.sqrt(4 * mp.pi * (mp.quad(lambda rr: rr ** 1.4 * tent10(rr) ** 2, [9, 10, 11])))
    theta, sigma = mp.mpf(2) / mp.mpf(3.2), mp.mpf(2.84) / mp.mpf(3.2)
    out["tent10_hs_0.8"] = hs08
    out["tent10_l2_am0.6"] = l2a
    out["tent10_decay"] = mp.mpf(10) ** sigma / (hs08 ** theta * l2a ** (1 - theta))

    # Two-Gaussian mixture fixture: 1.0 e^{-0.4 r^2} + 0.6 e^{-2.5 r^2}.
    cs, ws = [mp.mpf(1), mp.mpf("0.6")], [mp.mpf("0.4"), mp.mpf("2.5")]
    for sv in ("0.6", "0.75", "0.9", "1.0"):
        s = mp.mpf(sv)
        acc = 0
        for (ci, ai), (cj, aj) in itertools.product(zip(cs, ws), repeat=2):
            b = 1 / (4 * ai) + 1 / (4 * aj)
            acc += ci * cj * (2 * ai) ** -1.5 * (2 * aj) ** -1.5 * 4 * mp.pi * mp.gamma(s + 1.5) / (2 * b ** (s + 1.5))
        out["mix_hs_" + sv] = mp.sqrt(acc)
    dens = [(ci * cj, ai + aj) for (ci, ai), (cj, aj) in itertools.product(zip(cs, ws), repeat=2)]
    D = 0
    for (d1, b1), (d2, b2) in itertools.product(dens, repeat=2):
        D += d1 * d2 * (mp.pi / b1) ** 1.5 * (mp.pi / b2) ** 1.5 * 2 / mp.sqrt(mp.pi) * mp.sqrt(b1 * b2 / (b1 + b2))
    out["mix_coulomb"] = D

    # Pitt constants.
    for sv in ("0.5", "1.0", "0.75"):
        s = mp.mpf(sv)
        out["pitt_" + sv] = mp.pi ** (2 * s) * (mp.gamma((3 - 2 * s) / 4) / mp.gamma((3 + 2 * s) / 4)) ** 2

    for k, v in out.items():
        print(f"{k:24s} {mp.nstr(v, 17)}")


if __name__ == "__main__":
    main()
