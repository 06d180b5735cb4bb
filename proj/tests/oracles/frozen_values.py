#!/usr/bin/env python3
"""Arbitrary-precision reference values frozen into the C++ unit tests.

Development tool only. Every value here is computed from first principles
(power series at 50 digits, ODE Frobenius series for the radial systems)
and never calls into the C++ library.

    python3 tests/oracles/frozen_values.py
"""
import mpmath as mp

mp.mp.dps = 50


def rgamma(z):
    if z <= 0 and z == mp.floor(z):
        return mp.mpf(0)
    return 1 / mp.gamma(z)


def kummer_regularized(a, b, x, terms=60):
    a, b, x = mp.mpf(a), mp.mpf(b), mp.mpf(x)
    return mp.fsum(mp.rf(a, n) * x**n * rgamma(b + n) / mp.factorial(n)
                   for n in range(terms))


def kummer_regularized_converged(a, b, x):
    a, b, x = mp.mpf(a), mp.mpf(b), mp.mpf(x)
    s, n = mp.mpf(0), 0
    while True:
        term = mp.rf(a, n) * x**n * rgamma(b + n) / mp.factorial(n)
        s += term
        if n > 30 and abs(term) < mp.mpf(10) ** -45 * max(abs(s), mp.mpf(10) ** -300):
            return s
        n += 1


def laguerre(nu, alpha, x):
    nu, alpha = mp.mpf(nu), mp.mpf(alpha)
    return mp.gamma(nu + alpha + 1) / mp.gamma(nu + 1) * \
        kummer_regularized_converged(-nu, alpha + 1, x)


def exp_remainder(k, t):
    t = mp.mpf(t)
    return mp.exp(t) - mp.fsum(t**j / mp.factorial(j) for j in range(k + 1))


def frobenius(A, B, c, t, m, n_terms=200):
    """Regular branch r^m * sum y_j r^{2j} of y'' + A/r y' - (B/r^2 + c + t^2 r^2) y = 0."""
    co = [mp.mpf(1)]
    for j in range(1, n_terms):
        n = m + 2 * j
        d = n * (n - 1) + A * n - B
        co.append((c * co[j - 1] + (t * t * co[j - 2] if j >= 2 else 0)) / d)
    val = mp.fsum(cc for cc in co)
    der = mp.fsum(cc * (m + 2 * j) for j, cc in enumerate(co))
    return val, der


def b4_coexact_oracle(k, p, linear, t):
    t = mp.mpf(t)
    val, der = frobenius(1, (k + 1) ** 2, 2 * t * linear, t, k + 1)
    return der / val


def b4_exact_oracle(k, p, t):
    t = mp.mpf(t)
    c = 2 * (2 * p - k) * t
    z, dz = frobenius(2 * k + 1, 0, c, t, 0)
    w, dw = frobenius(2 * k + 1, 4 * k + 4, c, t, 2)
    beta = -k * z / ((k + 2) * w)
    q = z - beta * w
    dq = dz - beta * dw
    return k + dq / q


def show(name, v):
    print(f"{name} = {mp.nstr(v, 25)}")


if __name__ == "__main__":
    show("kummer(-1.5,-1,0.7)", kummer_regularized(-1.5, -1, 0.7))
    show("laguerre(-1/2,-1,1)", laguerre(mp.mpf(-1) / 2, -1, 1))
    show("exp_remainder(3,-2)", exp_remainder(3, -2))
    show("exp_remainder(1,1e-6)", exp_remainder(1, mp.mpf("1e-6")))
    show("1/(e-2)", 1 / (mp.e - 2))
    show("2coth(1)", 2 * mp.coth(1))
    show("b4 exact k1 p0 t1e-4", b4_exact_oracle(1, 0, mp.mpf("1e-4")))
    show("b4 exact k1 p0 t1", b4_exact_oracle(1, 0, 1))
    show("b4 exact k2 p1 t0.5", b4_exact_oracle(2, 1, mp.mpf("0.5")))
    show("b4 exact k2 p2 t0.5", b4_exact_oracle(2, 2, mp.mpf("0.5")))
    # Printed co-exact sign '-' couples through 2p-k+1, sign '+' through 2p-k-1.
    show("b4 coexact k1 p0 minus t0.25", b4_coexact_oracle(1, 0, 2 * 0 - 1 + 1, mp.mpf("0.25")))
    show("b4 coexact k1 p0 minus t0.5", b4_coexact_oracle(1, 0, 2 * 0 - 1 + 1, mp.mpf("0.5")))
    show("b4 coexact k1 p1 plus t1e-4", b4_coexact_oracle(1, 1, 2 * 1 - 1 - 1, mp.mpf("1e-4")))
    show("b4 coexact k3 p2 minus t2", b4_coexact_oracle(3, 2, 2 * 2 - 3 + 1, 2))
    s3 = min(min(k * (k + 2) + 2 * (2 * p - k) * mp.mpf("0.5") + mp.mpf("0.25"),
                 (k + 1) ** 2 + 2 * mp.mpf("0.5") * (2 * p - k + 1) + mp.mpf("0.25"),
                 (k + 1) ** 2 + 2 * mp.mpf("0.5") * (2 * p - k - 1) + mp.mpf("0.25"))
             for k in range(1, 51) for p in range(k + 1))
    show("s3 first t=0.5 (k<=50)", s3)
    crossing = mp.findroot(lambda t: b4_exact_oracle(1, 0, t) - mp.mpf(3) / 2, 3)
    show("b4 exact k1 p0 crossing of 3/2", crossing)
