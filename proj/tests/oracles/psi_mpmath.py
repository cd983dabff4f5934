"""High-precision reference values for the Psi integral and the mirror correction.

Psi(v) = PV int exp(i v s) / (a cosh^2 s + b cosh s + c) ds over the real line, folded to
2 int_0^inf cos(v s) / D(s) ds, with any real pole s0 > 0 removed by symmetric pairing.
"""
import mpmath as mp

mp.mp.dps = 50


def psi(v, a, b, c):
    v, a, b, c = map(mp.mpf, (v, a, b, c))
    D = lambda s: (a * mp.cosh(s) + b) * mp.cosh(s) + c
    f = lambda s: mp.cos(v * s) / D(s)
    if a != 0:
        disc = b * b - 4 * a * c
        roots = [(-b + mp.sqrt(disc)) / (2 * a), (-b - mp.sqrt(disc)) / (2 * a)] if disc >= 0 else []
    else:
        roots = [-c / b]
    poles = [mp.acosh(r) for r in roots if r > 1]
    assert len(poles) <= 1
    end = mp.mpf(90)
    if not poles:
        return 2 * mp.quad(f, mp.linspace(0, end, 181))
    s0 = poles[0]
    # Gauss-Legendre keeps nodes away from t = 0, where the pairing cancels catastrophically.
    pair = mp.quad(lambda t: f(s0 + t) + f(s0 - t), mp.linspace(0, s0, 9), method="gauss-legendre")
    rest = mp.quad(f, mp.linspace(2 * s0, 2 * s0 + end, 181))
    return 2 * (pair + rest)


def correction(alpha, alpha0, eta, nu):
    alpha, alpha0, eta, nu = map(mp.mpf, (alpha, alpha0, eta, nu))
    ca, sa = mp.cos(alpha), mp.sin(alpha)
    A = sa**2
    B = -2 * alpha0 * ca * mp.cosh(eta)
    C = -1 - alpha0**2 - ca**2 * mp.sinh(eta) ** 2
    K = 1 / (16 * mp.pi**2)
    W0 = nu / (4 * mp.pi * mp.tanh(mp.pi * nu))
    return -2 * K * psi(2 * nu, A, B, C) / W0


if __name__ == "__main__":
    psi_cases = [
        (0.7, 0.5, 0.3, -1.2),
        (1.3, 0.2, -0.4, -1.0),
        (0.0, 0.5, 0.3, -1.2),
        (2.5, 0.0, 0.8, -1.5),
        (0.4, 0.0, -0.6, -1.1),
        (1.1, 0.0, 0.5, -2.0),
        (0.9, 0.9, 0.0, -3.0),
        (0.3, 0.3, -1.5, -2.0),
    ]
    for case in psi_cases:
        print("psi", case, mp.nstr(psi(*case), 17))
    r_cases = [
        (0.6, 0.8, 0.0, 0.7),
        (0.6, 0.8, 1.2, 1.5),
        (1.2, 2.0, -0.5, 0.3),
        (0.0, 0.8, 0.0, 0.7),
        (0.0, -0.5, 0.7, 1.1),
    ]
    for case in r_cases:
        print("R", case, mp.nstr(correction(*case), 17))
