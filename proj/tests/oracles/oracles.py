"""Independent reference values frozen into the C++ tests.

Everything here is computed by brute force in a large Fock basis (scipy expm,
explicit sums) or by direct numpy quadrature of the closed-form fields, never
through the catdeco code paths. Run: python3 tests/oracles/oracles.py
"""
import math

import numpy as np
from scipy.linalg import expm

CUT = 140


def ladder(n):
    return np.diag(np.sqrt(np.arange(1, n + 1)), 1)


def cat_vector(beta, parity, cut=CUT):
    n = np.arange(cut + 1)
    logc = n * math.log(beta) - 0.5 * np.array([math.lgamma(k + 1) for k in n]) - 0.5 * beta**2
    coh = np.exp(logc)
    v = coh * (1 + parity * (-1.0) ** n)
    return v / np.linalg.norm(v)


def displacement(g, cut=CUT):
    a = ladder(cut + 1)[: cut + 1, : cut + 1]
    return expm(g * a.conj().T - np.conj(g) * a)


def diffusive_wigner(beta, parity, delta, x, y):
    n2 = 1 / (2 * (1 + parity * math.exp(-2 * beta**2)))
    s = 1 + 2 * delta
    a = 2 / s
    return 2 * n2 / (math.pi * s) * (
        np.exp(-a * ((x - beta) ** 2 + y**2))
        + np.exp(-a * ((x + beta) ** 2 + y**2))
        + parity * 2 * np.exp(-a * (x**2 + y**2) - 4 * beta**2 * delta / s) * np.cos(4 * beta * y / s)
    )


def main():
    # <a+a> of cats by explicit sum
    for beta in (2.0, 3.0):
        c = cat_vector(beta, +1)
        print(f"mean_photon even beta={beta}: {np.sum(np.arange(CUT + 1) * c**2):.15g}")

    # symmetric characteristic function <D(gamma)> of the even cat, beta = 3
    g = 1j * math.pi / 12
    c = cat_vector(3.0, +1)
    chi = c.conj() @ displacement(g) @ c
    print(f"chi even beta=3 at i*pi/12: {chi.real:.15g} {chi.imag:.3g}")
    for g in (46 * math.pi / 24, 10 * math.pi / 24 + 3j * math.pi / 24):
        chi = c.conj() @ displacement(g) @ c
        print(f"chi even beta=3 at {g:.12g}: {chi.real:.15g} {chi.imag:.3g}")

    # Husimi at the origin, even cat beta = 3: |<0|psi>|^2 / pi
    print(f"Q(0) even beta=3: {abs(c[0])**2 / math.pi:.15g}")

    # fine-grid quadrature of the negative part of the odd cat, beta = 3
    h = 0.0025
    x = np.arange(-3.0, 3.0 + h / 2, h)
    X, Y = np.meshgrid(x, x)
    w = diffusive_wigner(3.0, -1, 0.0, X, Y)
    print(f"negativity volume odd beta=3: {np.sum(np.maximum(0, -w)) * h * h:.10g}")

    # purity pi * int W^2 after delta = 0.5 pure diffusion, beta = 2 even
    x = np.arange(-10.0, 10.0 + 0.01 / 2, 0.01)
    X, Y = np.meshgrid(x, x)
    w = diffusive_wigner(2.0, +1, 0.5, X, Y)
    print(f"purity even beta=2 delta=0.5: {math.pi * np.sum(w * w) * 1e-4:.12g}")


if __name__ == "__main__":
    main()
