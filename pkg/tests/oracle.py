"""Independent expression-level transcription used to freeze fixture values.

Works on plain sympy expressions with ``cancel`` and shares no code with the
ring-based kernel under ``src/``.
"""
import sympy as sp

x, y = sp.symbols("x y")
X = (x, y)
d_up = {(1, 2): 1, (2, 1): -1, (1, 1): 0, (2, 2): 0}


def D(f, v, n=1):
    return sp.cancel(sp.diff(f, v, n))


def pipeline(P, Q, R, S):
    P, Q, R, S = (sp.sympify(t) for t in (P, Q, R, S))
    c = sp.cancel
    A = c(D(P, y, 2) - 2 * D(D(Q, x), y) + D(R, x, 2) + 2 * P * D(S, x) + S * D(P, x)
          - 3 * P * D(R, y) - 3 * R * D(P, y) - 3 * Q * D(R, x) + 6 * Q * D(Q, y))
    B = c(D(S, x, 2) - 2 * D(D(R, x), y) + D(Q, y, 2) - 2 * S * D(P, y) - P * D(S, y)
          + 3 * S * D(Q, x) + 3 * Q * D(S, x) + 3 * R * D(Q, y) - 6 * R * D(R, x))
    G = c(-B * D(B, x) - 3 * A * D(B, y) + 4 * B * D(A, y) + 3 * S * A**2 - 6 * R * B * A + 3 * Q * B**2)
    H = c(-A * D(A, y) - 3 * B * D(A, x) + 4 * A * D(B, x) - 3 * P * B**2 + 6 * Q * A * B - 3 * R * A**2)
    F5 = c((A * G + B * H) / 3)
    out = dict(A=A, B=B, G=G, H=H, F5=F5)
    if A == 0 and B == 0 or F5 != 0:
        return out
    if A != 0:
        N = c(-H / (3 * A))
        K = B * P + D(A, x)
        phi = (c(-3 * K / (5 * A) + sp.Rational(3, 5) * Q),
               c(3 * B * K / (5 * A**2) - 3 * (D(B, x) + D(A, y) + 3 * B * Q) / (5 * A) + sp.Rational(6, 5) * R))
        M = c(-12 * B * N * K / (5 * A) + B * D(N, x) + sp.Rational(24, 5) * B * N * Q
              + sp.Rational(6, 5) * N * D(B, x) + sp.Rational(6, 5) * N * D(A, y)
              - A * D(N, y) - sp.Rational(12, 5) * A * N * R)
    else:
        N = c(G / (3 * B))
        K = A * S - D(B, y)
        phi = (c(-3 * A * K / (5 * B**2) - 3 * (D(A, y) + D(B, x) - 3 * A * R) / (5 * B) - sp.Rational(6, 5) * Q),
               c(3 * K / (5 * B) - sp.Rational(3, 5) * R))
        M = c(-12 * A * N * K / (5 * B) - A * D(N, y) + sp.Rational(24, 5) * A * N * R
              - sp.Rational(6, 5) * N * D(A, y) - sp.Rational(6, 5) * N * D(B, x)
              + B * D(N, x) - sp.Rational(12, 5) * B * N * Q)
    Omega = c(sp.Rational(5, 3) * (D(phi[0], y) - D(phi[1], x)))
    if A != 0:
        g1 = c(6 * N * K / (5 * A) - D(N, x) - sp.Rational(6, 5) * N * Q - 2 * Omega * A)
        g2 = c(-6 * B * N * K / (5 * A**2) + 18 * N * B * Q / (5 * A) + 6 * N * (D(B, x) + D(A, y)) / (5 * A)
               - D(N, y) - sp.Rational(12, 5) * N * R - 2 * Omega * B)
    else:
        g1 = c(6 * A * N * K / (5 * B**2) - 18 * N * A * R / (5 * B) + 6 * N * (D(A, y) + D(B, x)) / (5 * B)
               - D(N, x) + sp.Rational(12, 5) * N * Q - 2 * Omega * A)
        g2 = c(-6 * N * K / (5 * B) - D(N, y) + sp.Rational(6, 5) * N * R - 2 * Omega * B)
    C, Dv = g2, c(-g1)
    th = {}
    vals = {0: P, 1: Q, 2: R, 3: S}
    for i in (1, 2):
        for j in (1, 2):
            for k in (1, 2):
                th[(i, j, k)] = vals[(i - 1) + (j - 1) + (k - 1)]
    Gam = {}
    for k in (1, 2):
        for i in (1, 2):
            for j in (1, 2):
                t = sum(d_up[(k, r)] * th[(r, i, j)] for r in (1, 2))
                t -= (phi[i - 1] * int(k == j) + phi[j - 1] * int(k == i)) / sp.Integer(3)
                Gam[(k, i, j)] = c(t)

    def Rt(k, r, i, j):
        e = D(Gam[(k, j, r)], X[i - 1]) - D(Gam[(k, i, r)], X[j - 1])
        e += sum(Gam[(k, i, q)] * Gam[(q, j, r)] - Gam[(k, j, q)] * Gam[(q, i, r)] for q in (1, 2))
        return c(e)

    Rop = {(k, q): Rt(k, q, 1, 2) for k in (1, 2) for q in (1, 2)}
    trR = c(Rop[1, 1] + Rop[2, 2])
    detR = c(Rop[1, 1] * Rop[2, 2] - Rop[1, 2] * Rop[2, 1])
    Disc = c(trR**2 - 4 * detR)
    out.update(N=N, M=M, phi=phi, Omega=Omega, gamma_vec=(C, Dv), Gamma=Gam, Rop=Rop,
               trR=trR, detR=detR, Disc=Disc)
    if M == 0:
        return out

    # covariant derivative along vectors; weight-m scalar s: d_k s + m phi_k s
    def nab_scalar(s, m):
        return [c(D(s, X[k]) + m * phi[k] * s) for k in range(2)]

    def nab_vec(v, m):
        # v^i, returns [k][i]
        return [[c(D(v[i], X[k]) + sum(Gam[(i + 1, k + 1, q + 1)] * v[q] for q in range(2)) + m * phi[k] * v[i])
                 for i in range(2)] for k in range(2)]

    al = (B, c(-A))
    ga = (C, Dv)

    def along(vec, nab):
        return [c(vec[0] * nab[0][i] + vec[1] * nab[1][i]) for i in range(2)]

    def solve(v):
        det = al[0] * ga[1] - al[1] * ga[0]
        c1 = c((v[0] * ga[1] - v[1] * ga[0]) / det)
        c2 = c((al[0] * v[1] - al[1] * v[0]) / det)
        return c1, c2

    na, ng = nab_vec(al, 2), nab_vec(ga, 3)
    aa = solve(along(al, na)); ag = solve(along(al, ng)); gaa = solve(along(ga, na)); gg = solve(along(ga, ng))
    exp = {"G1_11": aa[0], "G2_11": aa[1], "G1_12": ag[0], "G2_12": ag[1],
           "G1_21": gaa[0], "G2_21": gaa[1], "G1_22": gg[0], "G2_22": gg[1]}
    I1 = c(M / N**2)
    I2 = c(Omega**2 / N)
    I3 = c(exp["G1_22"] * N**2 / M**2)

    def dal(s):
        return c(al[0] * D(s, x) + al[1] * D(s, y))

    def dga(s):
        return c(ga[0] * D(s, x) + ga[1] * D(s, y))

    I = {1: I1, 2: I2, 3: I3}
    for k in (1, 2, 3):
        I[k + 3] = c(dal(I[k]) / N)
        I[k + 6] = c(dga(I[k])**2 / N**3)
    out.update(expansion=exp, I=I)
    return out


if __name__ == "__main__":
    import sys
    for P in sys.argv[1:]:
        o = pipeline(P, 0, 0, 0)
        for k, v in o.items():
            print(k, "=", v)
