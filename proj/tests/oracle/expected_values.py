#!/usr/bin/env python3
"""Independent recomputation of the frozen constants used in the C++ tests.

Everything here is derived with Python's exact Fraction arithmetic and a
brute-force/closed-form route that does not share code with the library.
Run it to regenerate the values; the C++ tests assert the same numbers.
"""

from fractions import Fraction as F
import random

HALF = F(1, 2)


# ---------------------------------------------------------------------------
# Boole's rule, exact
# ---------------------------------------------------------------------------

def boole_nodes(a, b):
    return [a, (3 * a + b) / 4, (a + b) / 2, (a + 3 * b) / 4, b]


def boole_exact(coeffs, a, b):
    """Boole sum of the polynomial with the given coefficient list."""
    h = (b - a) / 4
    w = [7, 32, 12, 32, 7]
    nodes = boole_nodes(a, b)
    return (2 * h / 45) * sum(wi * poly_eval(coeffs, t) for wi, t in zip(w, nodes))


def poly_eval(coeffs, t):
    acc = F(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def poly_integral(coeffs, a, b):
    """Term-wise antiderivative, evaluated between the endpoints."""
    total = F(0)
    for i, c in enumerate(coeffs):
        total += F(c, i + 1) * (b ** (i + 1) - a ** (i + 1))
    return total


def monomial(k):
    return [F(0)] * k + [F(1)]


def poly_derivative(coeffs):
    return [F(i) * c for i, c in enumerate(coeffs)][1:] or [F(0)]


def poly_mul(p, q):
    out = [F(0)] * (len(p) + len(q) - 1)
    for i, ci in enumerate(p):
        for j, cj in enumerate(q):
            out[i + j] += ci * cj
    return out


# ---------------------------------------------------------------------------
# Peano kernels: forward-substitution solve of the coefficient chains
# ---------------------------------------------------------------------------

def kernel_solve(order, a, b):
    """Returns the 4 segment coefficient lists (constant term first)."""
    w = b - a
    rhs = [F(-7, 90) * w, F(32, 90) * w, F(12, 90) * w, F(32, 90) * w, F(7, 90) * w]
    if order == 1:
        alpha = F(1)
        beta = [rhs[0] - a]
        for j in (1, 2, 3):
            beta.append(beta[-1] - rhs[j])
        assert b + beta[3] == rhs[4]
        return [[beta[i], alpha] for i in range(4)]
    if order == 2:
        alpha = HALF
        beta = [rhs[0] - a]
        for j in (1, 2, 3):
            beta.append(beta[-1] - rhs[j])
        assert b + beta[3] == rhs[4]
        breaks = [(3 * a + b) / 4, (a + b) / 2, (a + 3 * b) / 4]
        gamma = [-(alpha * a * a + beta[0] * a)]
        for j in range(3):
            gamma.append((beta[j] - beta[j + 1]) * breaks[j] + gamma[-1])
        assert alpha * b * b + beta[3] * b + gamma[3] == 0
        return [[gamma[i], beta[i], alpha] for i in range(4)]
    if order == 3:
        alpha = F(1, 6)
        beta = [(rhs[0] - a) / 2]
        for j in (1, 2, 3):
            beta.append(beta[-1] - rhs[j] / 2)
        assert b + 2 * beta[3] == rhs[4]
        breaks = [(3 * a + b) / 4, (a + b) / 2, (a + 3 * b) / 4]
        gamma = [-(3 * alpha * a * a + 2 * beta[0] * a)]
        for j in range(3):
            gamma.append(2 * (beta[j] - beta[j + 1]) * breaks[j] + gamma[-1])
        assert 3 * alpha * b * b + 2 * beta[3] * b + gamma[3] == 0
        delta = [-(alpha * a ** 3 + beta[0] * a * a + gamma[0] * a)]
        for j in range(3):
            delta.append((beta[j] - beta[j + 1]) * breaks[j] ** 2
                         + (gamma[j] - gamma[j + 1]) * breaks[j] + delta[-1])
        assert alpha * b ** 3 + beta[3] * b * b + gamma[3] * b + delta[3] == 0
        return [[delta[i], gamma[i], beta[i], alpha] for i in range(4)]
    raise ValueError(order)


def kernel_closed_form(order, a, b):
    beta_full = [-F(83 * a + 7 * b, 1) / 90, -F(17 * a + 13 * b, 1) / 30,
                 -F(13 * a + 17 * b, 1) / 30, -F(7 * a + 83 * b, 1) / 90]
    gamma = [F(19, 45) * a * a + F(7, 90) * a * b,
             F(7, 45) * a * a + F(23, 90) * a * b + F(4, 45) * b * b,
             (a + 2 * b) * (8 * a + 7 * b) / 90,
             b * (7 * a + 38 * b) / 90]
    if order == 1:
        return [[beta_full[i], F(1)] for i in range(4)]
    if order == 2:
        return [[gamma[i], beta_full[i], HALF] for i in range(4)]
    if order == 3:
        beta_h = [x / 2 for x in beta_full]
        delta = [-a * a * (23 * a + 7 * b) / 180,
                 -(F(1, 36) * a ** 3 + F(13, 180) * a * a * b + F(1, 18) * a * b * b + F(1, 90) * b ** 3),
                 -(F(1, 90) * a ** 3 + F(1, 18) * a * a * b + F(13, 180) * a * b * b + F(1, 36) * b ** 3),
                 -b * b * (7 * a + 23 * b) / 180]
        return [[delta[i], gamma[i], beta_h[i], F(1, 6)] for i in range(4)]
    raise ValueError(order)


def segment_supports(a, b):
    n1, n2, n3 = (3 * a + b) / 4, (a + b) / 2, (a + 3 * b) / 4
    return [(a, n1), (n1, n2), (n2, n3), (n3, b)]


def rational_sqrt(x):
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = int(n ** 0.5), int(d ** 0.5)
    for cand_n in (rn - 1, rn, rn + 1):
        if cand_n >= 0 and cand_n * cand_n == n:
            for cand_d in (rd - 1, rd, rd + 1):
                if cand_d > 0 and cand_d * cand_d == d:
                    return F(cand_n, cand_d)
    return None


def segment_critical_points(coeffs, lo, hi):
    d = poly_derivative(coeffs)
    while len(d) > 1 and d[-1] == 0:
        d.pop()
    roots = []
    if len(d) == 2:
        roots = [-d[0] / d[1]]
    elif len(d) == 3:
        A, B, C = d[2], d[1], d[0]
        disc = B * B - 4 * A * C
        s = rational_sqrt(disc)
        assert s is not None, "irrational critical point"
        roots = [(-B - s) / (2 * A), (-B + s) / (2 * A)]
    return sorted(r for r in roots if lo <= r <= hi)


def segment_sup(coeffs, lo, hi):
    cands = [lo, hi] + segment_critical_points(coeffs, lo, hi)
    return max(abs(poly_eval(coeffs, t)) for t in cands)


def kernel_sup(order, a, b):
    segs = kernel_closed_form(order, a, b)
    sups = [segment_sup(c, lo, hi) for c, (lo, hi) in zip(segs, segment_supports(a, b))]
    return sups, max(sups)


def kernel_integral(order, a, b):
    segs = kernel_closed_form(order, a, b)
    return sum(poly_integral(c, lo, hi) for c, (lo, hi) in zip(segs, segment_supports(a, b)))


def kernel_identity_sides(order, a, b, poly):
    segs = kernel_closed_form(order, a, b)
    dp = poly
    for _ in range(order):
        dp = poly_derivative(dp)
    lhs = sum(poly_integral(poly_mul(c, dp), lo, hi)
              for c, (lo, hi) in zip(segs, segment_supports(a, b)))
    rhs = boole_exact(poly, a, b) - poly_integral(poly, a, b)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Monomial study (a = 0, b > 0)
# ---------------------------------------------------------------------------

ESTIMATES = ["t1m", "t1M", "t2m", "t2M", "t3m", "t3M"]
SUP_UNIT = {1: F(11, 60), 2: F(17, 1440), 3: F(1, 1620)}


def falling(k, m):
    out = 1
    for j in range(m):
        out *= k - j
    return out


def monomial_stats(k, b, order):
    assert k >= order
    i_val = falling(k, order - 1) * b ** (k - order)
    m_val = F(falling(k, order)) if k == order else F(0)
    big_m = falling(k, order) * b ** (k - order)
    return i_val, m_val, big_m


def theorem_bound(est, k, b):
    order = int(est[1])
    i_val, m_val, big_m = monomial_stats(k, b, order)
    delta = (i_val - m_val) if est[2] == "m" else (big_m - i_val)
    return SUP_UNIT[order] * delta * b ** (order + 1)


def table_bound(est, k, b):
    v = b ** (k + 1)
    return {
        "t1m": F(11, 6) * v,
        "t1M": F(11, 6) * (k - 1) * v,
        "t2m": F(17, 1440) * k * v,
        "t2M": F(17, 1440) * k * (k - 2) * v,
        "t3m": F(1, 1620) * k * (k - 1) * v,
        "t3M": F(1, 1620) * k * (k - 1) * (k - 3) * v,
    }[est]


def classical_monomial(k, b):
    return b ** (k + 1) * falling(k, 6) / 1935360


def crossover(est, b, source):
    fn = table_bound if source == "table" else theorem_bound
    run = 0
    first = None
    for k in range(6, 201):
        if fn(est, k, b) < classical_monomial(k, b):
            if run == 0:
                first = k
            run += 1
            if run == 3:
                return first
        else:
            run = 0
            first = None
    raise RuntimeError("no crossover")


def main():
    random.seed(20240901)

    print("== Boole sums on [0,1] ==")
    for k in (4, 5, 6):
        print(f"boole(t^{k},[0,1]) = {boole_exact(monomial(k), F(0), F(1))}")
    print(f"integral(t^6,[0,1]) = {poly_integral(monomial(6), F(0), F(1))}")
    print(f"t^6 discrepancy = {boole_exact(monomial(6), F(0), F(1)) - poly_integral(monomial(6), F(0), F(1))}")

    d = 0
    while boole_exact(monomial(d + 1), F(0), F(1)) == poly_integral(monomial(d + 1), F(0), F(1)):
        d += 1
    print(f"degree of exactness = {d}")

    err2 = sum(boole_exact(monomial(6), F(j, 2), F(j + 1, 2)) for j in range(2)) \
        - poly_integral(monomial(6), F(0), F(1))
    print(f"2-panel composite t^6 error = {err2}  (expect (1/2688)/64 = {F(1,2688)/64})")

    print(f"classical bound sup=720 on [0,1] = {F(8,945) * F(1,4)**7 * 720}")

    print("\n== kernel coefficients at (0,1) ==")
    for order in (1, 2, 3):
        assert kernel_solve(order, F(0), F(1)) == kernel_closed_form(order, F(0), F(1))
        print(f"order {order}: {kernel_solve(order, F(0), F(1))}")

    for _ in range(50):
        den_a, den_b = random.randint(1, 1000), random.randint(1, 1000)
        a = F(random.randint(-1000, 1000), den_a)
        b = a + F(random.randint(1, 1000), den_b)
        if b - a < F(1, 100):
            continue
        for order in (1, 2, 3):
            assert kernel_solve(order, a, b) == kernel_closed_form(order, a, b)
            assert kernel_integral(order, a, b) == 0
            sups, total = kernel_sup(order, a, b)
            assert total == SUP_UNIT[order] * (b - a) ** order
    print("random-interval solve==closed-form, integral==0, sup scaling: ok")

    print("\n== sup values on [0,1] ==")
    for order in (1, 2, 3):
        sups, total = kernel_sup(order, F(0), F(1))
        print(f"order {order}: per-segment {sups}, overall {total}")

    print("\n== critical points on [0,1] ==")
    for order in (2, 3):
        segs = kernel_closed_form(order, F(0), F(1))
        for i, (c, (lo, hi)) in enumerate(zip(segs, segment_supports(F(0), F(1)))):
            print(f"order {order} segment {i+1}: {segment_critical_points(c, lo, hi)}")

    print("\n== kernel identity t^0..t^10 ==")
    # Integration by parts gives int K f^(n) = (-1)^(n-1) (Boole(f) - int f):
    # the sign alternates with the order's parity, so order 2 represents the
    # negated error functional.  Verified here exactly and, separately, with
    # a float Simpson integration of K*f'' that shares no code with this file.
    for (a, b) in ((F(0), F(1)), (F(-1), F(3))):
        for order in (1, 2, 3):
            sign = -1 if order == 2 else 1
            for k in range(0, 11):
                lhs, rhs = kernel_identity_sides(order, a, b, monomial(k))
                assert lhs == sign * rhs
    lhs, rhs = kernel_identity_sides(3, F(0), F(1), monomial(6))
    print(f"order 3, t^6 on [0,1]: lhs = {lhs}, rhs = {rhs}")
    lhs, rhs = kernel_identity_sides(2, F(0), F(2), monomial(7))
    print(f"order 2, t^7 on [0,2]: lhs = {lhs}, rhs = {rhs}  (sign flip)")
    lhs, rhs = kernel_identity_sides(2, F(0), F(1), monomial(6))
    print(f"order 2, t^6 on [0,1]: lhs = {lhs}, rhs = {rhs}  (sign flip)")

    print("\n== guarantee property for monomials t^k, k=1..10 on [0,1] ==")
    for k in range(1, 11):
        err = abs(boole_exact(monomial(k), F(0), F(1)) - poly_integral(monomial(k), F(0), F(1)))
        for est in ESTIMATES:
            order = int(est[1])
            if k >= order:
                assert err <= theorem_bound(est, k, F(1)), (k, est)
    print("true |error| <= every applicable theorem bound: ok")

    print("\n== bound examples ==")
    print(f"T2m t^3 [0,1]: {theorem_bound('t2m', 3, F(1))}")
    print(f"T3M t^6 [0,1]: {theorem_bound('t3M', 6, F(1))}")
    i6, m6, M6 = monomial_stats(6, F(1), 2)
    print(f"monomial_stats(6,1,2) = I {i6}, m {m6}, M {M6}")
    i1, m1, M1 = monomial_stats(1, F(1), 1)
    print(f"monomial_stats(1,1,1) = I {i1}, m {m1}, M {M1}")
    i62, m62, M62 = monomial_stats(6, F(2), 1)
    print(f"monomial_stats(6,2,1) = I {i62}, m {m62}, M {M62}")

    print("\n== monomial bound values ==")
    print(f"T2m k=11 b=1: table {table_bound('t2m', 11, F(1))} theorem {theorem_bound('t2m', 11, F(1))}")
    print(f"T3M k=15 b=1: table {table_bound('t3M', 15, F(1))} theorem {theorem_bound('t3M', 15, F(1))}")
    print(f"T1m k=15 b=1: table {table_bound('t1m', 15, F(1))} theorem {theorem_bound('t1m', 15, F(1))}")
    for k in range(6, 31):
        for est in ("t1m", "t1M"):
            assert table_bound(est, k, F(1)) / theorem_bound(est, k, F(1)) == 10
        for est in ("t2m", "t2M", "t3m", "t3M"):
            assert table_bound(est, k, F(1)) == theorem_bound(est, k, F(1))
    print("T1 table/theorem ratio = 10 and T2/T3 agreement for k=6..30: ok")
    print(f"classical k=6 b=1: {classical_monomial(6, F(1))}")
    print(f"classical k=15 b=1: {classical_monomial(15, F(1))}")

    print("\n== crossover thresholds at b=1 ==")
    table_t = [crossover(e, F(1), 'table') for e in ESTIMATES]
    theorem_t = [crossover(e, F(1), 'theorem') for e in ESTIMATES]
    print(f"table reading:   {dict(zip(ESTIMATES, table_t))}")
    print(f"theorem reading: {dict(zip(ESTIMATES, theorem_t))}")

    print("\n== composite bound example: t^3 on [0,1], 2 panels, T2m ==")
    total = F(0)
    for j in range(2):
        lo, hi = F(j, 2), F(j + 1, 2)
        i_val = (3 * hi ** 2 - 3 * lo ** 2) / (hi - lo)
        m_val = 6 * lo
        total += F(17, 1440) * (i_val - m_val) * (hi - lo) ** 3
    print(f"sum of per-panel T2m bounds = {total}")

    print("\n== float-mode references (for tolerance windows) ==")
    import math
    def boole_f(f, a, b):
        h = (b - a) / 4
        xs = [a, (3 * a + b) / 4, (a + b) / 2, (a + 3 * b) / 4, b]
        w = [7, 32, 12, 32, 7]
        return 2 * h / 45 * sum(wi * f(x) for wi, x in zip(w, xs))
    be = boole_f(math.exp, 0.0, 1.0)
    print(f"boole(exp,[0,1]) = {be!r}, true error = {abs(be - (math.e - 1)):.6e}")
    bs = boole_f(math.sin, 0.0, 1.0)
    print(f"boole(sin,[0,1]) = {bs!r}, true error = {abs(bs - (1 - math.cos(1))):.6e}")


if __name__ == "__main__":
    main()
