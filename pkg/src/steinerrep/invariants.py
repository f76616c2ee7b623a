"""Closed-form numerics for Steiner and instanton sheaves and hypersurface representations.

All quantities are exact integers (or Fractions where a formula divides).
Binomials with a negative top argument use the polynomial extension, which
is what Euler characteristics at negative twists need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial


class InvariantError(ValueError):
    pass


def binomial(a: int, k: int) -> int:
    """C(a, k) = a(a-1)...(a-k+1)/k! for any integer a; 0 when k < 0."""
    if k < 0:
        return 0
    if a >= 0:
        return comb(a, k)
    num = 1
    for j in range(k):
        num *= a - j
    return num // factorial(k)


def _nonneg(**kw):
    for name, v in kw.items():
        if not isinstance(v, int) or v < 0:
            raise InvariantError(f"{name} must be a non-negative integer, got {v!r}")


def _dims(N: int, n: int):
    if not isinstance(N, int) or not isinstance(n, int) or not 1 <= n <= N:
        raise InvariantError(f"need 1 <= n <= N, got N={N}, n={n}")


# -- Steiner resolutions -----------------------------------------------------


def steiner_betti(N: int, n: int, h0: int, q: int) -> list[int]:
    """Ranks m_0..m_{N-n+1} of the linear resolution of a Steiner sheaf.

    For n = 1 every Steiner sheaf is Ulrich, so only q = 0 is meaningful
    there; the formula is still evaluated (see ``steiner_betti_report``).
    """
    _dims(N, n)
    _nonneg(h0=h0, q=q)
    c = N - n
    return [h0 * comb(c, t) + q * binomial(c, t - 1) for t in range(c + 2)]


def system_steiner_oracle(N: int, n: int, h0: int, q: int) -> list[int]:
    """Solve the unitriangular Euler-characteristic system by forward substitution."""
    _dims(N, n)
    _nonneg(h0=h0, q=q)
    m: list[int] = []
    for t in range(N - n + 2):
        rhs = (-1) ** t * h0 * binomial(n + t, n) + (-1) ** (t + 1) * q * binomial(n + t - 1, n)
        lower = sum((-1) ** i * m[t - i] * binomial(N + i, N) for i in range(1, t + 1))
        m.append(rhs - lower)
    return m


# -- Euler characteristics ---------------------------------------------------


def chi_linear(N: int, chi_F: int, h1: int, hN1: int, t: int) -> int:
    """chi(F(tH)) for a linear sheaf with h^1(F(-H)) = h1, h^{N-1}(F(-NH)) = hN1."""
    if N < 1:
        raise InvariantError("N must be positive")
    return (
        (chi_F + (N + 1) * h1) * binomial(N + t, N)
        - h1 * binomial(N + t + 1, N)
        - hN1 * binomial(N + t - 1, N)
    )


def chi_steiner(N: int, h0: int, q: int, t: int) -> int:
    """chi(F(tH)) for a Steiner sheaf: the linear case with h1 = 0 and chi = h0."""
    if N < 1:
        raise InvariantError("N must be positive")
    return h0 * binomial(N + t, N) - q * binomial(N + t - 1, N)


def monad_betti(N: int, rank: int, h1m1: int, hN1mN: int, chi: int | None = None) -> tuple[int, int, int]:
    """(m', m, m'') for the monad O(-1)^m' -> O^m -> O(1)^m'' of a linear sheaf."""
    if N < 1:
        raise InvariantError("N must be positive")
    _nonneg(rank=rank, h1m1=h1m1, hN1mN=hN1mN)
    m = rank + h1m1 + hN1mN
    if chi is not None and m != chi + (N + 1) * h1m1:
        raise InvariantError(
            f"inconsistent data: rank + h1 + h^(N-1) = {m} but chi + (N+1)*h1 = {chi + (N + 1) * h1m1}"
        )
    return hN1mN, m, h1m1


# -- hypersurface representations -------------------------------------------


def representation_size(d: int, rkE: int, q: int) -> int:
    """Common rank of the Steiner bundles in a representation: rk(E)*d + 2q."""
    if d < 1 or rkE < 1:
        raise InvariantError("need d >= 1 and rank >= 1")
    _nonneg(q=q)
    return rkE * d + 2 * q


@dataclass(frozen=True)
class CurveInvariants:
    degree: int
    p_a: int
    self_intersection: int

    def as_tuple(self) -> tuple[int, int, int]:
        return self.degree, self.p_a, self.self_intersection


def curve_invariants(d: int, q: int) -> CurveInvariants:
    """Degree, arithmetic genus and self-intersection of the curve attached to a
    size d + 2q determinantal representation of a degree-d surface in P^3."""
    if d < 2:
        raise InvariantError("d must be at least 2")
    _nonneg(q=q)
    twice = d * (d + 2 * q - 1)
    if twice % 2:
        raise InvariantError(f"degree d(d+2q-1)/2 is not integral for d={d}, q={q}")
    degree = twice // 2
    p_a = (
        (d + 2 * q) * binomial(d + q - 2, 2)
        - q * binomial(d + q - 1, 2)
        - q * binomial(d + q - 3, 2)
        - binomial(d - 1, 3)
    )
    c2 = d * q * q + q * (d * d - d - 2) + binomial(d, 3)
    return CurveInvariants(degree, p_a, c2)


def adjunction_genus(d: int, degree: int, self_intersection: int) -> Fraction:
    """p_a of a curve on a degree-d surface in P^3, where K = (d-4)h."""
    return 1 + Fraction(self_intersection + (d - 4) * degree, 2)


def slope_identity(N: int, rank: int, HN: int, KHN1: int, q: int) -> Fraction:
    """Expected c_1(F).H^{N-1} of a Steiner bundle with h^{N-1}(F(-NH)) = q."""
    total = rank * ((N + 1) * HN + KHN1)
    if total % 2:
        raise InvariantError("rank*((N+1)H^N + K H^(N-1)) must be even")
    return Fraction(total, 2) + q


def pfaffian_size_bound(d: int) -> tuple[int, int]:
    """(r(d), q) where r(d) bounds the smallest pfaffian representation of a
    smooth degree-d surface in P^3 and q is the quantum number used."""
    if d < 2:
        raise InvariantError("d must be at least 2")
    if d <= 4:
        return 2 * d, 0
    r_num = 10 * d**3 - 39 * d**2 + 35 * d + 12
    q_num = 10 * d**3 - 39 * d**2 + 29 * d + 12
    if r_num % 3 or q_num % 6:
        raise InvariantError(f"non-integral bound at d={d}")
    r, q = r_num // 3, q_num // 6
    if r != 2 * d + 2 * q:
        raise InvariantError(f"r(d) != 2d + 2q at d={d}")
    return r, q


def macaulay_char_bound(d: int) -> int:
    """ceil(C(d+3, 3) / (3d+1))."""
    if d < 1:
        raise InvariantError("d must be positive")
    return -(-comb(d + 3, 3) // (3 * d + 1))


def rr_surface_chi(rank: int, chiO: int, c1_sq: int, K_c1: int, c2: int) -> int:
    """Riemann-Roch on a surface: rank*chi(O) + (c1^2 - K.c1)/2 - c2."""
    if (c1_sq - K_c1) % 2:
        raise InvariantError("c1^2 - K.c1 must be even")
    return rank * chiO + (c1_sq - K_c1) // 2 - c2


def surface_chi_O(d: int) -> int:
    """chi(O_X) of a smooth degree-d surface in P^3."""
    return 1 + binomial(d - 1, 3)


def determinantal_line_bundle_chi(d: int, q: int) -> int:
    """chi(O_X(C - (q+1)h)) for the curve of ``curve_invariants(d, q)``.

    An instanton line bundle with quantum number q has h^1 = q and no other
    cohomology at this twist, so the value is -q.
    """
    c = curve_invariants(d, q)
    k = q + 1
    c1_sq = c.self_intersection - 2 * k * c.degree + k * k * d
    K_c1 = (d - 4) * (c.degree - k * d)
    return rr_surface_chi(1, surface_chi_O(d), c1_sq, K_c1, 0)


def pfaffian_surface_chi(d: int) -> int:
    """chi(E(-h)) for the rank-2 bundle with c1 = (d-1)h, c2 = 2 p_a(C), C in |(d-1)h|."""
    if d < 2:
        raise InvariantError("d must be at least 2")
    c2_E = 2 * d**3 - 7 * d**2 + 5 * d + 2
    c1 = d - 3  # c1(E(-h)) = (d-3)h
    c2 = c2_E - (d - 1) * d + d
    return rr_surface_chi(2, surface_chi_O(d), c1 * c1 * d, (d - 4) * c1 * d, c2)


# -- JSON-facing reports ------------------------------------------------------


def _report(inputs: dict, outputs: dict, checks: list[tuple[str, bool]]) -> dict:
    return {
        "inputs": inputs,
        "outputs": outputs,
        "cross_checks": [{"name": name, "pass": bool(ok)} for name, ok in checks],
    }


def steiner_betti_report(N: int, n: int, h0: int, q: int) -> dict:
    m = steiner_betti(N, n, h0, q)
    checks = [
        ("system_oracle", m == system_steiner_oracle(N, n, h0, q)),
        ("ambient_rank", sum((-1) ** t * v for t, v in enumerate(m)) == (h0 - q if N == n else 0)),
    ]
    out = {"betti": m}
    if n == 1:
        out["note"] = "n = 1: Steiner sheaves on curves are Ulrich, so q > 0 has no geometric model"
    return _report({"N": N, "n": n, "h0": h0, "q": q}, out, checks)


def chi_steiner_report(N: int, h0: int, q: int, t: int) -> dict:
    value = chi_steiner(N, h0, q, t)
    checks = [("linear_formula", value == chi_linear(N, h0, 0, q, t))]
    return _report({"N": N, "h0": h0, "q": q, "t": t}, {"chi": value}, checks)


def chi_linear_report(N: int, chi_F: int, h1: int, hN1: int, t: int) -> dict:
    value = chi_linear(N, chi_F, h1, hN1, t)
    checks = [("t0_identity", chi_linear(N, chi_F, h1, hN1, 0) == chi_F)]
    return _report({"N": N, "chi": chi_F, "h1": h1, "hN1": hN1, "t": t}, {"chi": value}, checks)


def monad_betti_report(N: int, rank: int, h1m1: int, hN1mN: int, chi: int | None = None) -> dict:
    mp, m, mpp = monad_betti(N, rank, h1m1, hN1mN, chi)
    checks = [("rank_of_monad", m - mp - mpp == rank)]
    if chi is not None:
        checks.append(("chi_consistency", m == chi + (N + 1) * h1m1))
    inputs = {"N": N, "rank": rank, "h1m1": h1m1, "hN1mN": hN1mN, "chi": chi}
    return _report(inputs, {"m_prime": mp, "m": m, "m_double_prime": mpp}, checks)


def representation_size_report(d: int, rkE: int, q: int) -> dict:
    s = representation_size(d, rkE, q)
    return _report({"d": d, "rkE": rkE, "q": q}, {"size": s}, [("parity", (s - rkE * d) % 2 == 0)])


def curve_invariants_report(d: int, q: int) -> dict:
    c = curve_invariants(d, q)
    checks = [
        ("adjunction", adjunction_genus(d, c.degree, c.self_intersection) == c.p_a),
        ("instanton_chi", determinantal_line_bundle_chi(d, q) == -q),
    ]
    out = {"degree": c.degree, "p_a": c.p_a, "self_intersection": c.self_intersection}
    return _report({"d": d, "q": q}, out, checks)


def slope_report(N: int, rank: int, HN: int, KHN1: int, q: int) -> dict:
    value = slope_identity(N, rank, HN, KHN1, q)
    return _report({"N": N, "rank": rank, "HN": HN, "KHN1": KHN1, "q": q}, {"c1_HN1": str(value)}, [])


def pfaffian_bound_report(d: int) -> dict:
    r, q = pfaffian_size_bound(d)
    checks = [("r_equals_2d_plus_2q", r == 2 * d + 2 * q)]
    if d >= 5:
        checks.append(("riemann_roch_quantum", pfaffian_surface_chi(d) == -q))
    return _report({"d": d}, {"r_bound": r, "q_used": q}, checks)


def macaulay_bound_report(d: int) -> dict:
    v = macaulay_char_bound(d)
    checks = [("ceiling", (v - 1) * (3 * d + 1) < comb(d + 3, 3) <= v * (3 * d + 1))]
    return _report({"d": d}, {"bound": v}, checks)


def rr_surface_report(rank: int, chiO: int, c1_sq: int, K_c1: int, c2: int) -> dict:
    v = rr_surface_chi(rank, chiO, c1_sq, K_c1, c2)
    return _report({"rank": rank, "chiO": chiO, "c1_sq": c1_sq, "K_c1": K_c1, "c2": c2}, {"chi": v}, [])
