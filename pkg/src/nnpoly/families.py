"""The polynomial families p_a and f_a and their certified coefficient caps.

p_a has degree 2n with every coefficient 1 except -a at degree n.  f_a is
the positively-weighted generalization with coefficients d_i (i != n).
Membership of p_a in the preserver set of n x n nonnegative matrices is
guaranteed whenever a**2 <= min_k 4*d_{n-k}*d_{n+k}/mu(n,k); the caps are
carried as exact rational bounds on a**2 because 2/sqrt(mu) is irrational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod, isqrt


def make_p_a(n: int, a):
    """Degree-2n polynomial: all coefficients 1 except -a at degree n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not a > 0:
        raise ValueError("a must be positive")
    one = a * 0 + 1
    coeffs = [one] * (2 * n + 1)
    coeffs[n] = -a
    return coeffs


def make_f_a(d, a):
    """Weighted variant: coefficient d[i] at degree i != n, -a at degree n."""
    if len(d) < 5 or len(d) % 2 == 0:
        raise ValueError("d must have odd length 2n+1 with n >= 2")
    n = len(d) // 2
    if not a > 0:
        raise ValueError("a must be positive")
    for i, di in enumerate(d):
        if i != n and not di > 0:
            raise ValueError(f"coefficient d[{i}] must be positive")
    coeffs = list(d)
    coeffs[n] = -a
    return coeffs


def mu(n: int, k: int) -> int:
    """Pre-image bound (n-k+1) * prod_{j=1}^{k-1} (n-j); equals 1 at k = n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    if k == n:
        return 1
    return (n - k + 1) * prod(n - j for j in range(1, k))


def safe_a_squared(n: int, d=None) -> Fraction:
    """Largest certified cap on a**2: min over k of 4*d_{n-k}*d_{n+k}/mu(n,k).

    The k = n row (all-ones: 4/1) encodes the diagonal-entry condition.
    """
    if d is None:
        d = [Fraction(1)] * (2 * n + 1)
    elif len(d) != 2 * n + 1:
        raise ValueError("d must have length 2n+1")
    make_f_a(d, Fraction(1))  # validate positivity
    return min(
        Fraction(4) * Fraction(d[n - k]) * Fraction(d[n + k]) / mu(n, k)
        for k in range(1, n + 1)
    )


@dataclass
class BoundTable:
    n: int
    rows: list  # (k, mu, nu or None, cap_sq)
    safe_a_sq: Fraction

    def to_json(self):
        rows = []
        for k, m, nu, cap in self.rows:
            row = {"k": k, "mu": m, "cap_sq": str(cap)}
            if nu is not None:
                row["nu"] = nu
                row["nu_cap_sq"] = str(Fraction(cap) * m / nu)
            rows.append(row)
        return {"n": self.n, "rows": rows, "safe_a_sq": str(self.safe_a_sq)}


def bound_table(n: int, d=None, nu_values=None) -> BoundTable:
    """Per-k cap table; nu_values (exact pre-image maxima for k = 1..n-1)
    yield caps at least as large as the mu-based ones."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if d is None:
        d = [Fraction(1)] * (2 * n + 1)
    if nu_values is not None and len(nu_values) != n - 1:
        raise ValueError("nu_values must cover k = 1..n-1")
    rows = []
    for k in range(1, n + 1):
        m = mu(n, k)
        nu = None
        if nu_values is not None and k <= n - 1:
            nu = nu_values[k - 1]
            if not 1 <= nu <= m:
                raise ValueError(f"nu({n},{k})={nu} outside 1..mu={m}")
        cap = Fraction(4) * Fraction(d[n - k]) * Fraction(d[n + k]) / m
        rows.append((k, m, nu, cap))
    return BoundTable(n=n, rows=rows, safe_a_sq=min(r[3] for r in rows))


def rational_sqrt_floor(c: Fraction, denom: int = 10**6) -> Fraction:
    """Largest multiple of 1/denom whose square is <= c."""
    if c < 0:
        raise ValueError("negative argument")
    # floor(denom * sqrt(c)) via integer sqrt of c.num*denom^2 / c.den
    num = isqrt(c.numerator * denom * denom // c.denominator)
    a = Fraction(num, denom)
    while a * a > c:
        a -= Fraction(1, denom)
    return a
