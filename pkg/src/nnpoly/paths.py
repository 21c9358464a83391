"""Path-monomial proof engine.

A monomial of length j over n vertices is the path 1 = i_0 -> i_1 -> ...
-> i_j = 2 in the complete directed graph on {1..n}; its value under a
matrix A is the ordered product of the traversed entries.  Monomials are
formal: the vertex sequence is the identity, never the numeric value.

For monomials of length n a repeated vertex is forced, so each one
carries a minimal cycle length k in 1..n-1.  Duplicating the first
k-cycle in place gives the injective map into length n+k; deleting it
gives the map into length n-k whose pre-images are bounded by mu(n,k).
Verifying those two facts by exhaustive enumeration, plus the coefficient
cap, certifies that p_a preserves nonnegativity at order n.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .families import mu, safe_a_squared, make_p_a
from .linalg import is_nonneg, mat_pow, order_of

DEFAULT_CAP = 10**8


class EnumerationCapExceeded(Exception):
    pass


def _check_cap(n: int, j: int, cap: int):
    total = n ** (j - 1)
    if total > cap:
        raise EnumerationCapExceeded(
            f"n^(j-1) = {n}^{j - 1} = {total} exceeds cap {cap}"
        )
    return total


def enumerate_monomials(n: int, j: int, cap: int = DEFAULT_CAP):
    """All n^(j-1) vertex sequences (1, i_1, ..., i_{j-1}, 2), lexicographic."""
    if n < 2 or j < 1:
        raise ValueError("need n >= 2 and j >= 1")
    _check_cap(n, j, cap)
    for interior in itertools.product(range(1, n + 1), repeat=j - 1):
        yield (1, *interior, 2)


def path_from_index(n: int, j: int, idx: int):
    """idx-th path in the lexicographic order of enumerate_monomials."""
    digits = []
    for _ in range(j - 1):
        idx, d = divmod(idx, n)
        digits.append(d + 1)
    return (1, *reversed(digits), 2)


def monomial_value(m, A):
    val = A[0][0] * 0 + 1
    for s, t in zip(m, m[1:]):
        val = val * A[s - 1][t - 1]
    return val


def min_cycle_length(m) -> int:
    """Smallest q - p over repeated vertices m[p] == m[q], p < q."""
    best = None
    last = {}
    for q, v in enumerate(m):
        if v in last and (best is None or q - last[v] < best):
            best = q - last[v]
        last[v] = q
    if best is None:
        raise ValueError("path has no repeated vertex")
    return best


def first_cycle(m, k: int):
    """(start, k) for the leftmost cycle of the minimal length k.

    The segment is automatically simple: a proper sub-cycle would repeat a
    vertex at distance < k, contradicting minimality.
    """
    if min_cycle_length(m) != k:
        raise ValueError(f"k={k} is not the minimal cycle length")
    for p in range(len(m) - k):
        if m[p] == m[p + k]:
            seg = m[p : p + k]
            assert len(set(seg)) == k, "first k-cycle must be simple"
            return (p, k)
    raise AssertionError("unreachable")


def phi(m, cyc):
    """Duplicate the cycle segment in place; length grows by k."""
    p, k = cyc
    if p + k >= len(m) or m[p] != m[p + k]:
        raise ValueError("invalid cycle location")
    return m[: p + k] + m[p : p + k] + m[p + k :]


def psi(m, cyc):
    """Delete the cycle segment where it first appears; length shrinks by k."""
    p, k = cyc
    if p + k >= len(m) or m[p] != m[p + k]:
        raise ValueError("invalid cycle location")
    return m[:p] + m[p + k :]


# -- exhaustive verification over M_n ---------------------------------------


def _tally_chunk(n, lo, hi):
    """Per-k (count, phi-image set, psi-image counter) over an index range."""
    stats = {}
    for idx in range(lo, hi):
        m = path_from_index(n, n, idx)
        k = min_cycle_length(m)
        cyc = first_cycle(m, k)
        if k not in stats:
            stats[k] = [0, set(), Counter()]
        entry = stats[k]
        entry[0] += 1
        entry[1].add(phi(m, cyc))
        entry[2][psi(m, cyc)] += 1
    return stats


def _merge_stats(acc, other):
    for k, (cnt, phis, psis) in other.items():
        if k not in acc:
            acc[k] = [0, set(), Counter()]
        acc[k][0] += cnt
        acc[k][1] |= phis
        acc[k][2].update(psis)
    return acc


def _tally_all(n, cap=DEFAULT_CAP, workers=1):
    total = _check_cap(n, n, cap)
    if workers <= 1 or total < 4096:
        return _tally_chunk(n, 0, total), total
    chunk = -(-total // workers)
    bounds = [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    acc = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # merged in chunk order, so the result is scheduling-independent
        for stats in pool.map(_tally_chunk, *zip(*bounds)):
            _merge_stats(acc, stats)
    return acc, total


def partition_stats(n: int, cap: int = DEFAULT_CAP, workers: int = 1):
    """[(k, |M_{n,k}|)] for k = 1..n-1; counts sum to n^(n-1)."""
    stats, _ = _tally_all(n, cap, workers)
    return [(k, stats[k][0]) for k in sorted(stats)]


def exact_nu(n: int, k: int, cap: int = DEFAULT_CAP, workers: int = 1) -> int:
    """Exact maximal pre-image cardinality of the cycle-deletion map on M_{n,k}."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 1..{n - 1}")
    stats, _ = _tally_all(n, cap, workers)
    return max(stats[k][2].values())


def all_nu(n: int, cap: int = DEFAULT_CAP, workers: int = 1):
    stats, _ = _tally_all(n, cap, workers)
    return [max(stats[k][2].values()) for k in sorted(stats)]


@dataclass
class CertificateReport:
    n: int
    a_sq: Fraction
    per_k: list  # (k, count, phi_injective, nu, mu)
    verdict: bool

    def to_json(self):
        return {
            "n": self.n,
            "a_sq": str(self.a_sq),
            "per_k": [
                {"k": k, "count": c, "phi_injective": inj, "nu": nu, "mu": m}
                for k, c, inj, nu, m in self.per_k
            ],
            "verdict": self.verdict,
        }


def build_certificate(
    n: int, a_sq, cap: int = DEFAULT_CAP, workers: int = 1
) -> CertificateReport:
    """Enumerate all of M_n and check every ingredient of the membership proof.

    Verdict true means: the minimal-cycle classes partition M_n, cycle
    duplication is injective on each class, every exact pre-image count is
    within mu(n,k), and a_sq clears 4/mu(n,k) for every k plus the diagonal
    cap 4.  Together these certify p_a at a = sqrt(a_sq).
    """
    a_sq = Fraction(a_sq)
    if not a_sq > 0:
        raise ValueError("a_sq must be positive")
    stats, total = _tally_all(n, cap, workers)
    per_k = []
    ok = sum(s[0] for s in stats.values()) == total
    ok &= set(stats) == set(range(1, n))
    for k in sorted(stats):
        cnt, phis, psis = stats[k]
        inj = len(phis) == cnt
        nu = max(psis.values())
        m = mu(n, k)
        per_k.append((k, cnt, inj, nu, m))
        ok &= inj and nu <= m and a_sq <= Fraction(4, m)
    ok &= a_sq <= 4  # diagonal entries, the mu(n,n) = 1 row
    return CertificateReport(n=n, a_sq=a_sq, per_k=per_k, verdict=bool(ok))


def numeric_decomposition_check(n: int, a_sq, A, cap: int = DEFAULT_CAP) -> bool:
    """Exact check of the decomposition of entry (1,2) on a concrete matrix.

    For every monomial m of length n with class k, the termwise piece
    value(psi)/mu - a*value(m) + value(phi) must be nonnegative; since a
    enters only linearly this is tested squared (value(psi)/mu + value(phi))^2
    >= a_sq * value(m)^2, exact in rationals.  Budgets: each psi-image is
    consumed at most mu(n,k) times (total weight <= 1) and each phi-image at
    most once.  Finally the a-free part of the sum must fit inside the
    positive entries sum_{j != n} (A^j)_{1,2}.
    """
    if order_of(A) != n:
        raise ValueError("matrix order must equal n")
    if not is_nonneg(A):
        raise ValueError("matrix must be entrywise nonnegative")
    a_sq = Fraction(a_sq)
    stats = {}
    for m in enumerate_monomials(n, n, cap):
        k = min_cycle_length(m)
        cyc = first_cycle(m, k)
        f, g = phi(m, cyc), psi(m, cyc)
        vm, vf, vg = (monomial_value(x, A) for x in (m, f, g))
        if vf * vg != vm * vm:
            return False
        mk = mu(n, k)
        lhs = vg / mk + vf
        if lhs < 0 or lhs * lhs < a_sq * vm * vm:
            return False
        if k not in stats:
            stats[k] = [Fraction(0), set(), Counter()]
        entry = stats[k]
        entry[0] += lhs
        if f in entry[1]:
            return False  # phi-image consumed twice
        entry[1].add(f)
        entry[2][g] += 1
    covered = Fraction(0)
    for k, (lhs_sum, _, psis) in stats.items():
        if max(psis.values()) > mu(n, k):
            return False  # psi-image budget exceeded
        covered += lhs_sum
    positive_part = sum(
        mat_pow(A, j)[0][1] for j in range(1, 2 * n + 1) if j != n
    )
    return covered <= positive_part


def verify_certificate_on_matrix(n: int, a_sq, A) -> bool:
    """End-to-end sanity: certificate verdict implies p_a(A) >= 0 entrywise.

    a = sqrt(a_sq) may be irrational, so entries s - a*b (s, b >= 0 exact
    rationals) are signed via s >= 0 and s^2 >= a_sq * b^2.
    """
    a_sq = Fraction(a_sq)
    S = mat_pow(A, 0)
    for j in range(1, 2 * n + 1):
        if j != n:
            S = [[s + x for s, x in zip(rs, rx)] for rs, rx in zip(S, mat_pow(A, j))]
    B = mat_pow(A, n)
    for rs, rb in zip(S, B):
        for s, b in zip(rs, rb):
            if s < 0 or s * s < a_sq * b * b:
                return False
    return True
