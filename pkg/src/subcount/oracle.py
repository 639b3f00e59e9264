"""Brute-force subgroup enumeration, independent of the counting formulas.

Two oracles: a closure worklist that enumerates every subgroup of a small
group directly, and a column-reduced matrix census that counts canonical
subgroup matrices.  Neither one touches the recurrences or the closed forms,
so agreement between the routes is meaningful evidence.
"""

from .groups import GroupType, OutOfRange
from .polyring import IntPoly

try:
    from . import _censuskernel
except ImportError:
    _censuskernel = None

DEFAULT_LIMIT = 4096


class GroupTooLarge(ValueError):
    """Raised when the group order exceeds the enumeration limit."""


class RankTooLarge(ValueError):
    """Raised when the matrix census is asked for a rank it cannot handle."""


def census_backend():
    """Name of the active closure-census implementation."""
    return "compiled" if _censuskernel is not None else "pure"


class CensusResult:
    """Counts of subgroups of each order p**b, for one type at one prime."""

    __slots__ = ("prime", "group_type", "counts", "total")

    def __init__(self, prime, group_type, counts):
        self.prime = prime
        self.group_type = GroupType(group_type)
        self.counts = tuple(counts)
        self.total = sum(counts)

    def to_json(self):
        return {
            "prime": self.prime,
            "type": self.group_type.to_json(),
            "counts": list(self.counts),
            "total": self.total,
        }

    def __eq__(self, other):
        if isinstance(other, CensusResult):
            return (self.prime, self.group_type, self.counts) == (
                other.prime, other.group_type, other.counts)
        return NotImplemented

    def __repr__(self):
        return "CensusResult(%r, %r, %r)" % (self.prime, self.group_type, self.counts)


def _check_prime(p):
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise ValueError("prime must be an int >= 2, got %r" % (p,))
    k = 2
    while k * k <= p:
        if p % k == 0:
            raise ValueError("%d is not prime" % p)
        k += 1


def subgroup_census(t, prime, limit=DEFAULT_LIMIT, backend="auto"):
    """Enumerate all subgroups by iterated cyclic extension and bucket by order.

    backend picks the closure implementation: "auto" prefers the compiled
    kernel when present, "compiled" demands it, "pure" forces the fallback.
    """
    t = GroupType(t)
    _check_prime(prime)
    m = t.weight
    order = prime ** m
    if order > limit:
        raise GroupTooLarge(
            "group order %d exceeds the enumeration limit %d" % (order, limit))
    mods = [prime ** a for a in t.parts]
    if backend == "auto":
        backend = census_backend()
    if backend == "compiled":
        if _censuskernel is None:
            raise RuntimeError("compiled census kernel is not available")
        counts = _censuskernel.closure_census(mods, prime)
    elif backend == "pure":
        counts = _closure_census_py(mods, prime)
    else:
        raise ValueError("unknown backend %r" % (backend,))
    counts = list(counts) + [0] * (m + 1 - len(counts))
    counts = counts[: m + 1]
    if counts[0] != 1 or counts[m] != 1 or counts != counts[::-1]:
        raise RuntimeError(
            "census invariants violated for %s at p=%d: %s" % (t, prime, counts))
    return CensusResult(prime, t, counts)


def _closure_census_py(mods, p):
    """Pure-Python closure worklist; same algorithm as the compiled kernel."""
    n = 1
    for m in mods:
        n *= m
    if n == 1:
        return [1]
    digits = []
    for i in range(n):
        x, digs = i, []
        for m in mods:
            digs.append(x % m)
            x //= m
        digits.append(digs)
    weights = []
    w = 1
    for m in mods:
        weights.append(w)
        w *= m
    # rows[i][j] = i + j; each row is the previous row pushed through one
    # generator step, which keeps the construction at list-indexing speed
    step = []
    for c, m in enumerate(mods):
        perm = [0] * n
        wc = weights[c]
        for i in range(n):
            if digits[i][c] == m - 1:
                perm[i] = i - (m - 1) * wc
            else:
                perm[i] = i + wc
        step.append(perm)
    rows = [None] * n
    rows[0] = list(range(n))
    for i in range(1, n):
        for c in range(len(mods)):
            if digits[i][c]:
                prev = i - weights[c]
                perm = step[c]
                rows[i] = [perm[v] for v in rows[prev]]
                break
    seen = {1}
    work = [(1, [0])]
    buckets = {}
    while work:
        mask, elems = work.pop()
        size = len(elems)
        e = 0
        while size > 1:
            size //= p
            e += 1
        buckets[e] = buckets.get(e, 0) + 1
        for g in range(1, n):
            if (mask >> g) & 1:
                continue
            kmask = mask
            kelems = list(elems)
            cur = g
            row_g = rows[g]
            while not (kmask >> cur) & 1:
                row = rows[cur]
                for h in elems:
                    x = row[h]
                    bit = 1 << x
                    if not kmask & bit:
                        kmask |= bit
                        kelems.append(x)
                cur = row_g[cur]
            if kmask not in seen:
                seen.add(kmask)
                work.append((kmask, kelems))
    top = max(buckets)
    return [buckets.get(e, 0) for e in range(top + 1)]


def _vp(x, p):
    """p-adic valuation; zero maps to a value larger than any test threshold."""
    if x == 0:
        return 1 << 30
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _minor(mat, rows, cols):
    sub = [[mat[r][c] for c in cols] for r in rows]
    k = len(sub)
    if k == 1:
        return sub[0][0]
    if k == 2:
        return sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
    a, b, c = sub[0]
    d, e, f = sub[1]
    g, h, i = sub[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def star_census_cost(t, prime):
    """Number of candidate matrices the matrix census would enumerate.

    Column j contributes j - 1 off-diagonal residues mod p**i_j, so the count
    is a product of geometric sums; use it to skip infeasible types.
    """
    t = GroupType(t)
    total = 1
    for j, a in enumerate(t.parts):
        total *= sum(prime ** (j * i) for i in range(0, a + 1))
    return total


def star_matrix_census(t, prime, limit=DEFAULT_LIMIT):
    """Count canonical upper-triangular subgroup matrices, bucketed by order.

    Diagonal entries run over the divisors p**i_j of each factor order; the
    entries above a diagonal entry run over residues mod p**i_j.  A matrix is
    kept when each excess exponent divides the matching connected minor.
    """
    from itertools import product

    t = GroupType(t)
    _check_prime(prime)
    if t.rank > 4:
        raise RankTooLarge(
            "matrix census supports rank at most 4, got %d" % t.rank)
    m = t.weight
    order = prime ** m
    if order > limit:
        raise GroupTooLarge(
            "group order %d exceeds the enumeration limit %d" % (order, limit))
    k = t.rank
    parts = t.parts
    counts = [0] * (m + 1)
    if k == 0:
        counts[0] = 1
        return CensusResult(prime, t, counts)
    for ivec in product(*[range(0, a + 1) for a in parts]):
        col_sizes = [prime ** e for e in ivec]
        body = m - sum(ivec)
        column_choices = [product(range(col_sizes[j]), repeat=j) for j in range(1, k)]
        for combo in product(*column_choices):
            mat = [[0] * k for _ in range(k)]
            for j in range(k):
                mat[j][j] = col_sizes[j]
            for j in range(1, k):
                col = combo[j - 1]
                for r in range(j):
                    mat[r][j] = col[r]
            ok = True
            for j in range(1, k):
                for r in range(j - 1, -1, -1):
                    excess = ivec[j] + sum(ivec[r:j]) - parts[r]
                    if excess > 0:
                        minor = _minor(mat, list(range(r, j)), list(range(r + 1, j + 1)))
                        if _vp(minor, prime) < excess:
                            ok = False
                            break
                if not ok:
                    break
            if ok:
                counts[body] += 1
    if counts[0] != 1 or counts[m] != 1 or counts != counts[::-1]:
        raise RuntimeError(
            "matrix census invariants violated for %s at p=%d: %s" % (t, prime, counts))
    return CensusResult(prime, t, counts)


def gaussian_binomial(d, b):
    """The p-binomial coefficient [d choose b] as a polynomial."""
    if not 0 <= b <= d:
        raise OutOfRange("need 0 <= b <= d, got b=%d d=%d" % (b, d))
    value = IntPoly.one()
    for i in range(1, b + 1):
        value = value * (IntPoly.term(1, d - b + i) - 1)
        value = value.exact_div(IntPoly.term(1, i) - 1)
    return value
