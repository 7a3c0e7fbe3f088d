"""Shared samplers and independent oracles for the test suite.

The oracles here (Gaussian elimination, Bellman-Ford, simple-path
enumeration, exhaustive denominator search) are deliberately written
from scratch against plain Python data so they share no code path with
the library routines they check.
"""

from __future__ import annotations

import math
from fractions import Fraction

import pathalgebra as pa

# one PASS/FAIL line per acceptance criterion, echoed after the run
ACCEPTANCE_REPORT: list = []


# ---------------------------------------------------------------- samplers

def rand_fraction(rng, lo=-20, hi=20, max_den=12):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def _finite_window(lower, upper):
    lo = Fraction(-20) if lower is pa.NEG_INF else lower
    hi = Fraction(20) if upper is pa.POS_INF else upper
    if lo > hi:
        lo = hi - 40
    return lo, hi


def sample_element(sr, rng):
    """Random element of the given semiring."""
    if isinstance(sr, pa.IntervalSemiring):
        a = sample_element(sr.base, rng)
        b = sample_element(sr.base, rng)
        if not sr.base.natural_le(a, b):
            a, b = b, a
        return sr.interval(a, b)
    kind = sr.kind
    if kind == "rational":
        return rand_fraction(rng)
    if kind == "minplus":
        return pa.POS_INF if rng.random() < 0.15 else rand_fraction(rng)
    if kind == "maxplus":
        return pa.NEG_INF if rng.random() < 0.15 else rand_fraction(rng)
    if kind == "maxmin":
        roll = rng.random()
        if roll < 0.1:
            return sr.lower
        if roll < 0.2:
            return sr.upper
        lo, hi = _finite_window(sr.lower, sr.upper)
        t = Fraction(rng.randint(0, 24), 24)
        return lo + (hi - lo) * t
    if kind == "boolean":
        return rng.random() < 0.5
    if kind == "maxtimes":
        return Fraction(rng.randint(0, 24), 24)
    raise AssertionError(f"no sampler for {kind}")


def sample_closure_defined(sr, rng):
    """Random element whose closure exists."""
    if isinstance(sr, pa.IntervalSemiring):
        a = sample_closure_defined(sr.base, rng)
        b = sample_closure_defined(sr.base, rng)
        if not sr.base.natural_le(a, b):
            a, b = b, a
        return sr.interval(a, b)
    kind = sr.kind
    if kind == "rational":
        while True:
            q = rand_fraction(rng)
            if q != 1:
                return q
    if kind == "minplus":
        if rng.random() < 0.15:
            return pa.POS_INF
        return Fraction(rng.randint(0, 20), rng.randint(1, 12))
    if kind == "maxplus":
        if rng.random() < 0.15:
            return pa.NEG_INF
        return Fraction(-rng.randint(0, 20), rng.randint(1, 12))
    return sample_element(sr, rng)


def sample_in_interval(sr, box, rng):
    """Random base element inside an interval (numeric betweenness)."""
    base = sr.base
    if base.kind == "boolean":
        choices = [
            v for v in (False, True)
            if base.natural_le(box.lo, v) and base.natural_le(v, box.hi)
        ]
        return rng.choice(choices)
    lo, hi = box.lo, box.hi
    if lo == hi:
        return lo
    if lo is pa.NEG_INF:
        lo = Fraction(-10) if hi is pa.POS_INF else hi - 10
    if hi is pa.POS_INF:
        hi = lo + 10
    if rng.random() < 0.2:
        return rng.choice([box.lo, box.hi])
    t = Fraction(rng.randint(0, 24), 24)
    return lo + (hi - lo) * t


# ------------------------------------------------------------- axiom suite

def assert_semiring_axioms(sr, rng, triples=300):
    """Associativity, commutativity, distributivity, identities,
    annihilation; idempotency/sup/order-compatibility when idempotent."""
    zero, one = sr.zero, sr.one
    assert zero != one
    saw_non_idempotent = False
    for _ in range(triples):
        x = sample_element(sr, rng)
        y = sample_element(sr, rng)
        z = sample_element(sr, rng)
        assert sr.add(sr.add(x, y), z) == sr.add(x, sr.add(y, z))
        assert sr.add(x, y) == sr.add(y, x)
        assert sr.mul(sr.mul(x, y), z) == sr.mul(x, sr.mul(y, z))
        assert sr.mul(x, sr.add(y, z)) == sr.add(sr.mul(x, y), sr.mul(x, z))
        assert sr.mul(sr.add(x, y), z) == sr.add(sr.mul(x, z), sr.mul(y, z))
        cx = sr.coerce(x)
        assert sr.add(zero, x) == cx
        assert sr.mul(zero, x) == zero
        assert sr.mul(x, zero) == zero
        assert sr.mul(one, x) == cx
        assert sr.mul(x, one) == cx
        if sr.idempotent:
            assert sr.add(x, x) == cx
            s = sr.add(x, y)
            assert sr.leq(x, s) and sr.leq(y, s)
            if sr.leq(x, z) and sr.leq(y, z):
                assert sr.leq(s, z)  # addition is the least upper bound
            # canonical order is compatible with both operations
            assert sr.leq(sr.add(x, z), sr.add(s, z))
            assert sr.leq(sr.mul(x, z), sr.mul(s, z))
            assert sr.leq(sr.mul(z, x), sr.mul(z, s))
        elif sr.add(x, x) != cx:
            saw_non_idempotent = True
    if not sr.idempotent:
        assert saw_non_idempotent


def assert_closure_identity(sr, x):
    star = sr.closure(x)
    assert star == sr.add(sr.one, sr.mul(x, star))
    assert star == sr.add(sr.one, sr.mul(star, x))


def assert_star_series(sr, x, kmax=20):
    """Partial sums one (+) x (+) ... (+) x^k ascend and reach the closure."""
    star = sr.closure(x)
    partial = sr.one
    power = sr.one
    for _ in range(kmax):
        power = sr.mul(power, x)
        nxt = sr.add(partial, power)
        assert sr.leq(partial, nxt)
        partial = nxt
    assert partial == star


# ------------------------------------------------------- random instances

def rand_matrix(sr, rng, n):
    return pa.Matrix.from_rows(
        sr, [[sample_element(sr, rng) for _ in range(n)] for _ in range(n)]
    )


def rand_symmetric_matrix(sr, rng, n):
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = sample_element(sr, rng)
            rows[i][j] = rows[j][i] = v
    return pa.Matrix.from_rows(sr, rows)


def rand_minplus_matrix(rng, n, zero_prob=0.35, lo=0, hi=9):
    mp = pa.MinPlus()
    rows = [
        [pa.POS_INF if rng.random() < zero_prob else Fraction(rng.randint(lo, hi)) for _ in range(n)]
        for _ in range(n)
    ]
    return pa.Matrix.from_rows(mp, rows)


def rand_minplus_vector(rng, n, zero_prob=0.3, lo=0, hi=9):
    return tuple(
        pa.POS_INF if rng.random() < zero_prob else Fraction(rng.randint(lo, hi)) for _ in range(n)
    )


def rand_minplus_strictly_lower(rng, n):
    mp = pa.MinPlus()
    rows = [
        [
            (pa.POS_INF if rng.random() < 0.4 else Fraction(rng.randint(0, 9)))
            if i > j
            else pa.POS_INF
            for j in range(n)
        ]
        for i in range(n)
    ]
    return pa.Matrix.from_rows(mp, rows)


def rand_rational_small(rng, n, max_den=16):
    """Entries with |value| <= 1/4 and denominator <= max_den."""
    rf = pa.RationalField()
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            q = rng.randint(1, max_den)
            p = rng.randint(-(q // 4), q // 4)
            row.append(Fraction(p, q))
        rows.append(row)
    return pa.Matrix.from_rows(rf, rows)


def rand_graph(rng, max_n, arc_prob=0.35, weight_hi=9):
    n = rng.randint(1, max_n)
    edges = []
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and rng.random() < arc_prob:
                edges.append((u, v, Fraction(rng.randint(0, weight_hi))))
    return pa.GraphSpec(n, tuple(edges))


# ----------------------------------------------------- independent oracles

def as_numeric(x):
    """Map library elements onto plain comparables for oracle equality."""
    if x is pa.POS_INF:
        return math.inf
    if x is pa.NEG_INF:
        return -math.inf
    return x


def solve_i_minus(a_rows, b):
    """Solve (I - A) x = b over exact rationals by Gaussian elimination."""
    n = len(a_rows)
    one, zero = Fraction(1), Fraction(0)
    m = [
        [(one if i == j else zero) - Fraction(a_rows[i][j]) for j in range(n)]
        + [Fraction(b[i])]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [rv - f * cv for rv, cv in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def bellman_ford_to_target(n, edges, target):
    """Shortest distance from every node TO the target; math.inf when unreachable."""
    dist = [math.inf] * (n + 1)
    dist[target] = Fraction(0)
    for _ in range(max(n - 1, 1)):
        for u, v, w in edges:
            if dist[v] is not math.inf and (dist[u] is math.inf or w + dist[v] < dist[u]):
                dist[u] = w + dist[v]
    return dist[1:]


def _adjacency(edges):
    adj = {}
    for u, v, w in edges:
        adj.setdefault(u, []).append((v, w))
    return adj


def widest_by_enumeration(n, edges, target):
    """Max over simple paths of the min arc weight; -inf when unreachable."""
    adj = _adjacency(edges)
    out = []
    for start in range(1, n + 1):
        if start == target:
            out.append(math.inf)
            continue
        best = -math.inf

        def dfs(u, visited, width):
            nonlocal best
            if u == target:
                best = max(best, width)
                return
            for v, w in adj.get(u, ()):
                if v not in visited:
                    dfs(v, visited | {v}, min(width, w))

        dfs(start, {start}, math.inf)
        out.append(best)
    return out


def reliable_by_enumeration(n, edges, target):
    """Max over simple paths of the product of weights; 0 when unreachable."""
    adj = _adjacency(edges)
    out = []
    for start in range(1, n + 1):
        if start == target:
            out.append(Fraction(1))
            continue
        best = Fraction(0)

        def dfs(u, visited, value):
            nonlocal best
            if u == target:
                best = max(best, value)
                return
            for v, w in adj.get(u, ()):
                if v not in visited:
                    dfs(v, visited | {v}, value * w)

        dfs(start, {start}, Fraction(1))
        out.append(best)
    return out


def reach_by_dfs(n, edges, target):
    """Which nodes have a directed path to the target (target included)."""
    reverse = {}
    for u, v, _ in edges:
        reverse.setdefault(v, []).append(u)
    seen = {target}
    stack = [target]
    while stack:
        v = stack.pop()
        for u in reverse.get(v, ()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return [i in seen for i in range(1, n + 1)]


def fraction_in_range(den, lo, hi):
    """Whether some fraction with the given denominator lies in [lo, hi]."""
    return math.floor(hi * den) >= math.ceil(lo * den)
