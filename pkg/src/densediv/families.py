"""Integer families: membership, enumeration, counting, and exact identities.

Families are either "chain" families B_theta -- defined by a condition
p_{j+1} <= theta(p_1...p_j) on the nondecreasing prime factorization -- or
the recursively defined densely-divisible families Dense(i)/StrongDense(i),
whose membership is a y-dense-chain condition on filtered divisor lists.

All boundary comparisons (p <= y m^a and divisor ratios d' <= y d) are done
in exact integer arithmetic for rational y and a; no float ever decides a
membership.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, ResourceLimitError
from .integers import (
    DEFAULT_DIVISOR_CAP,
    FactoredInteger,
    divisor_lists,
    divisors,
    factorize,
    primes_upto,
    sieve_spf,
)

_B_KINDS = frozenset({"smooth", "thetalower", "thetaupper", "bpower", "bstar"})
_D_KINDS = frozenset({"dense", "strongdense"})
KINDS = _B_KINDS | _D_KINDS


@dataclass(frozen=True)
class FamilySpec:
    """One integer family: kind, rational y, and its i or a parameter."""

    kind: str
    y: Fraction
    i: int | None = None
    a: Fraction | None = None
    squarefree: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "y", Fraction(self.y))
        if self.y <= 1:
            raise DomainError("y must be > 1")
        if self.kind in ("dense", "strongdense", "thetalower", "thetaupper"):
            if self.i is None or self.i < 1:
                raise DomainError(f"{self.kind} requires i >= 1")
            if self.a is not None and self.a != Fraction(1, self.i):
                raise DomainError("a is implicitly 1/i for this kind")
        elif self.kind in ("bpower", "bstar"):
            if self.a is None:
                raise DomainError(f"{self.kind} requires parameter a")
            object.__setattr__(self, "a", Fraction(self.a))
            if self.a <= 0:
                raise DomainError("a must be > 0")

    @property
    def exponent(self) -> Fraction | None:
        """The a-parameter governing the density model (1/i for i-kinds)."""
        if self.kind == "smooth":
            return Fraction(0)
        if self.a is not None:
            return self.a
        return Fraction(1, self.i)


@dataclass(frozen=True)
class CountReport:
    spec: FamilySpec
    x: int
    count: int
    u: float
    model: float | None = None

    @property
    def ratio(self) -> float | None:
        return None if not self.model else self.count / self.model


# ---------------------------------------------------------------------------
# exact theta comparisons
# ---------------------------------------------------------------------------


def _theta_allows(spec: FamilySpec, p: int, m: int) -> bool:
    """Exact test p <= theta(m) for the chain families."""
    py, qy = spec.y.numerator, spec.y.denominator
    kind = spec.kind
    if kind == "smooth":
        return p * qy <= py
    if kind == "bpower":
        pa, qa = spec.a.numerator, spec.a.denominator
        return p**qa * qy**qa <= py**qa * m**pa
    if kind == "bstar":
        pa, qa = spec.a.numerator, spec.a.denominator
        return p * qy <= py or p**qa * qy**pa <= py**pa * m**pa
    if kind == "thetalower":
        i = spec.i
        return p * qy <= py or p**i * qy <= py * m
    if kind == "thetaupper":
        i = spec.i
        return p**i * qy**i <= py**i * m
    raise DomainError(f"{kind} is not a chain family")


def _kth_root_floor(num: int, k: int) -> int:
    """floor(num**(1/k)) for num >= 0, exact (integer Newton)."""
    if num < 0:
        raise DomainError("negative radicand")
    if k == 1 or num == 0:
        return num
    r = 1 << -(-num.bit_length() // k)  # upper start: r^k >= num
    while True:
        r2 = ((k - 1) * r + num // r ** (k - 1)) // k
        if r2 >= r:
            break
        r = r2
    while r**k > num:
        r -= 1
    while (r + 1) ** k <= num:
        r += 1
    return r


def theta_floor(spec: FamilySpec, m: int) -> int:
    """Exact floor(theta(m)) for a chain family; P^-(n) > theta(m) iff
    P^-(n) > theta_floor since prime factors are integers."""
    py, qy = spec.y.numerator, spec.y.denominator
    kind = spec.kind
    if kind == "smooth":
        return py // qy
    if kind == "bpower":
        pa, qa = spec.a.numerator, spec.a.denominator
        return _kth_root_floor(py**qa * m**pa // qy**qa, qa)
    if kind == "thetaupper":
        i = spec.i
        return _kth_root_floor(py**i * m // qy**i, i)
    if kind == "bstar":
        pa, qa = spec.a.numerator, spec.a.denominator
        return max(py // qy, _kth_root_floor(py**pa * m**pa // qy**pa, qa))
    if kind == "thetalower":
        i = spec.i
        return max(py // qy, _kth_root_floor(py * m // qy, i))
    raise DomainError(f"{kind} is not a chain family")


def _chain_member(spec: FamilySpec, f: FactoredInteger) -> bool:
    """Membership in a chain family from the sorted prime factorization."""
    if spec.squarefree and not f.is_squarefree:
        return False
    m = 1
    for p in f.prime_list():
        if not _theta_allows(spec, p, m):
            return False
        m *= p
    return True


# ---------------------------------------------------------------------------
# Dense / StrongDense membership (single n, memoized per oracle)
# ---------------------------------------------------------------------------


class FamilyOracle:
    """Memoized Dense/StrongDense membership for one y.

    Caches are value-keyed, so repeated divisor lookups across a bulk
    enumeration share work; safe to reuse across calls with the same y.
    """

    def __init__(self, y: Fraction, spf=None, divisor_cap: int = DEFAULT_DIVISOR_CAP):
        self.y = Fraction(y)
        self.py, self.qy = self.y.numerator, self.y.denominator
        self.spf = spf
        self.cap = divisor_cap
        self._dense: dict[tuple[int, int], bool] = {}
        self._strong: dict[tuple[int, int], bool] = {}
        self._divs: dict[int, list[int]] = {}

    def _divisors(self, n: int) -> list[int]:
        d = self._divs.get(n)
        if d is None:
            d = divisors(factorize(n, self.spf), cap=self.cap)
            self._divs[n] = d
        return d

    def dense(self, n: int, i: int) -> bool:
        if i <= 0 or n == 1:
            return True
        key = (i, n)
        hit = self._dense.get(key)
        if hit is not None:
            return hit
        ok = self.dense(n, i - 1)
        if ok:
            py, qy = self.py, self.qy
            last = 1
            for d in self._divisors(n):
                if self.dense(d, i - 1):
                    if d * qy > last * py:
                        ok = False
                        break
                    last = d
            # the filtered list always ends at n here since n is D_{i-1}
        self._dense[key] = ok
        return ok

    def strong(self, n: int, i: int) -> bool:
        if i <= 0 or n == 1:
            return True
        key = (i, n)
        hit = self._strong.get(key)
        if hit is not None:
            return hit
        py, qy = self.py, self.qy
        divs = self._divisors(n)
        nn = len(divs)
        ok = True
        for j in range(i):
            # sequence {d : d in D*_j, n/d in D*_{i-1-j}} must contain 1
            # (i.e. n in D*_{i-1-j}) and n (i.e. n in D*_j), and be y-dense
            if not self.strong(n, i - 1 - j):
                ok = False
                break
            last = 0
            for k in range(nn):
                d = divs[k]
                if self.strong(d, j) and self.strong(divs[nn - 1 - k], i - 1 - j):
                    if last and d * qy > last * py:
                        last = 0
                        break
                    last = d
            if last != n:
                ok = False
                break
        self._strong[key] = ok
        return ok


_ORACLES: dict[Fraction, FamilyOracle] = {}


def _oracle(y: Fraction) -> FamilyOracle:
    if y not in _ORACLES:
        _ORACLES[y] = FamilyOracle(y)
    return _ORACLES[y]


def is_member(n: int | FactoredInteger, spec: FamilySpec) -> bool:
    """Exact membership of n in the family."""
    f = n if isinstance(n, FactoredInteger) else factorize(n)
    if f.n == 1:
        return True
    if spec.squarefree and not f.is_squarefree:
        return False
    if spec.kind in _B_KINDS:
        return _chain_member(spec, f)
    orc = _oracle(spec.y)
    if spec.kind == "dense":
        return orc.dense(f.n, spec.i)
    return orc.strong(f.n, spec.i)


# ---------------------------------------------------------------------------
# tree enumeration / counting for chain families
# ---------------------------------------------------------------------------


def _prime_ceiling(spec: FamilySpec, x: int) -> int:
    """Safe upper bound for primes appearing in members <= x."""
    yf = float(spec.y)
    a = spec.exponent
    af = float(a) if a is not None else 1.0
    if spec.kind == "smooth":
        return min(x, int(yf) + 1)
    base = (yf * x**af) ** (1.0 / (1.0 + af))
    alt = (yf * x) ** (af / (1.0 + af))
    return min(x, int(max(base, alt, yf)) + 10)


def _iter_tree(spec: FamilySpec, x: int, collect: bool, node_budget: int = 200_000_000):
    """DFS over nondecreasing prime chains obeying theta; every node is a member."""
    if x < 1:
        raise DomainError("x must be >= 1")
    primes = primes_upto(_prime_ceiling(spec, x))
    members = [1] if collect else None
    count = 1
    sf = spec.squarefree
    stack = [(1, 0)]
    nodes = 0
    while stack:
        m, i0 = stack.pop()
        lim = x // m
        hi = bisect_right(primes, lim)
        for idx in range(i0, hi):
            p = primes[idx]
            if not _theta_allows(spec, p, m):
                break
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimitError("enumeration node budget exceeded")
            child = m * p
            count += 1
            if collect:
                members.append(child)
            stack.append((child, idx + 1 if sf else idx))
    return count, members


def _count_dense2_tree(x: int, y: Fraction, squarefree: bool, collect: bool):
    """Dense(2) via the ThetaUpper(2) superset tree, filtering each candidate
    with an incrementally maintained divisor list + Dense(1) flags.

    A divisor d*p with p >= P^+(d) is Dense(1) iff d is Dense(1) and p <= y d
    (Tenenbaum chain extension), which makes the filter O(tau) per node.
    """
    py, qy = y.numerator, y.denominator
    PY2, QY2 = py * py, qy * qy
    primes = primes_upto(int((float(y) ** 2 * x) ** (1.0 / 3.0)) + int(float(y)) + 10)
    members = [1] if collect else None
    count = 1

    def chain_ok(divs: list[int], flags: list[bool]) -> bool:
        if not flags[-1]:
            return False
        last = 1
        for d, f in zip(divs, flags):
            if f:
                if d * qy > last * py:
                    return False
                last = d
        return True

    stack = [(1, 0, [1], [True])]
    while stack:
        m, i0, divs, flags = stack.pop()
        lim = x // m
        hi = bisect_right(primes, lim)
        for idx in range(i0, hi):
            p = primes[idx]
            if p * p * QY2 > PY2 * m:
                break
            dp = [d * p for d in divs]
            nd: list[int] = []
            nf: list[bool] = []
            n1 = len(divs)
            j = k = 0
            while j < n1 or k < n1:
                if j < n1 and (k >= n1 or divs[j] <= dp[k]):
                    if nd and nd[-1] == divs[j]:
                        j += 1
                        continue
                    nd.append(divs[j])
                    nf.append(flags[j])
                    j += 1
                else:
                    if nd and nd[-1] == dp[k]:
                        k += 1
                        continue
                    nd.append(dp[k])
                    nf.append(flags[k] and p * qy <= py * divs[k])
                    k += 1
            child = m * p
            if chain_ok(nd, nf):
                count += 1
                if collect:
                    members.append(child)
            stack.append((child, idx + 1 if squarefree else idx, nd, nf))
    return count, members


def enumerate_members(spec: FamilySpec, x: int) -> list[int]:
    """All members of the family up to x, sorted increasing."""
    if x < 1:
        raise DomainError("x must be >= 1")
    if spec.kind in _B_KINDS:
        _, members = _iter_tree(spec, x, collect=True)
        members.sort()
        return members
    if spec.kind == "dense" and spec.i == 2:
        _, members = _count_dense2_tree(x, spec.y, spec.squarefree, collect=True)
        members.sort()
        return members
    # Dense/StrongDense: enumerate the ThetaUpper(i) superset, filter exactly.
    superset = enumerate_members(
        FamilySpec("thetaupper", spec.y, i=spec.i, squarefree=spec.squarefree), x
    )
    orc = _oracle(spec.y)
    test = orc.dense if spec.kind == "dense" else orc.strong
    return [n for n in superset if test(n, spec.i)]


def count_members(spec: FamilySpec, x: int) -> int:
    """The counting function of the family at x (exact)."""
    if x < 1:
        raise DomainError("x must be >= 1")
    if spec.kind in _B_KINDS:
        count, _ = _iter_tree(spec, x, collect=False)
        return count
    if spec.kind == "dense" and spec.i == 2:
        count, _ = _count_dense2_tree(x, spec.y, spec.squarefree, collect=False)
        return count
    return len(enumerate_members(spec, x))


def count_family(spec: FamilySpec, x: int, with_model: bool = True) -> CountReport:
    """CountReport with u = log x / log y and model x*rho_a(u) when available."""
    from ._constants import ZETA2
    from .rho import cached_rho_table

    c = count_members(spec, x)
    u = math.log(x) / math.log(float(spec.y)) if x > 1 else 0.0
    model = None
    if with_model and u <= 58.0:
        a = spec.exponent
        table = cached_rho_table(a, u_max=max(4.0, math.ceil(u) + 2.0))
        model = x * float(table(u))
        if spec.squarefree:
            model /= ZETA2
    return CountReport(spec=spec, x=x, count=c, u=u, model=model)


# ---------------------------------------------------------------------------
# bulk membership tables (for the sandwich and equality scans)
# ---------------------------------------------------------------------------


def membership_tables(N: int, y: Fraction, imax: int) -> dict:
    """Byte tables over n <= N: smooth, thetalower/thetaupper/dense/strongdense
    per level i = 0..imax.  Built by sieving + divisor-list DP."""
    y = Fraction(y)
    py, qy = y.numerator, y.denominator
    spf = sieve_spf(max(N, 2))

    # prime chains per n for the theta families
    smooth = bytearray(N + 1)
    smooth[1] = 1
    tl = [bytearray([1]) * (N + 1) for _ in range(imax + 1)]
    tu = [bytearray([1]) * (N + 1) for _ in range(imax + 1)]
    for n in range(2, N + 1):
        m = n
        plist = []
        while m > 1:
            p = int(spf[m])
            while m % p == 0:
                plist.append(p)
                m //= p
        plist.sort()
        smooth[n] = 1 if plist[-1] * qy <= py else 0
        for i in range(1, imax + 1):
            okl = okt = True
            m = 1
            for p in plist:
                if okl and not (p * qy <= py or p**i * qy <= py * m):
                    okl = False
                if okt and p**i * qy**i > py**i * m:
                    okt = False
                if not (okl or okt):
                    break
                m *= p
            tl[i][n] = 1 if okl else 0
            tu[i][n] = 1 if okt else 0

    dl = divisor_lists(N)
    dense = [bytearray([1]) * (N + 1)]
    for i in range(1, imax + 1):
        prev = dense[i - 1]
        cur = bytearray(N + 1)
        cur[1] = 1
        for n in range(2, N + 1):
            if not prev[n]:
                continue
            last = 1
            ok = True
            for d in dl[n]:
                if prev[d]:
                    if d * qy > last * py:
                        ok = False
                        break
                    last = d
            cur[n] = 1 if ok else 0
        dense.append(cur)

    strong = [bytearray([1]) * (N + 1)]
    for i in range(1, imax + 1):
        cur = bytearray(N + 1)
        cur[1] = 1
        for n in range(2, N + 1):
            divs = dl[n]
            nn = len(divs)
            good = True
            for j in range(i):
                A = strong[j]
                Bt = strong[i - 1 - j]
                if not Bt[n]:  # 1 must belong to the filtered sequence
                    good = False
                    break
                last = 0
                ok = True
                for k in range(nn):
                    d = divs[k]
                    if A[d] and Bt[divs[nn - 1 - k]]:
                        if last and d * qy > last * py:
                            ok = False
                            break
                        last = d
                if not ok or last != n:
                    good = False
                    break
            cur[n] = 1 if good else 0
        strong.append(cur)

    return {
        "smooth": smooth,
        "thetalower": tl,
        "thetaupper": tu,
        "dense": dense,
        "strongdense": strong,
    }


# ---------------------------------------------------------------------------
# Schinzel-Szekeres function and A_beta
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SSFValue:
    """F_beta(n): the maximizing divisor and the exact comparison key.

    For beta = pb/qb the key is d**qb * P^-(d)**pb; keys compare exactly like
    the real values d * P^-(d)**beta (same qb).  value is the float view.
    """

    d: int
    key: int
    beta: Fraction

    @property
    def value(self) -> float:
        return float(self.key) ** (1.0 / self.beta.denominator)


def schinzel_szekeres(n: int | FactoredInteger, beta: Fraction | int) -> SSFValue:
    """F_beta(n) = max over divisors d > 1 of d * (P^-(d))^beta; F_beta(1) = 1."""
    beta = Fraction(beta)
    if beta <= 0:
        raise DomainError("beta must be > 0")
    f = n if isinstance(n, FactoredInteger) else factorize(n)
    pb, qb = beta.numerator, beta.denominator
    if f.n == 1:
        return SSFValue(d=1, key=1, beta=beta)
    best_d, best_key = 1, 1
    for d in divisors(f):
        if d == 1:
            continue
        p = d
        for q, _ in f.factors:
            if d % q == 0:
                p = q
                break
        key = d**qb * p**pb
        if key > best_key:
            best_key, best_d = key, d
    return SSFValue(d=best_d, key=best_key, beta=beta)


def _ssf_below(f: FactoredInteger, bound_num: int, bound_den: int, pb: int, qb: int) -> bool:
    """Exact F_beta(n) <= bound (bound = bound_num/bound_den), beta = pb/qb."""
    if f.n == 1:
        return bound_num >= bound_den
    for d in divisors(f):
        if d == 1:
            continue
        p = d
        for q, _ in f.factors:
            if d % q == 0:
                p = q
                break
        # d * p^beta <= B  <=>  d^qb p^pb B_den^qb <= B_num^qb
        if d**qb * p**pb * bound_den**qb > bound_num**qb:
            return False
    return True


def count_A_beta(x: int, y: Fraction | int, beta: Fraction | int, squarefree: bool = False) -> int:
    """|{n <= x : F_beta(n) <= x*y}| by direct scan (exact comparisons)."""
    if x < 1:
        raise DomainError("x must be >= 1")
    y = Fraction(y)
    if y < 1:
        raise DomainError("y must be >= 1")
    beta = Fraction(beta)
    pb, qb = beta.numerator, beta.denominator
    bound = x * y
    spf = sieve_spf(max(x, 2))
    total = 0
    for n in range(1, x + 1):
        f = factorize(n, spf)
        if squarefree and not f.is_squarefree:
            continue
        if _ssf_below(f, bound.numerator, bound.denominator, pb, qb):
            total += 1
    return total


# ---------------------------------------------------------------------------
# Phi counts and the exact identities
# ---------------------------------------------------------------------------


def _squarefree_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[0] = False
    for p in primes_upto(math.isqrt(limit)):
        mask[p * p :: p * p] = False
    return mask


def phi_count(x: float, y: float | Fraction, squarefree: bool = False, spf=None) -> int:
    """Phi(x,y) = |{1 <= n <= x : P^-(n) > y}| (mu^2(n)=1 too if squarefree).

    Counts n = 1 always (P^-(1) = +inf).  Exact for rational y since
    P^-(n) > y iff P^-(n) > floor(y).
    """
    if x < 1:
        return 0
    xi = int(math.floor(x))
    t = int(Fraction(y)) if Fraction(y) == int(Fraction(y)) else math.floor(Fraction(y))
    if spf is None or len(spf) <= xi:
        spf = sieve_spf(max(xi, 2))
    vals = spf[2 : xi + 1]
    keep = vals > t
    if squarefree:
        keep = keep & _squarefree_mask(xi)[2 : xi + 1]
    return 1 + int(np.count_nonzero(keep))


def check_phi_identity(x: int, spec: FamilySpec) -> bool:
    """Exact check of  [x] = sum over members n of Phi(x/n, theta(n)),
    or its squarefree analogue with Phi_0 on both sides."""
    if x < 1:
        raise DomainError("x must be >= 1")
    if spec.kind not in _B_KINDS:
        raise DomainError("identity applies to chain families")
    if Fraction(spec.y) < 2:
        raise DomainError("theta(n) >= 2 requires y >= 2")
    spf = sieve_spf(max(x, 2))
    sf = spec.squarefree
    sfmask = _squarefree_mask(x) if sf else None
    members = enumerate_members(spec, x)
    rhs = 0
    for n in members:
        t = theta_floor(spec, n)
        xn = x // n
        if xn < 1:
            continue
        keep = spf[2 : xn + 1] > t
        if sf:
            keep = keep & sfmask[2 : xn + 1]
        rhs += 1 + int(np.count_nonzero(keep))
    lhs = int(np.count_nonzero(_squarefree_mask(x)[1:])) if sf else x
    return lhs == rhs


def check_phi_identity_range(x_max: int, spec: FamilySpec) -> bool:
    """The same identity verified simultaneously for every x <= x_max."""
    if spec.kind not in _B_KINDS:
        raise DomainError("identity applies to chain families")
    spf = sieve_spf(max(x_max, 2))
    sf = spec.squarefree
    sfmask = _squarefree_mask(x_max) if sf else None
    members = enumerate_members(spec, x_max)
    rhs = np.zeros(x_max + 1, dtype=np.int64)
    for n in members:
        t = theta_floor(spec, n)
        cap = x_max // n
        keep = np.zeros(cap + 1, dtype=np.int64)
        if cap >= 1:
            keep[1] = 1
            if cap >= 2:
                k = spf[2 : cap + 1] > t
                if sf:
                    k = k & sfmask[2 : cap + 1]
                keep[2:] = k
        prefix = np.cumsum(keep)
        xs = np.arange(n, x_max + 1)
        rhs[xs] += prefix[xs // n]
    if sf:
        lhs = np.cumsum(np.concatenate(([0], _squarefree_mask(x_max)[1:].astype(np.int64))))
    else:
        lhs = np.arange(x_max + 1, dtype=np.int64)
    return bool(np.array_equal(rhs[1:], lhs[1:]))


def check_partial_density_sum(spec: FamilySpec, N: int) -> float:
    """Partial sum of (1/n) * prod_{p <= theta(n)} (1 - 1/p) over members n <= N
    (squarefree variant uses prod (1 + 1/p)^{-1}); increases to 1 with N."""
    if N < 1:
        raise DomainError("N must be >= 1")
    if spec.kind not in _B_KINDS:
        raise DomainError("density sum applies to chain families")
    members = enumerate_members(spec, N)
    tmax = max(theta_floor(spec, n) for n in members)
    ps = primes_upto(tmax)
    parr = np.array(ps, dtype=float)
    if spec.squarefree:
        factors = 1.0 / (1.0 + 1.0 / parr)
    else:
        factors = 1.0 - 1.0 / parr
    prefix = np.concatenate(([1.0], np.cumprod(factors)))
    total = 0.0
    for n in members:
        t = theta_floor(spec, n)
        k = bisect_right(ps, t)
        total += prefix[k] / n
    return total


def check_ssf_identity(x: int, y: Fraction | int, beta: Fraction | int) -> bool:
    """Exact check of |{n <= x : F_beta(n)/n <= y^beta}| = B_{1/beta}(x, y)."""
    if x < 1:
        raise DomainError("x must be >= 1")
    y = Fraction(y)
    if y < 2:
        raise DomainError("y must be >= 2")
    beta = Fraction(beta)
    pb, qb = beta.numerator, beta.denominator
    spf = sieve_spf(max(x, 2))
    lhs = 0
    for n in range(1, x + 1):
        f = factorize(n, spf)
        # F_beta(n) <= n y^beta  <=>  every d: d^qb p^pb y_den^pb <= n^qb y_num^pb
        ok = True
        for d in divisors(f):
            if d == 1:
                continue
            p = d
            for q, _ in f.factors:
                if d % q == 0:
                    p = q
                    break
            if d**qb * p**pb * y.denominator**pb > n**qb * y.numerator**pb:
                ok = False
                break
        if ok:
            lhs += 1
    rhs = count_members(FamilySpec("bpower", y, a=Fraction(1) / beta), x)
    return lhs == rhs


def check_ssf_identity_range(x_max: int, y: Fraction | int, beta: Fraction | int) -> bool:
    """Per-n form of the identity: F_beta(n) <= n y^beta iff n is a member of
    the a = 1/beta chain family, for every n <= x_max.  Implies the counting
    identity at every x <= x_max."""
    y = Fraction(y)
    beta = Fraction(beta)
    pb, qb = beta.numerator, beta.denominator
    members = set(enumerate_members(FamilySpec("bpower", y, a=Fraction(1) / beta), x_max))
    spf = sieve_spf(max(x_max, 2))
    for n in range(1, x_max + 1):
        f = factorize(n, spf)
        ok = True
        for d in divisors(f):
            if d == 1:
                continue
            p = d
            for q, _ in f.factors:
                if d % q == 0:
                    p = q
                    break
            if d**qb * p**pb * y.denominator**pb > n**qb * y.numerator**pb:
                ok = False
                break
        if ok != (n in members):
            return False
    return True


def _d1_member(n: int, y: Fraction, spf=None) -> bool:
    """Tenenbaum chain: n in Dense(1) iff p_{j+1} <= y p_1...p_j for all j."""
    if n == 1:
        return True
    f = factorize(n, spf)
    py, qy = y.numerator, y.denominator
    m = 1
    for p in f.prime_list():
        if p * qy > py * m:
            return False
        m *= p
    return True


def theta2_of(m: int, y: Fraction, spf=None) -> Fraction:
    """theta(m) = y * max over Dense(1)-divisors d of min(m/d, d)."""
    best = 0
    f = factorize(m, spf)
    for d in divisors(f):
        md = min(m // d, d)
        if md > best and _d1_member(d, y, spf):
            best = md
    return y * best


def check_theta2(n: int | FactoredInteger, y: Fraction | int, spf=None) -> bool:
    """Dense(2) membership by definition equals the chain test with
    theta(m) = y * max_{d | m, d in Dense(1)} min(m/d, d)."""
    y = Fraction(y)
    f = n if isinstance(n, FactoredInteger) else factorize(n, spf)
    by_def = is_member(f, FamilySpec("dense", y, i=2))
    m = 1
    by_chain = True
    for p in f.prime_list():
        th = theta2_of(m, y, spf)
        if Fraction(p) > th:
            by_chain = False
            break
        m *= p
    return by_def == by_chain


def check_factorization_lemma(
    n: int | FactoredInteger,
    i: int,
    y: Fraction | int,
    R: Fraction | int,
    v: int,
    w: int,
) -> bool:
    """For n in the ThetaLower(i) family, 1 <= R <= y n and v + w = i - 1:
    some factorization n = d_v d_w has R/y <= d_w <= R with d_w in level w,
    d_v in level v (level 0 is every integer)."""
    y = Fraction(y)
    R = Fraction(R)
    f = n if isinstance(n, FactoredInteger) else factorize(n)
    if v < 0 or w < 0 or v + w != i - 1:
        raise DomainError("need v, w >= 0 with v + w = i - 1")
    if not (1 <= R <= y * f.n):
        raise DomainError("need 1 <= R <= y n")
    spec_i = FamilySpec("thetalower", y, i=i)
    if not is_member(f, spec_i):
        raise DomainError(f"{f.n} is not in the ThetaLower({i}) family for y={y}")

    def level_member(k: int, j: int) -> bool:
        if j == 0:
            return True
        return is_member(k, FamilySpec("thetalower", y, i=j))

    lo = R / y
    for dw in divisors(f):
        if lo <= dw <= R and level_member(dw, w) and level_member(f.n // dw, v):
            return True
    return False
