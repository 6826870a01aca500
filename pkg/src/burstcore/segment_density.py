"""Maximum l-segment density of a degree sequence.

A window ``[ts, te]`` of a degree sequence has density equal to the chord
slope ``(csc[te] - csc[ts-1]) / (te - ts + 1)`` of its cumulative sum curve
``csc``. The maximum over windows of length >= l is found with one sweep
that keeps a lower convex hull of the curve points at least ``l`` steps
behind the current end point.

All comparisons are integer cross-multiplications; nothing is rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .density import Density

__all__ = [
    "CacheStateError",
    "CumCurve",
    "HullWindow",
    "MtsCache",
    "cumulative_curve",
    "brute_force_msd",
    "compute_msd",
    "build_cache",
    "update_msd",
    "flush_cache",
    "msd_value",
    "witness_window",
]


class CacheStateError(RuntimeError):
    """A density cache no longer matches the sequence it is asked to update."""


def _values(ds) -> Sequence[int]:
    return ds.values if hasattr(ds, "values") and not isinstance(ds, dict) else ds


def _check_l(l: int, horizon: int) -> None:
    if isinstance(l, bool) or not isinstance(l, int) or l < 1:
        raise ValueError(f"segment length l must be a positive integer, got {l!r}")
    if l > horizon:
        raise ValueError("window longer than horizon")


@dataclass
class CumCurve:
    """Prefix sums of a degree sequence with ``csc[0] = 0``."""

    csc: list[int]

    def slope(self, a: int, b: int) -> Density:
        return Density(self.csc[b] - self.csc[a], b - a)

    def __len__(self):
        return len(self.csc)


def cumulative_curve(ds) -> CumCurve:
    csc = [0]
    acc = 0
    for x in _values(ds):
        acc += x
        csc.append(acc)
    return CumCurve(csc)


@dataclass
class HullWindow:
    """Live part ``ch[i_s..i_e]`` of the lower hull during the sweep."""

    ch: list[int]
    i_s: int
    i_e: int

    def points(self) -> list[int]:
        return self.ch[self.i_s:self.i_e + 1]


@dataclass
class MtsCache:
    """Best window density per end time, restricted to lengths ``l..2l``.

    Entry ``j`` (for ``l <= j <= horizon``) stores the densest window
    ``(start[j], j]`` of the curve with ``j - 2l <= start[j] <= j - l``.
    Windows of length in ``[l, 2l]`` already reach the overall maximum, so
    ``max(entries)`` is the MSD, and decrementing snapshot ``t`` can only
    change entries ``t .. t + 2l - 1``.
    """

    l: int
    horizon: int
    num: list[int]
    den: list[int]
    start: list[int]
    best: int
    # snapshot range decremented since the entries were last refreshed
    dirty: tuple[int, int] | None = None

    def entry(self, j: int) -> Density:
        return Density(self.num[j], self.den[j])

    @property
    def best_density(self) -> Density:
        return Density(self.num[self.best], self.den[self.best])

    @property
    def window(self) -> tuple[int, int]:
        """A window achieving the cached maximum, as 1-based ``[ts, te]``."""
        return self.start[self.best] + 1, self.best

    def rescan(self) -> None:
        num, den = self.num, self.den
        b = self.l
        bn, bd = num[b], den[b]
        for j in range(self.l + 1, self.horizon + 1):
            if num[j] * bd > bn * den[j]:
                b, bn, bd = j, num[j], den[j]
        self.best = b

    def __len__(self):
        return self.horizon - self.l + 1


def brute_force_msd(ds, l: int) -> tuple[Density, tuple[int, int]]:
    """Check every window of length >= ``l``. O(T^2).

    Ties go to the smallest start, then the smallest end.
    """
    vals = _values(ds)
    T = len(vals)
    _check_l(l, T)
    csc = cumulative_curve(vals).csc
    bn, bd = csc[l], l
    bw = (1, l)
    for ts in range(1, T - l + 2):
        base = csc[ts - 1]
        for te in range(ts + l - 1, T + 1):
            s = csc[te] - base
            ln = te - ts + 1
            if s * bd > bn * ln:
                bn, bd, bw = s, ln, (ts, te)
    return Density(bn, bd), bw


def _hull_sweep(csc: list[int], l: int, observer: Callable | None = None) -> tuple[int, int]:
    T = len(csc) - 1
    ch = [0] * (T + 1)
    i_s, i_e = 0, -1
    bn, bd = -1, 1
    for j in range(l, T + 1):
        p = j - l
        cp = csc[p]
        # drop tail points that the new point p puts above the hull
        while i_s < i_e:
            a = ch[i_e - 1]
            b = ch[i_e]
            cb = csc[b]
            if (cp - cb) * (b - a) <= (cb - csc[a]) * (p - b):
                i_e -= 1
            else:
                break
        i_e += 1
        ch[i_e] = p
        cj = csc[j]
        # advance head while the next hull point gives at least as steep a chord to j
        while i_s < i_e:
            a = ch[i_s]
            b = ch[i_s + 1]
            ca = csc[a]
            if (cj - ca) * (b - a) >= (csc[b] - ca) * (j - a):
                i_s += 1
            else:
                break
        a = ch[i_s]
        num = cj - csc[a]
        den = j - a
        if num * bd > bn * den:
            bn, bd = num, den
        if observer is not None:
            observer(j, HullWindow(ch, i_s, i_e))
    return bn, bd


def witness_window(csc: list[int], l: int, num: int, den: int) -> tuple[int, int]:
    """Earliest-start, then earliest-end window of length >= l with density num/den.

    Assumes num/den is the maximum, so a window ``(i, e]`` reaches it exactly
    when ``g(e) >= g(i)`` for ``g(x) = csc[x]*den - num*x``.
    """
    T = len(csc) - 1
    g = [csc[x] * den - num * x for x in range(T + 1)]
    suffix = g[:]
    for x in range(T - 1, -1, -1):
        if suffix[x + 1] > suffix[x]:
            suffix[x] = suffix[x + 1]
    for i in range(0, T - l + 1):
        gi = g[i]
        if suffix[i + l] >= gi:
            for e in range(i + l, T + 1):
                if g[e] >= gi:
                    return i + 1, e
    raise ValueError("density is not attained by any window")


def msd_value(ds, l: int) -> Density:
    """Maximum l-segment density via the hull sweep, without building a cache."""
    vals = _values(ds)
    _check_l(l, len(vals))
    num, den = _hull_sweep(cumulative_curve(vals).csc, l)
    return Density(num, den)


def _tangent(c, hull, j, cj, rev):
    # hull is a lower convex hull, left to right (or reversed if rev);
    # returns the vertex maximizing the chord slope to point j, leftmost on ties
    n = len(hull)
    lo, hi = 0, n - 1
    if rev:
        while lo < hi:
            mid = (lo + hi) >> 1
            a = hull[n - 1 - mid]
            b = hull[n - 2 - mid]
            ca = c[a]
            if (c[b] - ca) * (j - a) < (cj - ca) * (b - a):
                lo = mid + 1
            else:
                hi = mid
        return hull[n - 1 - lo]
    while lo < hi:
        mid = (lo + hi) >> 1
        a = hull[mid]
        b = hull[mid + 1]
        ca = c[a]
        if (c[b] - ca) * (j - a) < (cj - ca) * (b - a):
            lo = mid + 1
        else:
            hi = mid
    return hull[lo]


def _restricted_best(c: list[int], l: int, j_lo: int, j_hi: int):
    """For each end ``j`` in ``[j_lo, j_hi]`` find the start ``i`` in
    ``[max(0, j - 2l), j - l]`` maximizing ``(c[j] - c[i]) / (j - i)``.

    Starts are cut into blocks of ``l + 1``; every admissible range is a
    suffix of one block plus a prefix of the next. Prefix hulls grow left to
    right on a forward pass, suffix hulls grow right to left on a backward
    pass, and each query is a binary search for the tangent vertex.
    Returns the chosen start per ``j`` (list aligned with ``j - j_lo``).
    """
    B = l + 1
    count = j_hi - j_lo + 1
    best_start = [0] * count

    hull: list[int] = []
    block = -1
    for k in range(count):
        j = j_lo + k
        hi = j - l
        s = hi - hi % B
        if s != block:
            block = s
            hull = []
            first = s
        else:
            first = hi
        for p in range(first, hi + 1):
            cp = c[p]
            while len(hull) >= 2:
                a = hull[-2]
                b = hull[-1]
                cb = c[b]
                if (cb - c[a]) * (p - b) >= (cp - cb) * (b - a):
                    hull.pop()
                else:
                    break
            hull.append(p)
        best_start[k] = _tangent(c, hull, j, c[j], False)

    hull = []
    block = -1
    for k in range(count - 1, -1, -1):
        j = j_lo + k
        lo = j - 2 * l
        if lo < 0:
            break
        hi = j - l
        s = hi - hi % B
        if lo >= s:
            continue
        if s != block:
            block = s
            hull = []
            first = s - 1
        else:
            first = lo
        for p in range(first, lo - 1, -1):
            cp = c[p]
            # hull[-1] is the leftmost vertex
            while len(hull) >= 2:
                a = hull[-1]
                b = hull[-2]
                ca = c[a]
                if (ca - cp) * (b - a) >= (c[b] - ca) * (a - p):
                    hull.pop()
                else:
                    break
            hull.append(p)
        i2 = _tangent(c, hull, j, c[j], True)
        i1 = best_start[k]
        cj = c[j]
        # on ties keep the earlier (longer) window
        if (cj - c[i2]) * (j - i1) >= (cj - c[i1]) * (j - i2):
            best_start[k] = i2
    return best_start


def compute_msd(ds, l: int, observer: Callable | None = None) -> tuple[Density, MtsCache, CumCurve]:
    """Maximum l-segment density with its per-end-time cache.

    The value comes from the lower-hull sweep; ``observer(j, hull)`` is called
    after each sweep step if given. The cache stores the best window of
    length ``l..2l`` ending at every ``j`` and ``cache.window`` is the
    earliest-start, earliest-end witnessing window.
    """
    vals = _values(ds)
    T = len(vals)
    _check_l(l, T)
    curve = cumulative_curve(vals)
    num, den = _hull_sweep(curve.csc, l, observer)
    return Density(num, den), build_cache(curve.csc, l, num, den), curve


def build_cache(csc: list[int], l: int, num: int, den: int) -> MtsCache:
    """Per-end-time cache for a curve whose maximum density ``num/den`` is known."""
    T = len(csc) - 1
    starts = _restricted_best(csc, l, l, T)
    c_num = [0] * (T + 1)
    c_den = [1] * (T + 1)
    c_start = [0] * (T + 1)
    for k, i in enumerate(starts):
        j = l + k
        c_num[j] = csc[j] - csc[i]
        c_den[j] = j - i
        c_start[j] = i
    ts, te = witness_window(csc, l, num, den)
    cache = MtsCache(l, T, c_num, c_den, c_start, te)
    # point the cache's best entry at the canonical witness when it is in range
    if te - ts + 1 <= 2 * l and c_start[te] != ts - 1:
        c_num[te] = csc[te] - csc[ts - 1]
        c_den[te] = te - ts + 1
        c_start[te] = ts - 1
    if c_num[te] * den != num * c_den[te]:
        cache.rescan()
    return cache


def update_msd(ds, cache: MtsCache, t: int, l: int | None = None, lazy: bool = False) -> Density:
    """Refresh ``cache`` after ``ds[t]`` (1-based) dropped by one and return the new MSD.

    Only entries ``t .. t + 2l - 1`` can change; they are recomputed from a
    local curve over snapshots ``max(0, t - 2l) .. min(T, t + 2l - 1)``.

    With ``lazy`` the recomputation is put off while ``t`` lies outside the
    best cached window: that window keeps its value and every other entry
    can only shrink, so the maximum is unchanged. Deferred snapshots are
    folded into the next refresh. Individual entries may then overstate
    their value until :func:`flush_cache` runs; the maximum never does.
    """
    vals = _values(ds)
    T = len(vals)
    if l is None:
        l = cache.l
    if T != cache.horizon or l != cache.l:
        raise CacheStateError(
            f"cache built for horizon={cache.horizon}, l={cache.l}; got horizon={T}, l={l}")
    if not 1 <= t <= T:
        raise ValueError(f"timestamp {t} outside [1, {T}]")
    lo = hi = t
    if cache.dirty is not None:
        lo = min(lo, cache.dirty[0])
        hi = max(hi, cache.dirty[1])
    if lazy and not cache.start[cache.best] < t <= cache.best:
        cache.dirty = (lo, hi)
        return Density(cache.num[cache.best], cache.den[cache.best])
    cache.dirty = None
    _refresh(vals, cache, lo, hi)
    return Density(cache.num[cache.best], cache.den[cache.best])


def flush_cache(ds, cache: MtsCache) -> None:
    """Bring every entry of a lazily updated cache up to date."""
    if cache.dirty is not None:
        lo, hi = cache.dirty
        cache.dirty = None
        _refresh(_values(ds), cache, lo, hi)


def _refresh(vals, cache: MtsCache, lo: int, hi: int) -> None:
    l = cache.l
    T = cache.horizon
    j_hi = min(T, hi + 2 * l - 1)
    j_lo = max(lo, l)
    if j_lo > j_hi:
        return
    base = max(0, lo - 2 * l)
    c = [0] * (j_hi - base + 1)
    acc = 0
    for k in range(1, j_hi - base + 1):
        acc += vals[base + k - 1]
        c[k] = acc
    starts = _restricted_best(c, l, j_lo - base, j_hi - base)
    num, den, start = cache.num, cache.den, cache.start
    for k, i in enumerate(starts):
        jl = j_lo - base + k
        j = j_lo + k
        num[j] = c[jl] - c[i]
        den[j] = jl - i
        start[j] = i + base
    if j_lo <= cache.best <= j_hi:
        cache.rescan()
