"""k-relatedness of sets of positive integers.

``L`` and ``L'`` are related via ``k`` when every ``m`` in ``L`` above
``(k+1)^2`` has a partner ``m'`` in ``L'`` with ``m/k <= m' <= k m``, and
symmetrically.  Membership in ``[m/k, k m]`` is tested as
``m <= k m'`` and ``m' <= k m`` so that everything stays in integers.

Infinite sets only enter through finite truncations; the growth of
:func:`min_witness_k` over deeper truncations (see :func:`divergence_profile`)
is the finite trace of two sets failing to be related.
"""

from bisect import bisect_left
from dataclasses import dataclass
from math import isqrt

from .errors import double_exponential
from .families import DEFAULT_TOP, SetSpec, wise_chong_length


class NatSet(tuple):
    """Strictly increasing tuple of positive integers."""

    def __new__(cls, values=()):
        vals = sorted(set(values))
        if vals and vals[0] < 1:
            raise ValueError(f"NatSet elements must be positive, got {vals[0]}")
        return super().__new__(cls, vals)

    def __repr__(self):
        return f"NatSet({list(self)!r})"


def _in_interval(m, partner, k):
    return m <= k * partner and partner <= k * m


def _find_partner(m, others, k):
    """Smallest element of ``others`` in ``[m/k, k m]``, or None."""
    lo = -(-m // k)
    idx = bisect_left(others, lo)
    if idx < len(others) and _in_interval(m, others[idx], k):
        return others[idx]
    return None


@dataclass(frozen=True)
class RelatednessWitness:
    """Partners for every element in both directions; ``None`` marks an element
    at or below the threshold ``(k+1)^2``, which needs no partner."""

    left: NatSet
    right: NatSet
    k: int
    forward: tuple  # ((m, partner_or_None), ...)
    backward: tuple
    note: str = ""

    ok = True

    def __bool__(self):
        return True

    def partner(self, m, direction="forward"):
        return dict(self.forward if direction == "forward" else self.backward)[m]

    def is_valid(self):
        threshold = (self.k + 1) ** 2
        for src, dst, pairs in ((self.left, self.right, self.forward),
                                (self.right, self.left, self.backward)):
            if [m for m, _ in pairs] != list(src):
                return False
            target = set(dst)
            for m, p in pairs:
                if m > threshold and (p is None or p not in target or not _in_interval(m, p, self.k)):
                    return False
        return True


@dataclass(frozen=True)
class RelatednessFailure:
    k: int
    element: int
    direction: str  # "forward": element of L lacks a partner in L'

    ok = False

    def __bool__(self):
        return False

    def __str__(self):
        src = "L" if self.direction == "forward" else "L'"
        return (f"k={self.k}: {self.element} in {src} exceeds {(self.k + 1) ** 2} "
                f"but has no partner in [{self.element}/{self.k}, {self.k * self.element}]")


def related_via_k(L, Lp, k):
    """Witness that ``L`` and ``Lp`` are related via ``k``, or the first failure."""
    if k < 1:
        raise ValueError("k must be >= 1")
    L, Lp = NatSet(L), NatSet(Lp)
    threshold = (k + 1) ** 2
    sides = []
    for direction, src, dst in (("forward", L, Lp), ("backward", Lp, L)):
        pairs = []
        for m in src:
            if m <= threshold:
                pairs.append((m, None))
                continue
            p = _find_partner(m, dst, k)
            if p is None:
                return RelatednessFailure(k, m, direction)
            pairs.append((m, p))
        sides.append(tuple(pairs))
    return RelatednessWitness(L, Lp, k, sides[0], sides[1])


def vacuity_bound(L, Lp):
    """Least k >= 1 with ``(k+1)^2 >= max(L u L')``: every clause is then vacuous."""
    top = max(list(L) + list(Lp), default=1)
    r = isqrt(top - 1) + 1 if top > 1 else 1  # ceil(sqrt(top))
    return max(1, r - 1)


def min_witness_k(L, Lp):
    """Least k relating the two finite sets, by binary search (relatedness is monotone in k)."""
    lo, hi = 1, vacuity_bound(L, Lp)
    while lo < hi:
        mid = (lo + hi) // 2
        if related_via_k(L, Lp, mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def compose_witness(w1, w2):
    """Relate A to C via ``k k'`` from witnesses for (A, B) via k and (B, C) via k'.

    Partners are chained through B.  An element above ``(k k'+1)^2`` always
    has non-vacuous partners in both witnesses, but if a chain is broken the
    partner is searched afresh and the witness ``note`` says so.
    """
    if tuple(w1.right) != tuple(w2.left):
        raise ValueError("witnesses do not share the middle set")
    kk = w1.k * w2.k
    threshold = (kk + 1) ** 2
    fallbacks = 0
    sides = []
    for first, second, src, dst in ((w1.forward, w2.forward, w1.left, w2.right),
                                    (w2.backward, w1.backward, w2.right, w1.left)):
        step1, step2 = dict(first), dict(second)
        pairs = []
        for m in src:
            if m <= threshold:
                pairs.append((m, None))
                continue
            mid = step1.get(m)
            p = step2.get(mid) if mid is not None else None
            if p is None or not _in_interval(m, p, kk):
                fallbacks += 1
                p = _find_partner(m, dst, kk)
                if p is None:
                    raise ValueError(f"no partner for {m} at k={kk}; input witnesses are invalid")
            pairs.append((m, p))
        sides.append(tuple(pairs))
    note = "composed" if not fallbacks else f"composed with {fallbacks} fresh partner searches"
    out = RelatednessWitness(w1.left, w2.right, kk, sides[0], sides[1], note)
    if not out.is_valid():
        raise AssertionError("composed witness failed re-validation")
    return out


@dataclass(frozen=True)
class AffineReport:
    scaled: object  # S ~ nS via n
    shifted: object  # S ~ S+n via n+1

    @property
    def ok(self):
        return bool(self.scaled) and bool(self.shifted)


def affine_transform_check(S, n):
    S = NatSet(S)
    if n < 1:
        raise ValueError("n must be positive")
    return AffineReport(related_via_k(S, [n * s for s in S], n),
                        related_via_k(S, [s + n for s in S], n + 1))


def _indices(S, depth):
    if isinstance(S, SetSpec):
        if depth is None and not S.is_finite:
            raise ValueError(f"set {S} is infinite; give a depth")
        return S.truncate(depth)
    return tuple(n for n in sorted(S) if depth is None or n <= depth)


def length_spectrum(S, top=DEFAULT_TOP, depth=None):
    """``{top(top+1) + 2 top 2^(2^n) : n in S, n <= depth}``."""
    return NatSet(wise_chong_length(n, top) for n in _indices(S, depth))


def raw_spectrum(S, depth=None):
    """``{2^(2^n) : n in S, n <= depth}``."""
    return NatSet(double_exponential(n) for n in _indices(S, depth))


@dataclass(frozen=True)
class ProfileRow:
    depth: int
    min_k: int
    left_size: int
    right_size: int

    def to_json(self):
        return {"depth": self.depth, "min_k": str(self.min_k),
                "left_size": self.left_size, "right_size": self.right_size}


def divergence_profile(S, Sp, depth, mode="raw", top=DEFAULT_TOP):
    """min_witness_k of the depth-d truncations for d = 0..depth."""
    if mode not in ("raw", "spectrum"):
        raise ValueError(f"mode must be 'raw' or 'spectrum', got {mode!r}")
    rows = []
    for d in range(depth + 1):
        if mode == "raw":
            L, Lp = raw_spectrum(S, d), raw_spectrum(Sp, d)
        else:
            L, Lp = length_spectrum(S, top, d), length_spectrum(Sp, top, d)
        rows.append(ProfileRow(d, min_witness_k(L, Lp), len(L), len(Lp)))
    return rows


def format_profile(rows):
    header = ("depth", "min_k", "left_size", "right_size")
    body = [(str(r.depth), str(r.min_k), str(r.left_size), str(r.right_size)) for r in rows]
    widths = [max(len(h), *(len(b[i]) for b in body)) if body else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(b, widths)) for b in body]
    return "\n".join(lines)


def sym_diff(S, Sp, depth=None):
    return tuple(sorted(set(_indices(S, depth)) ^ set(_indices(Sp, depth))))
