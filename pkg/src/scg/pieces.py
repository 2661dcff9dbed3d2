"""Pieces between relators and the metric small-cancellation condition.

The longest-common-factor search works on syllables.  A common factor that
crosses at least one syllable boundary is pinned down by the pair of
syllables ``(i, j)`` holding its first letter: the first run must be a suffix
of both syllables, every interior syllable must agree exactly, and the last
run is a common prefix.  Scanning all ``(i, j)`` with the same generator and
sign therefore finds the longest factor in time polynomial in the syllable
counts, whatever the exponents are.

For a relator ``r = q^n`` compared with itself at the same sign, two
occurrences whose letter offsets differ by a multiple of ``|q|`` are the same
way of appearing.  With syllable period ``p`` this is exactly ``i = j (mod p)``
for factors crossing a boundary; the best factor left at such an alignment is
a single run shifted by one letter.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import SCGError
from .words import CompressedWord, CyclicWord, cyclic_normalize, render

SIGN_PAIRS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass(frozen=True)
class Occurrence:
    relator_index: int | None
    sign: int
    syllable: int
    offset: int
    letter_length: int

    @property
    def start(self):
        return (self.syllable, self.offset)

    def to_json(self):
        return {
            "relator_index": self.relator_index,
            "sign": self.sign,
            "syllable": self.syllable,
            "offset": str(self.offset),
            "letter_length": str(self.letter_length),
        }


@dataclass(frozen=True)
class PieceReport:
    piece: CompressedWord
    occ1: Occurrence
    occ2: Occurrence
    ratio: Fraction

    @property
    def length(self):
        return self.piece.length

    def to_json(self):
        return {
            "piece": render(self.piece),
            "length": str(self.piece.length),
            "occ1": self.occ1.to_json(),
            "occ2": self.occ2.to_json(),
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
        }


def _same_run(x, y):
    return x[0] == y[0] and (x[1] > 0) == (y[1] > 0)


def _best_alignment(us, u_cyclic, vs, exclude_period=None):
    """Longest common factor of syllable sequences ``us`` and cyclic ``vs``.

    Returns ``(length, (i, offset_u), (j, offset_v))`` or ``None``.  With
    ``exclude_period`` set, ``us`` and ``vs`` are the same cyclic word and
    alignments with ``i = j (mod exclude_period)`` are the trivial way.
    Among longest factors the lexicographically least start pair wins.
    """
    m, n = len(us), len(vs)
    if not m or not n:
        return None
    single = (u_cyclic and m == 1) or n == 1
    by_run = {}
    for j, (g, e) in enumerate(vs):
        by_run.setdefault((g, e > 0), []).append(j)

    best = None
    best_key = None
    for i, (g, e) in enumerate(us):
        a = abs(e)
        for j in by_run.get((g, e > 0), ()):
            b = abs(vs[j][1])
            if exclude_period is not None and (i - j) % exclude_period == 0:
                if m == 1 or a < 2:
                    continue
                # shift by one letter inside the run: (i, 0) against (j, 1)
                total, start_u, start_v = a - 1, (i, 0), (j, 1)
            else:
                x = a if a < b else b
                total = x
                if not single:
                    lim_u = m if u_cyclic else m - 1 - i
                    k_max = lim_u if lim_u < n else n
                    t = 1
                    while t < k_max:
                        su, sv = us[(i + t) % m], vs[(j + t) % n]
                        if su != sv:
                            break
                        total += abs(su[1])
                        t += 1
                    if t <= k_max:
                        su, sv = us[(i + t) % m], vs[(j + t) % n]
                        if _same_run(su, sv):
                            y = min(abs(su[1]), abs(sv[1]))
                            if u_cyclic and t == m:
                                y = min(y, a - x)
                            if t == n:
                                y = min(y, b - x)
                            total += y
                start_u, start_v = (i, a - x), (j, b - x)
            key = (-total, start_u, start_v)
            if best_key is None or key < best_key:
                best_key = key
                best = (total, start_u, start_v)
    return best


def _as_cyclic(w):
    return w if isinstance(w, CyclicWord) else cyclic_normalize(w)


def longest_common_factor(u, v):
    """A longest common factor of ``u`` and the cyclic word ``v``.

    ``u`` is read cyclically when it is a :class:`CyclicWord` and linearly
    when it is a :class:`CompressedWord`.  Returns
    ``(piece, occurrence_in_u, occurrence_in_v)`` or ``None``.
    """
    v = _as_cyclic(v)
    u_cyclic = isinstance(u, CyclicWord)
    found = _best_alignment(u.syllables, u_cyclic, v.syllables)
    if found is None or found[0] == 0:
        return None
    total, (i, oi), (j, oj) = found
    piece = v.factor(j, oj, total)
    return (piece,
            Occurrence(None, 1, i, oi, total),
            Occurrence(None, 1, j, oj, total))


def _signed(r, sign):
    return r if sign == 1 else r.inverse()


def max_piece(r1, r2, same_relator=False, indices=(0, 1)):
    """Longest piece between two relators over all sign combinations.

    With ``same_relator`` the second argument is ignored and ``r1`` is
    compared with itself, skipping occurrence pairs that are the same way
    (identity or a rotation through the primitive root).  Occurrences in
    ``r`` and ``r^-1`` are always distinct ways.
    """
    r1 = _as_cyclic(r1)
    r2 = r1 if same_relator else _as_cyclic(r2)
    i1, i2 = (indices[0], indices[0]) if same_relator else indices
    best = None
    for s1, s2 in SIGN_PAIRS:
        u, v = _signed(r1, s1), _signed(r2, s2)
        period = u.syllable_period if same_relator and s1 == s2 else None
        found = _best_alignment(u.syllables, True, v.syllables, period)
        if found is None or found[0] == 0:
            continue
        if best is None or found[0] > best[0][0]:
            best = (found, s1, s2, u)
    if best is None:
        return None
    (total, (i, oi), (j, oj)), s1, s2, u = best
    piece = u.factor(i, oi, total)
    ratio = Fraction(total, min(r1.length, r2.length))
    return PieceReport(piece,
                       Occurrence(i1, s1, i, oi, total),
                       Occurrence(i2, s2, j, oj, total),
                       ratio)


@dataclass(frozen=True)
class VerificationReport:
    c_prime: bool
    lam: Fraction
    max_ratio: Fraction
    witness: PieceReport | None
    checked_up_to_length: int
    relator_count: int
    complete: bool

    def to_json(self):
        return {
            "c_prime": self.c_prime,
            "lambda": f"{self.lam.numerator}/{self.lam.denominator}",
            "max_ratio": f"{self.max_ratio.numerator}/{self.max_ratio.denominator}",
            "witness": None if self.witness is None else self.witness.to_json(),
            "checked_up_to_length": str(self.checked_up_to_length),
            "relator_count": self.relator_count,
            "complete": self.complete,
        }


def _pair_job(args):
    i, j, ri, rj = args
    return i, j, max_piece(ri, rj, same_relator=(i == j), indices=(i, j))


def verify_c_prime(p, max_length=None, workers=None):
    """Check that every piece is shorter than ``lambda`` times each relator it lies in.

    Relators are taken from ``p.enumerate_relators(max_length)``; for an
    infinite presentation the verdict only covers that finite prefix, and
    ``complete`` is False.
    """
    relators = p.enumerate_relators(max_length)
    if not relators:
        raise SCGError("no relators within the enumeration bound")
    jobs = [(i, j, relators[i], relators[j])
            for i in range(len(relators)) for j in range(i, len(relators))]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_pair_job, jobs))
    else:
        results = [_pair_job(job) for job in jobs]

    best_ratio, witness = Fraction(0), None
    # results arrive in job order, so strict > keeps the lexicographically first witness
    for i, j, rep in results:
        if rep is not None and rep.ratio > best_ratio:
            best_ratio, witness = rep.ratio, rep
    bound = max_length if max_length is not None else max(r.length for r in relators)
    return VerificationReport(
        c_prime=best_ratio < p.lam,
        lam=p.lam,
        max_ratio=best_ratio,
        witness=witness,
        checked_up_to_length=bound,
        relator_count=len(relators),
        complete=p.is_finite and (max_length is None
                                  or len(relators) == len(p.enumerate_relators(None))),
    )
