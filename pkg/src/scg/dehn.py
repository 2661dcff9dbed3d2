"""Majority reduction and the word problem for C'(1/6) presentations.

A subword ``v`` of ``u`` is major for a relator ``r`` when ``v`` is a factor
of a rotation of ``r`` or ``r^-1`` with ``2|v| > |r|``.  If that rotation reads
``v t`` then ``v = t^-1`` in the group and ``t`` is strictly shorter, so each
replacement strictly shortens the word.  A nonempty word with no major
subword is nontrivial in a C'(1/6) group; the converse direction (trivial
words always reduce to the empty word) is the classical completeness of
Dehn's algorithm for C'(1/6), which this module relies on but does not prove.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import StepLimitExceeded
from .pieces import longest_common_factor
from .words import (
    CompressedWord,
    concat_reduce,
    cyclic_normalize,
    invert,
    letter_slice,
    render,
)

DEFAULT_STEP_LIMIT = 10**6


@dataclass(frozen=True)
class MajorOccurrence:
    relator_index: int
    sign: int
    relator: object  # CyclicWord of r^sign
    u_start: int
    r_start: tuple
    v: CompressedWord
    t: CompressedWord

    @property
    def v_len(self):
        return self.v.length

    @property
    def t_len(self):
        return self.t.length

    @property
    def ratio(self):
        return Fraction(self.v.length, self.relator.length)


@dataclass(frozen=True)
class ReductionStep:
    before: CompressedWord
    occurrence: MajorOccurrence
    after: CompressedWord

    def to_json(self):
        occ = self.occurrence
        return {
            "before": render(self.before),
            "relator_index": occ.relator_index,
            "sign": occ.sign,
            "v_len": str(occ.v_len),
            "after": render(self.after),
        }


@dataclass(frozen=True)
class ReductionTrace:
    start: CompressedWord
    steps: tuple = field(default_factory=tuple)

    @property
    def result(self):
        return self.steps[-1].after if self.steps else self.start

    @property
    def trivial(self):
        return not self.result.syllables

    def to_json(self):
        return {
            "steps": [s.to_json() for s in self.steps],
            "result": "trivial" if self.trivial else "nontrivial",
            "witness": render(self.result),
        }


def _relators_for(u, p):
    n = u.length
    return p.enumerate_relators(2 * n - 1) if n else []


def find_major_subword(u, p, relators=None):
    """The major occurrence with the largest ``|v|/|r|`` in ``u``, or None.

    Only relators with ``|r| < 2|u|`` can have a major subword inside ``u``,
    so an infinite presentation is enumerated up to that length.  Ties go to
    the lower relator index, then sign ``+1``, then the earlier position.
    """
    if relators is None:
        relators = _relators_for(u, p)
    n = u.length
    best = None
    for idx, r in enumerate(relators):
        if r.length >= 2 * n:
            # sorted by length
            break
        for sign in (1, -1):
            rs = r if sign == 1 else r.inverse()
            found = longest_common_factor(u, rs)
            if found is None:
                continue
            piece, occ_u, occ_r = found
            if 2 * piece.length <= rs.length:
                continue
            ratio = Fraction(piece.length, rs.length)
            if best is not None and ratio <= best[0]:
                continue
            u_start = sum(abs(e) for _, e in u.syllables[:occ_u.syllable]) + occ_u.offset
            rot = rs.rotation(occ_r.syllable, occ_r.offset)
            t = letter_slice(rot, piece.length, rot.length)
            best = (ratio, MajorOccurrence(idx, sign, rs, u_start, occ_r.start, piece, t))
    return None if best is None else best[1]


def _replace(u, occ):
    head = letter_slice(u, 0, occ.u_start)
    tail = letter_slice(u, occ.u_start + occ.v_len, u.length)
    return concat_reduce(concat_reduce(head, invert(occ.t)), tail)


def dehn_reduce(u, p, step_limit=DEFAULT_STEP_LIMIT):
    """Replace major subwords until none is left; returns the full trace."""
    relators = _relators_for(u, p)
    steps = []
    current = u
    while True:
        occ = find_major_subword(current, p, relators)
        if occ is None:
            return ReductionTrace(u, tuple(steps))
        if len(steps) >= step_limit:
            raise StepLimitExceeded(f"no majority-reduced form after {step_limit} steps")
        after = _replace(current, occ)
        steps.append(ReductionStep(current, occ, after))
        current = after


def is_trivial(u, p, step_limit=DEFAULT_STEP_LIMIT):
    """Decide ``u = 1`` in a C'(1/6) group.

    Returns ``(verdict, trace)``; for a nontrivial word ``trace.result`` is the
    majority-reduced witness.
    """
    trace = dehn_reduce(u, p, step_limit)
    return trace.trivial, trace


def validate_step(step, relators):
    """Re-check one trace step from scratch; returns a list of problems (empty if sound)."""
    problems = []
    occ = step.occurrence
    if not 0 <= occ.relator_index < len(relators):
        return [f"relator index {occ.relator_index} out of range"]
    r = relators[occ.relator_index]
    target = r if occ.sign == 1 else r.inverse()
    if cyclic_normalize(concat_reduce(occ.v, occ.t)) != target:
        problems.append("v t is not a rotation of the signed relator")
    if 2 * occ.v.length <= target.length:
        problems.append("v is not major")
    if occ.u_start + occ.v.length > step.before.length or \
            letter_slice(step.before, occ.u_start, occ.u_start + occ.v.length) != occ.v:
        problems.append("v does not occur in the word at the recorded position")
    else:
        expect = concat_reduce(concat_reduce(letter_slice(step.before, 0, occ.u_start), invert(occ.t)),
                               letter_slice(step.before, occ.u_start + occ.v.length, step.before.length))
        if expect != step.after:
            problems.append("replacement does not produce the recorded word")
    if step.after.length >= step.before.length:
        problems.append("length did not decrease")
    return problems


def validate_trace(trace, p):
    relators = _relators_for(trace.start, p)
    out = []
    prev = trace.start
    for k, step in enumerate(trace.steps):
        if step.before != prev:
            out.append(f"step {k}: does not continue from the previous word")
        out += [f"step {k}: {msg}" for msg in validate_step(step, relators)]
        prev = step.after
    return out
