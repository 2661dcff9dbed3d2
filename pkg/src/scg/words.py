"""Freely and cyclically reduced words with run-length (syllable) storage.

A word is stored as a tuple of ``(generator, exponent)`` pairs in which
adjacent generators differ and no exponent is zero.  Exponents are Python
integers, so powers such as ``b^(2^(2^10))`` are held exactly; nothing in
this module ever expands a word letter by letter.

>>> u = parse_word("a b^3 b^-1 a^2")
>>> u
CompressedWord('a b^2 a^2')
>>> length(u)
5
>>> cyclic_normalize(parse_word("a b a^-1"))
CyclicWord('b')
"""

import re
from functools import cached_property

from .errors import BudgetExceeded, WordSyntaxError, budget_bits

__all__ = [
    "CompressedWord",
    "CyclicWord",
    "parse_word",
    "render",
    "concat_reduce",
    "invert",
    "cyclic_normalize",
    "length",
    "primitive_root",
    "power",
    "letter_slice",
]


def _reduce_syllables(pairs):
    """Freely reduce a stream of (gen, exp) pairs into syllable form."""
    out = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            if merged == 0:
                out.pop()
            else:
                out[-1] = (gen, merged)
        else:
            out.append((gen, exp))
    return tuple(out)


class CompressedWord:
    """An element of a free group in syllable normal form.

    Instances are immutable and hashable.  Construct from any iterable of
    ``(generator, exponent)`` pairs; the pairs are freely reduced on the way in.
    """

    __slots__ = ("syllables", "__dict__")

    def __init__(self, syllables=()):
        object.__setattr__(self, "syllables", _reduce_syllables(syllables))

    @classmethod
    def _trusted(cls, syllables):
        # caller guarantees syllables are already reduced
        word = cls.__new__(cls)
        object.__setattr__(word, "syllables", tuple(syllables))
        return word

    def __setattr__(self, name, value):
        if name == "syllables":
            raise AttributeError("CompressedWord is immutable")
        object.__setattr__(self, name, value)

    def __reduce__(self):
        return (CompressedWord._trusted, (self.syllables,))

    @cached_property
    def length(self):
        return sum(abs(e) for _, e in self.syllables)

    @property
    def is_empty(self):
        return not self.syllables

    def __bool__(self):
        return bool(self.syllables)

    def __eq__(self, other):
        if isinstance(other, CompressedWord):
            return self.syllables == other.syllables
        return NotImplemented

    def __hash__(self):
        return hash(("CompressedWord", self.syllables))

    def __mul__(self, other):
        return concat_reduce(self, other)

    def __invert__(self):
        return invert(self)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"CompressedWord({render(self)!r})"

    def generators(self):
        return {g for g, _ in self.syllables}


class CyclicWord:
    """A cyclically reduced word up to rotation.

    The stored ``word`` is the canonical rotation: the syllable rotation whose
    ``(generator, exponent)`` sequence is lexicographically least.  Two
    conjugate-by-rotation words therefore compare equal.  Use
    :func:`cyclic_normalize` to build one.
    """

    __slots__ = ("word", "__dict__")

    def __init__(self, word):
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        if name == "word":
            raise AttributeError("CyclicWord is immutable")
        object.__setattr__(self, name, value)

    def __reduce__(self):
        return (CyclicWord, (self.word,))

    @property
    def syllables(self):
        return self.word.syllables

    @property
    def length(self):
        return self.word.length

    @cached_property
    def ends(self):
        """Letter offset just past each syllable."""
        acc, out = 0, []
        for _, e in self.syllables:
            acc += abs(e)
            out.append(acc)
        return tuple(out)

    def starts(self):
        return (0,) + self.ends[:-1]

    def __bool__(self):
        return bool(self.syllables)

    def __eq__(self, other):
        if isinstance(other, CyclicWord):
            return self.word == other.word
        return NotImplemented

    def __hash__(self):
        return hash(("CyclicWord", self.word.syllables))

    def __str__(self):
        return render(self.word)

    def __repr__(self):
        return f"CyclicWord({render(self.word)!r})"

    def inverse(self):
        return cyclic_normalize(invert(self.word))

    def letter_position(self, syllable, offset):
        return self.starts()[syllable] + offset if self.syllables else 0

    def rotation(self, syllable=0, offset=0):
        """The linear word read once around the cycle from a letter position."""
        syl = self.syllables
        if not syl:
            return CompressedWord()
        if len(syl) == 1:
            # g^e read from anywhere is still g^e
            return self.word
        gen, exp = syl[syllable]
        sign = 1 if exp > 0 else -1
        head = [(gen, exp - sign * offset)] if abs(exp) > offset else []
        body = list(syl[syllable + 1:]) + list(syl[:syllable])
        tail = [(gen, sign * offset)] if offset else []
        return CompressedWord._trusted(head + body + tail)

    def factor(self, syllable, offset, letters):
        """The factor of ``letters`` letters starting at a position, read cyclically."""
        if letters > self.length:
            raise ValueError("factor longer than the cyclic word")
        return letter_slice(self.rotation(syllable, offset), 0, letters)

    @cached_property
    def syllable_period(self):
        """Least p dividing the syllable count with the sequence invariant under rotation by p."""
        syl = self.syllables
        m = len(syl)
        for p in range(1, m + 1):
            if m % p == 0 and syl[p:] + syl[:p] == syl:
                return p
        return m


_TERM = re.compile(r"([A-Za-z])(?:\^(-?)(\d+(?:\^\d+){0,2}))?")


def _eval_tower(text, offset):
    parts = [int(p) for p in text.split("^")]
    value = parts[-1]
    for base in reversed(parts[:-1]):
        if base > 1 and (base.bit_length() - 1) * value + 1 > budget_bits():
            raise BudgetExceeded(f"exponent {text} at byte {offset} exceeds the exponent budget")
        value = base**value
    return value


def parse_word(text, alphabet=None):
    """Parse the textual word grammar into a reduced :class:`CompressedWord`.

    ``alphabet`` restricts the allowed generators.  Exponent towers are
    right-associative, so ``b^2^2^1`` is ``b^(2^(2^1)) = b^4``.
    """
    raw = text
    stripped = text.strip()
    if stripped == "1":
        return CompressedWord()

    def byte_offset(i):
        return len(raw[:i].encode("utf-8"))

    pairs = []
    i, n = 0, len(raw)
    while True:
        while i < n and raw[i].isspace():
            i += 1
        if i >= n:
            break
        m = _TERM.match(raw, i)
        end = m.end() if m else i
        if m is None or (end < n and not raw[end].isspace()):
            bad = end if m else i
            raise WordSyntaxError(f"unexpected character {raw[bad]!r}", byte_offset(bad))
        gen = m.group(1)
        if alphabet is not None and gen not in alphabet:
            raise WordSyntaxError(f"unknown generator {gen!r}", byte_offset(i))
        exp = 1
        if m.group(3) is not None:
            exp = _eval_tower(m.group(3), byte_offset(m.start(3)))
            if m.group(2):
                exp = -exp
        pairs.append((gen, exp))
        i = end
    if not pairs:
        raise WordSyntaxError("empty word (write '1' for the identity)", byte_offset(len(raw)))
    return CompressedWord(pairs)


def render(u):
    if isinstance(u, CyclicWord):
        u = u.word
    if not u.syllables:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in u.syllables)


def concat_reduce(u, v):
    return CompressedWord(u.syllables + v.syllables)


def invert(u):
    if isinstance(u, CyclicWord):
        return u.inverse()
    return CompressedWord._trusted((g, -e) for g, e in reversed(u.syllables))


def power(u, n):
    if n < 0:
        return power(invert(u), -n)
    return CompressedWord(u.syllables * n)


def length(u):
    return u.length


def _cyclically_reduce(syl):
    syl = list(syl)
    while len(syl) > 1 and syl[0][0] == syl[-1][0]:
        gen = syl[0][0]
        merged = syl[0][1] + syl[-1][1]
        core = syl[1:-1]
        syl = core + [(gen, merged)] if merged else core
        # merging may leave a new matching pair at the ends
        syl = list(_reduce_syllables(syl))
    return syl


def _least_rotation(tokens):
    m = len(tokens)
    if m <= 1:
        return 0
    return min(range(m), key=lambda i: tokens[i:] + tokens[:i])


def cyclic_normalize(u):
    """Cyclically reduce ``u`` and pick its canonical syllable rotation."""
    if isinstance(u, CyclicWord):
        return u
    syl = _cyclically_reduce(u.syllables)
    k = _least_rotation(syl)
    return CyclicWord(CompressedWord._trusted(syl[k:] + syl[:k]))


def primitive_root(r):
    """Return ``(q, n)`` with ``r = q^n`` as cyclic words and ``n`` maximal."""
    if not isinstance(r, CyclicWord):
        r = cyclic_normalize(r)
    syl = r.syllables
    if not syl:
        raise ValueError("the empty word has no primitive root")
    if len(syl) == 1:
        gen, exp = syl[0]
        return CyclicWord(CompressedWord._trusted([(gen, 1 if exp > 0 else -1)])), abs(exp)
    p = r.syllable_period
    return cyclic_normalize(CompressedWord._trusted(syl[:p])), len(syl) // p


def _locate(u, pos):
    """(syllable index, offset) of letter ``pos`` in a linear word."""
    acc = 0
    for idx, (_, e) in enumerate(u.syllables):
        a = abs(e)
        if pos < acc + a:
            return idx, pos - acc
        acc += a
    return len(u.syllables), 0


def letter_slice(u, start, stop):
    """Letters ``start`` (inclusive) to ``stop`` (exclusive) of a linear word."""
    if start < 0 or stop > u.length or start > stop:
        raise ValueError(f"slice [{start}, {stop}) out of range for length {u.length}")
    out = []
    acc = 0
    for gen, e in u.syllables:
        a = abs(e)
        lo, hi = max(start, acc), min(stop, acc + a)
        if lo < hi:
            out.append((gen, (hi - lo) if e > 0 else -(hi - lo)))
        acc += a
        if acc >= stop:
            break
    return CompressedWord._trusted(out)
