"""Random word builders shared by the word-problem and acceptance tests."""

from scg import oracles
from scg.dehn import find_major_subword
from scg.words import CompressedWord, concat_reduce, invert, letter_slice

from .conftest import random_word


def conjugate_product(rng, relators, count, conj_len=8):
    """Product of ``count`` conjugates ``g r^{+-1} g^-1``, a trivial word by construction."""
    out = CompressedWord()
    for _ in range(count):
        r = rng.choice(relators)
        rot = r.rotation(rng.randrange(len(r.syllables)), 0)
        if rng.random() < 0.5:
            rot = invert(rot)
        g = random_word(rng, conj_len)
        out = concat_reduce(out, concat_reduce(concat_reduce(g, rot), invert(g)))
    return out


def relator_fragment(rng, r, max_len):
    """A random factor of a rotation of ``r^{+-1}`` with at most ``max_len`` letters."""
    rot = r.rotation(rng.randrange(len(r.syllables)), 0)
    if rng.random() < 0.5:
        rot = invert(rot)
    n = rng.randint(1, max(1, min(max_len, rot.length)))
    start = rng.randint(0, rot.length - n)
    return letter_slice(rot, start, start + n)


def majority_reduced_word(rng, p, relators, max_len):
    """Random nonempty word of length <= max_len with no major subword.

    Mixes random letters with relator fragments of at most half a relator
    so that near-majority subwords show up; candidates with a major subword
    are rejected and redrawn.  Majority-reduction is re-checked by the
    letter-level oracle.
    """
    while True:
        u = CompressedWord()
        while u.length < max_len:
            part = (relator_fragment(rng, rng.choice(relators), min(max_len - u.length, 2 + rng.choice(relators).length // 2))
                    if rng.random() < 0.5 else random_word(rng, min(6, max_len - u.length)))
            nxt = concat_reduce(u, part)
            if nxt.length > max_len:
                break
            u = nxt
            if rng.random() < 0.2:
                break
        if not u.syllables or find_major_subword(u, p) is not None:
            continue
        if any(2 * oracles.oracle_major_length(u, r) > r.length for r in relators):
            raise AssertionError(f"oracle finds a major subword in {u}")
        return u
