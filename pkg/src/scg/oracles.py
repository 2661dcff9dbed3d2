"""Letter-level brute-force referees.

Everything here works on explicit letter strings (tuples of ``(gen, +1/-1)``)
and is quadratic or worse.  These functions exist to check the compressed
algorithms in the test suite and are never called from production paths.
"""

from fractions import Fraction
from itertools import count

from .errors import SCGError
from .words import CompressedWord, CyclicWord

DEFAULT_CAP = 10**4


class OracleCapExceeded(SCGError):
    pass


def decompress(u, cap=DEFAULT_CAP):
    if isinstance(u, CyclicWord):
        u = u.word
    if u.length > cap:
        raise OracleCapExceeded(f"word of length {u.length} exceeds oracle cap {cap}")
    out = []
    for g, e in u.syllables:
        s = 1 if e > 0 else -1
        out.extend([(g, s)] * abs(e))
    return tuple(out)


def compress(letters):
    return CompressedWord((g, s) for g, s in letters)


def letter_inverse(letters):
    return tuple((g, -s) for g, s in reversed(letters))


def free_reduce_letters(letters):
    stack = []
    for x in letters:
        if stack and stack[-1][0] == x[0] and stack[-1][1] == -x[1]:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def cyclic_reduce_letters(letters):
    w = list(free_reduce_letters(letters))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def rotations(letters):
    return [letters[i:] + letters[:i] for i in range(len(letters))]


def same_cyclic_word(x, y):
    x, y = cyclic_reduce_letters(x), cyclic_reduce_letters(y)
    return len(x) == len(y) and (not x or y in set(rotations(x)))


def letter_period(letters):
    """Least P dividing len with the cyclic string invariant under rotation by P."""
    n = len(letters)
    for p in range(1, n + 1):
        if n % p == 0 and letters[p:] + letters[:p] == letters:
            return p
    return n


def oracle_primitive_root(letters):
    """(root letters, exponent) by direct periodicity scan."""
    p = letter_period(letters)
    return letters[:p], len(letters) // p


def _lce_table(x, y, x_cyclic, y_cyclic):
    """lce[s][t] = longest common extension from x[s], y[t] (wrapping where cyclic)."""
    lx, ly = len(x), len(y)
    xx = x + x if x_cyclic else x
    yy = y + y if y_cyclic else y
    nx, ny = len(xx), len(yy)
    nxt = [0] * (ny + 1)
    table = None
    rows = [None] * nx
    for s in range(nx - 1, -1, -1):
        cur = [0] * (ny + 1)
        xs = xx[s]
        for t in range(ny - 1, -1, -1):
            if yy[t] == xs:
                cur[t] = nxt[t + 1] + 1
        rows[s] = cur
        nxt = cur
    cap_x = lx if x_cyclic else None
    cap_y = ly if y_cyclic else None
    table = []
    for s in range(lx):
        row = rows[s]
        out = []
        for t in range(ly):
            v = row[t]
            if cap_x is not None and v > cap_x:
                v = cap_x
            if cap_y is not None and v > cap_y:
                v = cap_y
            out.append(v)
        table.append(out)
    return table


def oracle_lcf(u, v, u_cyclic, v_cyclic=True):
    """Longest common factor length of two letter strings by full position scan."""
    if not u or not v:
        return 0
    table = _lce_table(u, v, u_cyclic, v_cyclic)
    return max(max(row) for row in table)


def oracle_max_piece(r1, r2, same_relator=False, cap=DEFAULT_CAP):
    """Longest piece between two relators, evaluated on letter strings.

    Every pair of start positions in every pair of signed relators is
    compared; for one relator at one sign, positions that differ by a
    multiple of the primitive period are the same way and are skipped.
    Returns ``(length, (sign1, start1), (sign2, start2))`` or ``(0, None, None)``.
    """
    x = cyclic_reduce_letters(decompress(r1, cap) if not isinstance(r1, tuple) else r1)
    y = x if same_relator else cyclic_reduce_letters(
        decompress(r2, cap) if not isinstance(r2, tuple) else r2)
    best = (0, None, None)
    for s1 in (1, -1):
        xs = x if s1 == 1 else letter_inverse(x)
        for s2 in (1, -1):
            ys = y if s2 == 1 else letter_inverse(y)
            table = _lce_table(xs, ys, True, True)
            period = letter_period(xs) if same_relator and s1 == s2 else None
            for s, row in enumerate(table):
                for t, val in enumerate(row):
                    if val <= best[0]:
                        continue
                    if period is not None and (s - t) % period == 0:
                        continue
                    best = (val, (s1, s), (s2, t))
    return best


def oracle_presentation_max_ratio(relators, cap=DEFAULT_CAP):
    """Max over relator pairs of |piece| / min(|r_i|, |r_j|) as an exact Fraction."""
    best = Fraction(0)
    strings = [decompress(r, cap) for r in relators]
    for i, x in enumerate(strings):
        for j in range(i, len(strings)):
            y = strings[j]
            val, _, _ = oracle_max_piece(x, y, same_relator=(i == j))
            if val:
                best = max(best, Fraction(val, min(len(x), len(y))))
    return best


def _related_literal(L, Lp, k):
    # interval [m/k, k m] with exact rationals, read straight off the definition
    k = Fraction(k)
    for A, B in ((L, Lp), (Lp, L)):
        for m in A:
            if m > (k + 1) ** 2 and not any(m / k <= mp <= k * m for mp in B):
                return False
    return True


def oracle_min_k(L, Lp):
    """First k = 1, 2, 3, ... for which the two sets are k-related."""
    for k in count(1):
        if _related_literal(L, Lp, k):
            return k


def oracle_major_length(u, relator, cap=DEFAULT_CAP):
    """Longest factor of linear ``u`` that is a factor of a rotation of relator^{+-1}."""
    x = decompress(u, cap)
    r = decompress(relator, cap)
    return max(oracle_lcf(x, r, False, True), oracle_lcf(x, letter_inverse(r), False, True))
