"""Solving the word problem by majority reduction.

Run with ``python demos/02_word_problem.py``.
"""

import random

from scg import dehn, parse_word, render, validate_trace, wise_chong_presentation
from scg.words import concat_reduce, invert

p = wise_chong_presentation([1, 2], top=7)
w1, w2 = p.enumerate_relators()
print("relator lengths:", w1.length, w2.length)

# %% A conjugate of a relator is trivial; the trace says why.
g = parse_word("a^3 b^2")
u = concat_reduce(concat_reduce(g, w1.word), invert(g))
trivial, trace = dehn.is_trivial(u, p)
print("g w_1 g^-1 trivial:", trivial, "after", len(trace.steps), "steps")
for step in trace.steps:
    print("  replaced", step.occurrence.v_len, "letters of relator", step.occurrence.relator_index,
          "->", step.after.length, "letters left")
print("trace re-validates:", validate_trace(trace, p) == [])

# %% Half a relator plus one letter is already a major subword.
half = w2.length // 2 + 1
u = w2.factor(0, 0, half)
occ = dehn.find_major_subword(u, p)
print(f"{half} letters of w_2 -> replaced by {render(invert(occ.t))!r} ({occ.t_len} letters)")

# %% A word with no major subword is nontrivial and is its own witness.
u = parse_word("a b^17 a^-1 b^3")
trivial, trace = dehn.is_trivial(u, p)
print(render(u), "trivial:", trivial, " witness", render(trace.result))

# %% Products of several conjugates reduce all the way down.
rng = random.Random(1)
u = parse_word("1")
for _ in range(3):
    r = rng.choice((w1, w2)).word
    h = parse_word(" ".join(rng.choice(["a", "b", "a^-1", "b^-1"]) for _ in range(5)))
    u = concat_reduce(u, concat_reduce(concat_reduce(h, r), invert(h)))
trivial, trace = dehn.is_trivial(u, p)
print(f"product of 3 conjugates ({u.length} letters) trivial:", trivial, "in", len(trace.steps), "steps")
