"""Quotients by b^E_k and residual-finiteness witnesses.

Run with ``python demos/03_quotients.py``.
"""

from scg import bowditch_quotient_check, build_wise_chong, parse_word, project, render, rf_witness
from scg.quotients import QuotientSpec, is_trivial_in_Gk

# %% Reducing b-exponents to balanced residues mod E_k.
print(render(project(parse_word("a^3 b^18"), 2)))
print(render(project(parse_word("a b^9 a b^-9"), 2)))

# %% Every w_m with m >= k lies in the kernel.
for k in range(4):
    dead = [m for m in range(6) if not project(build_wise_chong(m).word, k).syllables]
    print(f"k={k}: w_m killed for m in {dead}")

# %% The least k in which a reduced word survives.
for text in ("a", "b^3", "a b^7 a^-1", "b^100 a"):
    w = rf_witness(parse_word(text), [2, 3], top=7)
    trivial, _ = is_trivial_in_Gk(w.word, QuotientSpec(w.k, [2, 3], 7))
    print(f"{text:12s} survives in G_{w.k} (E = {w.modulus}), trivial there: {trivial}")

# %% Projecting the (a^E b^E)^7 relators the same way.
for row in bowditch_quotient_check([1, 2, 3]):
    images = {m: render(w) for m, w in row.torsion_free_images.items()}
    print(f"n={row.n}: killed {row.killed}, torsion-free images {images}, "
          f"quotient C'(1/6) {row.verification.c_prime}")
