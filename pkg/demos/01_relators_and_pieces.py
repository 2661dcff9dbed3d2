"""Building family relators and measuring their pieces.

Run with ``python demos/01_relators_and_pieces.py``.
"""

from scg import (
    build_b_power,
    build_wise_chong,
    max_piece,
    quotient_presentation,
    render,
    verify_c_prime,
    wise_chong_presentation,
)

# %% Relators are stored as syllables, so huge exponents cost nothing.
w3 = build_wise_chong(3)
print("w_3 has", len(w3.syllables), "syllables and", w3.length, "letters")
print("first syllables:", render(w3.word).split()[:8])

w6 = build_wise_chong(6)
print("w_6 letter length:", w6.length)  # 10100 + 200 * 2^64

# %% The longest piece shared by two members of the family.
rep = max_piece(build_wise_chong(3), build_wise_chong(2))
print("piece(w_3, w_2) =", render(rep.piece), " length", rep.length)

rep = max_piece(build_wise_chong(2), build_b_power(4))
print("piece(w_2, b^E_4) =", render(rep.piece))

# %% Pieces inside a single relator count too, and here they dominate.
self_rep = max_piece(build_wise_chong(1), None, same_relator=True)
print("self piece of w_1:", render(self_rep.piece), " ratio", self_rep.ratio)

# %% The small-cancellation verdict, exact.
report = verify_c_prime(wise_chong_presentation([1, 2, 3]))
print("C'(1/6) for {w_1, w_2, w_3}:", report.c_prime, " max ratio", report.max_ratio)

report = verify_c_prime(quotient_presentation([3, 4, 5], 6))
print("C'(1/6) for G_6 over {3, 4, 5}:", report.c_prime, " max ratio", report.max_ratio)

# %% Shrinking top makes everything small enough to check by hand.
for top in (2, 3, 6, 7):
    rep = verify_c_prime(wise_chong_presentation([1, 2], top=top))
    print(f"top={top}: C'(1/6) {rep.c_prime}, max ratio {rep.max_ratio}")
