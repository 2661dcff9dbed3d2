"""Comparing length spectra with k-relatedness.

Run with ``python demos/04_relatedness.py``.
"""

from scg import SetSpec, divergence_profile, format_profile, length_spectrum, min_witness_k, related_via_k

# %% A direct check and its failure report.
print(related_via_k([2, 16], [4], 3).forward)
print(related_via_k([2, 16], [4], 2))
print("least k:", min_witness_k([2, 16], [4]))

# %% Spectra of the groups for the even and odd indices.
evens, odds = SetSpec.parse("evens"), SetSpec.parse("odds")
print("evens:", length_spectrum(evens, depth=4))
print("odds: ", length_spectrum(odds, depth=4))

# %% The least witness grows without bound as the truncation deepens.
print(format_profile(divergence_profile(evens, odds, 5, mode="raw")))
print()
print(format_profile(divergence_profile(evens, odds, 5, mode="spectrum")))

# %% Equal sets stay related via k = 1 at every depth.
print([r.min_k for r in divergence_profile(evens, evens, 5)])
