"""Quotients G_k = G / <<b^(2^(2^k))>> and residual-finiteness witnesses.

Since ``E_k = 2^(2^k)`` divides ``E_m`` for ``m >= k``, every relator ``w_m``
with ``m >= k`` dies in ``G_k``; what remains is the finite presentation
``<a, b | b^E_k, w_n : n in S, n < k>``.
"""

from dataclasses import dataclass

from . import dehn
from .errors import NotMajorityReduced, double_exponential, double_exponential_exceeds
from .families import (
    DEFAULT_TOP,
    FamilySpec,
    Presentation,
    SetSpec,
    build_bowditch,
    quotient_presentation,
    wise_chong_presentation,
)
from .pieces import verify_c_prime
from .words import CompressedWord, render


def balanced_residue(e, modulus):
    """Representative of ``e mod modulus`` in ``(-modulus/2, modulus/2]``."""
    r = e % modulus
    if 2 * r > modulus:
        r -= modulus
    return r


def reduce_exponents(u, moduli):
    """Replace exponents of the generators in ``moduli`` by balanced residues.

    Free reduction can merge two runs of a reduced generator, so the pass is
    repeated until every such run is already balanced.
    """
    while True:
        changed = False
        out = []
        for g, e in u.syllables:
            mod = moduli.get(g)
            if mod is not None:
                r = balanced_residue(e, mod)
                if r != e:
                    changed = True
                    e = r
            out.append((g, e))
        if not changed:
            return u
        u = CompressedWord(out)


def project(u, k):
    """Normal form of the image of ``u`` in ``F_2 / <<b^E_k>>``."""
    return reduce_exponents(u, {"b": double_exponential(k)})


@dataclass(frozen=True)
class QuotientSpec:
    k: int
    base: SetSpec
    top: int = DEFAULT_TOP

    def __post_init__(self):
        if not isinstance(self.base, SetSpec):
            object.__setattr__(self, "base", SetSpec.of(self.base))

    @property
    def presentation(self):
        return quotient_presentation(self.base, self.k, self.top)

    @property
    def modulus(self):
        return double_exponential(self.k)


def is_trivial_in_Gk(u, spec, step_limit=dehn.DEFAULT_STEP_LIMIT):
    """Project to the free product, then run Dehn's algorithm on G_k."""
    return dehn.is_trivial(project(u, spec.k), spec.presentation, step_limit)


def _b_runs_fit(v, k):
    # every b-run satisfies 2|e| <= E_k
    return all(double_exponential_exceeds(k, 2 * abs(e) - 1)
               for g, e in v.syllables if g == "b")


@dataclass(frozen=True)
class RFWitness:
    word: CompressedWord
    k: int
    checked_relators: tuple

    @property
    def modulus(self):
        return double_exponential(self.k)

    def to_json(self):
        return {
            "word": render(self.word),
            "k": self.k,
            "E_k": str(self.modulus),
            "checked_relators": [render(r) for r in self.checked_relators],
            "verdict": "nontrivial_in_Gk",
        }


def witness_holds(v, base, k, top=DEFAULT_TOP):
    """True iff ``v`` is majority-reduced for G_k (balanced b-runs included)."""
    if not _b_runs_fit(v, k):
        return False
    return dehn.find_major_subword(v, quotient_presentation(base, k, top)) is None


def rf_witness(v, base, top=DEFAULT_TOP):
    """Least k such that the majority-reduced word ``v`` stays majority-reduced in G_k.

    Such a k exists because any k with ``E_k > 2|v|`` works; in particular
    the answer never exceeds ``|v|``.
    """
    if not v.syllables:
        raise ValueError("rf_witness needs a nonempty word")
    if not isinstance(base, SetSpec):
        base = SetSpec.of(base)
    occ = dehn.find_major_subword(v, wise_chong_presentation(base, top))
    if occ is not None:
        raise NotMajorityReduced(occ)
    k = 0
    while not witness_holds(v, base, k, top):
        k += 1
    bound = 2 * v.length - 1
    checked = tuple(quotient_presentation(base, k, top).enumerate_relators(bound))
    return RFWitness(v, k, checked)


@dataclass(frozen=True)
class BowditchQuotientRow:
    n: int
    modulus: int
    killed: dict  # m -> bool, (a^E_m b^E_m)^7 maps to 1
    torsion_free_images: dict  # m -> CompressedWord
    verification: object

    def to_json(self):
        return {
            "n": self.n,
            "E_n": str(self.modulus),
            "killed": {str(m): v for m, v in sorted(self.killed.items())},
            "torsion_free_images": {str(m): render(w) for m, w in sorted(self.torsion_free_images.items())},
            "quotient": self.verification.to_json(),
        }


def bowditch_quotient_check(n_values, indices=None):
    """Project ``bowditch`` family relators into ``<a, b | a^E_n, b^E_n>`` for each n.

    ``indices`` is the set S (default: ``range(max(n_values) + 2)``).  Reports
    which relators die, the images of the torsion-free relators, and the
    C'(1/6) check of ``<a, b | a^E_n, b^E_n, (a^E_m b^E_m)^7 : m in S, m < n>``.
    """
    n_values = sorted(n_values)
    if indices is None:
        indices = range(max(n_values) + 2)
    indices = sorted(indices)
    rows = []
    for n in n_values:
        e = double_exponential(n)
        moduli = {"a": e, "b": e}
        killed, tf = {}, {}
        for m in indices:
            if m < n:
                continue
            killed[m] = not reduce_exponents(build_bowditch(m).word, moduli).syllables
            tf[m] = reduce_exponents(build_bowditch(m, torsion_free=True).word, moduli)
        specs = [FamilySpec("explicit", word=CompressedWord([("a", e)])),
                 FamilySpec("explicit", word=CompressedWord([("b", e)]))]
        specs += [FamilySpec("bowditch", n=m) for m in indices if m < n]
        rows.append(BowditchQuotientRow(n, e, killed, tf,
                                        verify_c_prime(Presentation(("a", "b"), tuple(specs)))))
    return rows
