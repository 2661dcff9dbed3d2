"""Relator families and the presentation model.

The families are indexed by a nonnegative integer ``n`` and use the
exponent ``E_n = 2^(2^n)``:

* ``wise-chong``: the product of commutators ``[a^i, b^E]`` for
  ``i = 1..top``, where ``[x, y] = x^-1 y^-1 x y``;
* ``b-power``: the single power ``b^E``;
* ``bowditch``: ``(a^E b^E)^7``;
* ``bowditch-tf``: ``a (a^E b^E)^12``.

A :class:`Presentation` holds family members, explicit words and whole
families indexed by a :class:`SetSpec`; :meth:`Presentation.enumerate_relators`
materializes every relator up to a length bound.
"""

import io
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import count

from .errors import (
    DuplicateRelator,
    SchemaError,
    double_exponential,
    double_exponential_exceeds,
)
from .words import CompressedWord, cyclic_normalize, parse_word, render

FAMILY_KINDS = ("wise-chong", "b-power", "bowditch", "bowditch-tf")
KINDS = FAMILY_KINDS + ("explicit",)
DEFAULT_TOP = 100


@lru_cache(maxsize=256)
def build_wise_chong(n, top=DEFAULT_TOP):
    if top < 1:
        raise ValueError(f"top must be positive, got {top}")
    e = double_exponential(n)
    syl = []
    for i in range(1, top + 1):
        syl += [("a", -i), ("b", -e), ("a", i), ("b", e)]
    return cyclic_normalize(CompressedWord._trusted(syl))


def wise_chong_length(n, top=DEFAULT_TOP):
    return top * (top + 1) + 2 * top * double_exponential(n)


@lru_cache(maxsize=256)
def build_b_power(k):
    return cyclic_normalize(CompressedWord._trusted([("b", double_exponential(k))]))


@lru_cache(maxsize=256)
def build_bowditch(n, torsion_free=False):
    e = double_exponential(n)
    if torsion_free:
        return cyclic_normalize(CompressedWord([("a", 1)] + [("a", e), ("b", e)] * 12))
    return cyclic_normalize(CompressedWord._trusted([("a", e), ("b", e)] * 7))


def family_exceeds(kind, n, top, bound):
    """True iff the family member's length is greater than ``bound``.

    Decided from the length formula, so it is safe for indices far beyond
    the exponent budget.
    """
    if kind == "wise-chong":
        rest = bound - top * (top + 1)
        return rest < 0 or double_exponential_exceeds(n, rest // (2 * top))
    if kind == "b-power":
        return double_exponential_exceeds(n, bound)
    if kind == "bowditch":
        return double_exponential_exceeds(n, bound // 14)
    if kind == "bowditch-tf":
        return bound < 1 or double_exponential_exceeds(n, (bound - 1) // 24)
    raise SchemaError(f"unknown family kind {kind!r}")


_SET_RE = re.compile(r"^(list:[0-9,\s]*|evens|odds|all|ap:\s*\d+\s*,\s*\d+)$")


@dataclass(frozen=True)
class SetSpec:
    """A subset of the natural numbers: an explicit list or a predicate.

    Predicate sets are infinite; ``depth`` caps enumeration at ``n <= depth``.
    """

    kind: str
    values: tuple = ()
    start: int = 0
    step: int = 1
    depth: int | None = None

    def __post_init__(self):
        if self.kind not in ("list", "evens", "odds", "all", "ap"):
            raise SchemaError(f"unknown set kind {self.kind!r}")
        if self.kind == "list":
            vals = tuple(self.values)
            if any(v < 0 for v in vals):
                raise SchemaError("set elements must be nonnegative")
            if any(b <= a for a, b in zip(vals, vals[1:])):
                raise SchemaError("explicit set lists must be strictly increasing")
            object.__setattr__(self, "values", vals)
        if self.kind == "ap" and (self.start < 0 or self.step < 1):
            raise SchemaError("arithmetic progression needs start >= 0 and step >= 1")
        if self.depth is not None and self.depth < 0:
            raise SchemaError("depth must be nonnegative")

    @classmethod
    def of(cls, values, depth=None):
        return cls("list", tuple(values), depth=depth)

    @classmethod
    def parse(cls, text):
        """Parse ``list:0,2,5``, ``evens``, ``odds``, ``all`` or ``ap:a,d``,
        optionally followed by ``;depth:N``."""
        text = text.strip()
        depth = None
        if ";" in text:
            text, _, tail = text.partition(";")
            tail = tail.strip()
            if not tail.startswith("depth:"):
                raise SchemaError(f"bad set suffix {tail!r}")
            try:
                depth = int(tail[len("depth:"):])
            except ValueError:
                raise SchemaError(f"bad depth in {tail!r}") from None
            text = text.strip()
        if not _SET_RE.match(text):
            raise SchemaError(f"bad set syntax {text!r}")
        if text.startswith("list:"):
            body = text[5:].strip()
            vals = tuple(int(v) for v in body.split(",") if v.strip()) if body else ()
            return cls("list", vals, depth=depth)
        if text.startswith("ap:"):
            a, d = (int(v) for v in text[3:].split(","))
            return cls("ap", start=a, step=d, depth=depth)
        return cls(text, depth=depth)

    def __str__(self):
        if self.kind == "list":
            head = "list:" + ",".join(str(v) for v in self.values)
        elif self.kind == "ap":
            head = f"ap:{self.start},{self.step}"
        else:
            head = self.kind
        return head if self.depth is None else f"{head};depth:{self.depth}"

    @property
    def is_finite(self):
        return self.kind == "list" or self.depth is not None

    def contains(self, n):
        if n < 0:
            return False
        if self.kind == "list":
            ok = n in self.values
        elif self.kind == "evens":
            ok = n % 2 == 0
        elif self.kind == "odds":
            ok = n % 2 == 1
        elif self.kind == "all":
            ok = True
        else:
            ok = n >= self.start and (n - self.start) % self.step == 0
        return ok and (self.depth is None or n <= self.depth)

    def members(self, depth=None):
        """Elements in increasing order, stopping at ``depth`` if given.

        Infinite without either bound; callers must stop the iteration.
        """
        limit = self.depth if depth is None else (depth if self.depth is None else min(depth, self.depth))
        if self.kind == "list":
            for v in self.values:
                if limit is not None and v > limit:
                    return
                yield v
            return
        first, step = {"evens": (0, 2), "odds": (1, 2), "all": (0, 1)}.get(
            self.kind, (self.start, self.step))
        for v in count(first, step):
            if limit is not None and v > limit:
                return
            yield v

    def truncate(self, depth):
        return tuple(self.members(depth))


@dataclass(frozen=True)
class FamilySpec:
    """One relator (or, with ``index_set``, a whole family of relators)."""

    kind: str
    n: int | None = None
    top: int = DEFAULT_TOP
    word: CompressedWord | None = None
    index_set: SetSpec | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError(f"unknown family kind {self.kind!r}")
        if self.kind == "explicit":
            if self.word is None:
                raise SchemaError("explicit relator needs a word")
            return
        if (self.n is None) == (self.index_set is None):
            raise SchemaError(f"{self.kind} relator needs exactly one of an index or an index set")
        if self.n is not None and self.n < 0:
            raise SchemaError("family index must be nonnegative")
        if self.top < 1:
            raise SchemaError("top must be >= 1")

    @property
    def is_finite(self):
        return self.index_set is None or self.index_set.is_finite

    def indices(self, depth=None):
        if self.index_set is None:
            return iter(()) if self.n is None else iter((self.n,))
        return self.index_set.members(depth)

    def exceeds(self, n, bound):
        return family_exceeds(self.kind, n, self.top, bound)

    def build(self, n=None):
        if self.kind == "explicit":
            return cyclic_normalize(self.word)
        n = self.n if n is None else n
        if self.kind == "wise-chong":
            return build_wise_chong(n, self.top)
        if self.kind == "b-power":
            return build_b_power(n)
        return build_bowditch(n, torsion_free=self.kind == "bowditch-tf")

    def to_json(self):
        if self.kind == "explicit":
            return {"kind": "explicit", "word": render(self.word)}
        out = {"kind": self.kind}
        key = "k" if self.kind == "b-power" else "n"
        if self.index_set is not None:
            out["set"] = str(self.index_set)
        else:
            out[key] = self.n
        if self.kind == "wise-chong":
            out["top"] = self.top
        return out


def _dedup_key(cw):
    inv = cw.inverse()
    return min(cw.syllables, inv.syllables)


@dataclass(frozen=True)
class Presentation:
    generators: tuple = ("a", "b")
    relators: tuple = ()
    lam: Fraction = Fraction(1, 6)
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        object.__setattr__(self, "lam", Fraction(self.lam))
        if len(set(self.generators)) != len(self.generators):
            raise SchemaError("duplicate generator")
        for g in self.generators:
            if not (isinstance(g, str) and len(g) == 1 and g.isascii() and g.isalpha()):
                raise SchemaError(f"generator must be a single ASCII letter, got {g!r}")
        if not 0 < self.lam <= 1:
            raise SchemaError("lambda must lie in (0, 1]")
        for spec in self.relators:
            need = spec.word.generators() if spec.kind == "explicit" else {"a", "b"}
            missing = need - set(self.generators)
            if missing:
                raise SchemaError(f"relator uses undeclared generators {sorted(missing)}")

    @property
    def is_finite(self):
        return all(spec.is_finite for spec in self.relators)

    def validate(self):
        """Build every finitely indexed relator and reject empties and duplicates."""
        self._collect(None, finite_only=not self.is_finite)
        return self

    def _collect(self, max_length, finite_only=False):
        out = []
        seen = {}
        for idx, spec in enumerate(self.relators):
            if finite_only and not spec.is_finite:
                continue
            members = [None] if spec.kind == "explicit" else spec.indices()
            for n in members:
                if n is not None and max_length is not None and spec.exceeds(n, max_length):
                    if spec.index_set is not None:
                        # family lengths increase with n
                        break
                    continue
                cw = spec.build(n)
                if not cw.syllables:
                    raise SchemaError(f"relator {idx} reduces to the empty word")
                if max_length is not None and cw.length > max_length:
                    continue
                key = _dedup_key(cw)
                if key in seen:
                    raise DuplicateRelator(
                        f"relator {render(cw)!r} appears twice (entries {seen[key]} and {idx})")
                seen[key] = idx
                out.append((cw.length, idx, -1 if n is None else n, cw))
        out.sort(key=lambda t: (t[0], t[1], t[2]))
        return out

    def enumerate_relators(self, max_length=None):
        """Every relator of length at most ``max_length``, sorted by length.

        ``None`` means no bound, allowed only when every family index set is
        finite.  Duplicate relators (up to rotation and inversion) raise.
        """
        if max_length is None and not self.is_finite:
            raise SchemaError("an infinite presentation needs a max_length bound or a set depth")
        if max_length in self._cache:
            return self._cache[max_length]
        if max_length is not None and max_length <= 0:
            result = []
        else:
            result = [cw for _, _, _, cw in self._collect(max_length)]
        self._cache[max_length] = result
        return result

    def to_json(self):
        return {
            "generators": list(self.generators),
            "relators": [spec.to_json() for spec in self.relators],
            "lambda": f"{self.lam.numerator}/{self.lam.denominator}",
        }


def _parse_lambda(raw):
    if not isinstance(raw, str) or not re.fullmatch(r"\s*\d+\s*/\s*\d+\s*|\s*\d+\s*", raw):
        raise SchemaError(f"lambda must be a string 'p/q', got {raw!r}")
    try:
        return Fraction(raw.replace(" ", ""))
    except ZeroDivisionError:
        raise SchemaError("lambda has zero denominator") from None


def _int_field(obj, key, required=True, default=None):
    if key not in obj:
        if required:
            raise SchemaError(f"relator {obj!r} is missing {key!r}")
        return default
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, int):
        raise SchemaError(f"{key!r} must be an integer, got {val!r}")
    return val


def presentation_from_json(data):
    if not isinstance(data, dict):
        raise SchemaError("presentation must be a JSON object")
    unknown = set(data) - {"generators", "relators", "lambda"}
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}")
    gens = data.get("generators")
    if not isinstance(gens, list):
        raise SchemaError("'generators' must be an array")
    rels = data.get("relators", [])
    if not isinstance(rels, list):
        raise SchemaError("'relators' must be an array")
    lam = _parse_lambda(data.get("lambda", "1/6"))
    specs = []
    for obj in rels:
        if not isinstance(obj, dict) or "kind" not in obj:
            raise SchemaError(f"relator entry must be an object with 'kind': {obj!r}")
        kind = obj["kind"]
        if kind not in KINDS:
            raise SchemaError(f"unknown family kind {kind!r}")
        if kind == "explicit":
            if not isinstance(obj.get("word"), str):
                raise SchemaError("explicit relator needs a 'word' string")
            specs.append(FamilySpec("explicit", word=parse_word(obj["word"], alphabet=set(gens))))
            continue
        key = "k" if kind == "b-power" else "n"
        top = _int_field(obj, "top", required=False, default=DEFAULT_TOP)
        if "set" in obj:
            if not isinstance(obj["set"], str):
                raise SchemaError("'set' must be a SetSpec string")
            specs.append(FamilySpec(kind, top=top, index_set=SetSpec.parse(obj["set"])))
        else:
            specs.append(FamilySpec(kind, n=_int_field(obj, key), top=top))
    return Presentation(tuple(gens), tuple(specs), lam).validate()


def load_presentation(source):
    """Read a presentation from a path or a text file object."""
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    return presentation_from_json(data)


def dumps_presentation(p):
    return json.dumps(p.to_json(), indent=2) + "\n"


def save_presentation(p, target):
    text = dumps_presentation(p)
    if isinstance(target, io.TextIOBase) or hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)


def wise_chong_presentation(index_set, top=DEFAULT_TOP, lam=Fraction(1, 6)):
    """G(S) = <a, b | w_n : n in S>."""
    if not isinstance(index_set, SetSpec):
        index_set = SetSpec.of(index_set)
    if index_set.kind == "list":
        specs = tuple(FamilySpec("wise-chong", n=n, top=top) for n in index_set.members())
    else:
        specs = (FamilySpec("wise-chong", top=top, index_set=index_set),)
    return Presentation(("a", "b"), specs, lam)


def quotient_presentation(index_set, k, top=DEFAULT_TOP):
    """G_k = <a, b | b^(2^(2^k)), w_n : n in S, n < k>."""
    if not isinstance(index_set, SetSpec):
        index_set = SetSpec.of(index_set)
    specs = [FamilySpec("b-power", n=k)]
    specs += [FamilySpec("wise-chong", n=n, top=top) for n in index_set.members(k - 1)] if k > 0 else []
    return Presentation(("a", "b"), tuple(specs))


def bowditch_presentation(indices, torsion_free=False):
    kind = "bowditch-tf" if torsion_free else "bowditch"
    return Presentation(("a", "b"), tuple(FamilySpec(kind, n=n) for n in indices))


def explicit_presentation(words, generators=None):
    words = [parse_word(w) if isinstance(w, str) else w for w in words]
    if generators is None:
        generators = sorted(set().union(*(w.generators() for w in words))) if words else ["a", "b"]
    return Presentation(tuple(generators), tuple(FamilySpec("explicit", word=w) for w in words))
