"""Free group words, group-ring elements, presentations, and the free
differential calculus.

A word is a freely reduced sequence of (generator index, exponent +-1)
letters; the empty word is the identity.  Group-ring elements are finite
integer combinations of words.  The derivative operation satisfies

    d(x_j)/d(x_j) = 1,   d(x_k)/d(x_j) = 0  (k != j),
    d(x_j^-1)/d(x_j) = -x_j^-1,
    d(uv)/d(x_j) = du/d(x_j) + u * dv/d(x_j),

computed by a single left-to-right pass over the letters.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from .errors import DimensionError, ParseError, ValidationError


class Word:
    """A freely reduced word; instances are immutable and hashable."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = _reduce(letters)

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def generator(cls, index: int, exponent: int = 1) -> "Word":
        if exponent not in (1, -1):
            raise ValueError("letter exponent must be +1 or -1")
        return cls(((index, exponent),))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        if not self.letters:
            return "Word(1)"
        return "Word(" + " ".join(f"g{g}^{e}" if e != 1 else f"g{g}"
                                  for g, e in self.letters) + ")"

    def exponent_sums(self, ngens: int):
        sums = [0] * ngens
        for g, e in self.letters:
            sums[g] += e
        return sums


def _reduce(letters):
    stack: list = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError("letter exponent must be +1 or -1")
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


class GroupRingElement:
    """Finite integer combination of words, stored as word -> coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for w, c in coeffs.items():
                if c != 0:
                    clean[w] = c
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> "GroupRingElement":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({Word.identity(): 1})

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "GroupRingElement":
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self.coeffs.items()})
        out: dict = {}
        for w1, c1 in self.coeffs.items():
            for w2, c2 in other.coeffs.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        if isinstance(other, Word):
            out: dict = {}
            for w, c in self.coeffs.items():
                key = other * w
                out[key] = out.get(key, 0) + c
            return GroupRingElement(out)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "GroupRingElement(0)"
        return "GroupRingElement(" + " + ".join(f"{c}*{w!r}" for w, c in self.coeffs.items()) + ")"


def fox_derivative(w: Word, gen: int) -> GroupRingElement:
    """Free derivative of a word with respect to generator ``gen``."""
    if gen < 0:
        raise DimensionError("generator index must be nonnegative")
    out: dict = {}
    prefix = Word.identity()
    for g, e in w.letters:
        letter = Word.generator(g, e)
        if g == gen:
            if e == 1:
                key = prefix
                out[key] = out.get(key, 0) + 1
            else:
                key = prefix * letter
                out[key] = out.get(key, 0) - 1
        prefix = prefix * letter
    return GroupRingElement(out)


def word_multiply(u: Word, v: Word) -> Word:
    return u * v


def word_invert(u: Word) -> Word:
    return u.inverse()


# ----------------------------------------------------------------------
# Presentations
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """A deficiency-one group presentation with abelianization data.

    ``generators`` holds the labels, ``components`` the 1-based index of the
    variable t_i each generator abelianizes to, and ``relators`` exactly
    len(generators) - 1 words.  Wirtinger-derived presentations additionally
    carry the raw crossing letters and per-relator under-strand components.
    """

    generators: tuple
    components: tuple
    relators: tuple
    nvars: int
    wirtinger: bool = False
    relator_letters: Optional[tuple] = None
    relator_under: Optional[tuple] = None
    relator_crossings: Optional[tuple] = None
    dropped_crossing: Optional[int] = None
    _index: dict = dataclass_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        u = len(self.generators)
        if len(self.components) != u:
            raise ValidationError("one abelianization target required per generator")
        if len(self.relators) != u - 1:
            raise ValidationError(
                f"presentation must have deficiency one: {u} generators need "
                f"{u - 1} relators, got {len(self.relators)}")
        for c in self.components:
            if not 1 <= c <= self.nvars:
                raise ValidationError(f"abelianization target t{c} out of range")
        for k, r in enumerate(self.relators):
            sums = r.exponent_sums(u)
            per_var = [0] * self.nvars
            for g, s in enumerate(sums):
                per_var[self.components[g] - 1] += s
            if any(per_var):
                raise ValidationError(f"relator {k} does not abelianize to the trivial monomial")
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.generators)})

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown generator {label!r}") from None

    def component_of(self, index: int) -> int:
        return self.components[index]

    def word_from_text(self, text: str) -> Word:
        return parse_word(text, self._index)

    def word_to_text(self, w: Word) -> str:
        return render_word(w, self.generators)


def parse_word(text: str, index_map) -> Word:
    """Parse whitespace-separated letters like ``x12^-1 a b``."""
    letters = []
    for token in text.split():
        label, caret, power = token.partition("^")
        if label not in index_map:
            raise ParseError(f"unknown generator {label!r} in word")
        e = 1
        if caret:
            try:
                e = int(power)
            except ValueError:
                raise ParseError(f"bad exponent in letter {token!r}") from None
        if e == 0:
            continue
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            letters.append((index_map[label], step))
    return Word(letters)


def render_word(w: Word, labels) -> str:
    if w.is_identity():
        return "1"
    return " ".join(labels[g] if e == 1 else f"{labels[g]}^-1" for g, e in w.letters)


def parse_presentation(text: str, nvars: Optional[int] = None, source=None) -> Presentation:
    """Parse the presentation text format::

        gen a component 1
        gen b component 2
        rel b a b^-1 a^-1

    Lines starting with '#' are comments.  Relators may reference only
    declared generators; the variable count defaults to the largest declared
    component index.
    """
    generators: list = []
    components: list = []
    relator_texts: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "gen":
            if len(parts) != 4 or parts[2] != "component":
                raise ParseError("expected 'gen <label> component <i>'", source, lineno)
            label = parts[1]
            if label in generators:
                raise ParseError(f"duplicate generator {label!r}", source, lineno)
            try:
                comp = int(parts[3])
            except ValueError:
                raise ParseError("component index must be an integer", source, lineno) from None
            generators.append(label)
            components.append(comp)
        elif parts[0] == "rel":
            relator_texts.append((lineno, line[3:].strip()))
        else:
            raise ParseError(f"unrecognized directive {parts[0]!r}", source, lineno)
    if not generators:
        raise ParseError("presentation declares no generators", source)
    if nvars is None:
        nvars = max(components)
    index_map = {g: i for i, g in enumerate(generators)}
    relators = []
    for lineno, rtext in relator_texts:
        try:
            relators.append(parse_word(rtext, index_map))
        except ParseError as exc:
            raise ParseError(str(exc), source, lineno) from None
    return Presentation(
        generators=tuple(generators),
        components=tuple(components),
        relators=tuple(relators),
        nvars=nvars,
    )


def render_presentation(pres: Presentation) -> str:
    lines = [f"gen {g} component {c}" for g, c in zip(pres.generators, pres.components)]
    for r in pres.relators:
        lines.append("rel " + render_word(r, pres.generators))
    return "\n".join(lines) + "\n"
