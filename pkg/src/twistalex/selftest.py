"""Self-test suites: randomized algebraic identities and corpus-wide
invariants, run by ``twistalex selftest``.

Every suite uses a fixed seed, so results (and any reported diffs) are
byte-identical across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import corpus
from .algebra import (LaurentPoly, PolyMatrix, PrimeField, QQ, equal_up_to_units,
                      exact_divide)
from .diagram import wirtinger
from .freegroup import GroupRingElement, Word, fox_derivative
from .representation import (Representation, phi, reducible_sl2_representations,
                             validate)
from .twisted import alexander_matrix, classical_alexander, generator_denominator

F7 = PrimeField(7)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name}  ({self.checks} checks)"
        for f in self.failures:
            line += f"\n      {f}"
        return line


def _random_poly(rng, field, nvars, max_terms=3, exp_range=2):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(-exp_range, exp_range) for _ in range(nvars))
        if field is QQ:
            c = field.of(rng.randint(-4, 4))
        else:
            c = field.of(rng.randint(0, field.p - 1))
        if c != field.zero:
            terms[exps] = c
    return LaurentPoly(field, nvars, terms)


def _random_word(rng, ngens, max_len=6):
    letters = [(rng.randrange(ngens), rng.choice((1, -1)))
               for _ in range(rng.randint(0, max_len))]
    return Word(letters)


def _corpus_presentations():
    for name in corpus.names():
        yield name, wirtinger(corpus.diagram(name))


def _sample_reps(pres):
    """A small spread of validated representations for one presentation."""
    reps = [("trivial-n1", Representation.trivial(QQ, 1, pres.generators)),
            ("trivial-sl2", Representation.trivial(QQ, 2, pres.generators))]
    for rep in reducible_sl2_representations(pres, F7, 3, limit=2):
        reps.append(("triangular-f7", rep))
    return reps


def fox_identity_suite() -> SuiteResult:
    """Fundamental identity of the free calculus, at the group-ring level and
    through the ring homomorphism, for every corpus relator."""
    failures = []
    checks = 0
    for name, pres in _corpus_presentations():
        for k, r in enumerate(pres.relators):
            lhs = GroupRingElement.zero()
            for j in range(pres.ngens):
                xj = GroupRingElement.from_word(Word.generator(j))
                lhs = lhs + fox_derivative(r, j) * (xj - GroupRingElement.one())
            rhs = GroupRingElement.from_word(r) - GroupRingElement.one()
            checks += 1
            if lhs != rhs:
                failures.append(f"{name} relator {k}: group-ring identity broken")
        for rep_name, rep in _sample_reps(pres):
            if validate(rep, pres):
                failures.append(f"{name}: sample rep {rep_name} failed validation")
                continue
            am = alexander_matrix(pres, rep)
            n = rep.degree
            for k in range(len(pres.relators)):
                total = PolyMatrix.zeros(rep.field, pres.nvars, n, n)
                for j in range(pres.ngens):
                    xj = (GroupRingElement.from_word(Word.generator(j))
                          - GroupRingElement.one())
                    total = total + am.block(k, j) * phi(xj, rep, pres)
                checks += 1
                if not total.is_zero():
                    failures.append(
                        f"{name} relator {k} rep {rep_name}: matrix identity broken")
    return SuiteResult("fox-fundamental-identity", checks, tuple(failures))


def phi_multiplicativity_suite(pairs: int = 1000, seed: int = 20240211) -> SuiteResult:
    rng = random.Random(seed)
    pres = wirtinger(corpus.diagram("trefoil"))
    reps = [rep for _, rep in _sample_reps(pres)]
    failures = []
    checks = 0
    for i in range(pairs):
        rep = reps[i % len(reps)]
        u = _random_word(rng, pres.ngens)
        v = _random_word(rng, pres.ngens)
        left = phi(GroupRingElement.from_word(u * v), rep, pres)
        right = phi(GroupRingElement.from_word(u), rep, pres) * \
            phi(GroupRingElement.from_word(v), rep, pres)
        checks += 1
        if left != right:
            failures.append(f"pair {i}: phi(uv) != phi(u)phi(v)")
    return SuiteResult("phi-multiplicativity", checks, tuple(failures))


def column_independence_suite() -> SuiteResult:
    """Wada's well-definedness, stated polynomially: for any two admissible
    removed columns, numerator_j * denominator_k matches numerator_k *
    denominator_j up to units."""
    failures = []
    checks = 0
    for name, pres in _corpus_presentations():
        if pres.ngens < 2:
            continue
        for rep_name, rep in _sample_reps(pres):
            am = alexander_matrix(pres, rep)
            data = []
            for j in range(pres.ngens):
                den = generator_denominator(pres, rep, j)
                if den.is_zero():
                    continue
                data.append((j, am.minor(j).det(), den))
            for a in range(len(data)):
                for b in range(a + 1, len(data)):
                    _, nj, dj = data[a]
                    _, nk, dk = data[b]
                    checks += 1
                    if not equal_up_to_units(nj * dk, nk * dj, rep.degree):
                        failures.append(
                            f"{name} rep {rep_name}: columns {data[a][0]} vs "
                            f"{data[b][0]} disagree")
    return SuiteResult("column-removal-independence", checks, tuple(failures))


def det_agreement_suite(count: int = 200, seed: int = 977) -> SuiteResult:
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        field = F7 if i % 2 else QQ
        nvars = rng.randint(1, 2)
        n = rng.randint(1, 6)
        m = PolyMatrix(field, nvars,
                       [[_random_poly(rng, field, nvars) for _ in range(n)]
                        for _ in range(n)])
        if m.det(method="bareiss") != m.det(method="cofactor"):
            failures.append(f"matrix {i} (size {n}): bareiss != cofactor")
    return SuiteResult("bareiss-vs-cofactor", count, tuple(failures))


def divide_roundtrip_suite(count: int = 500, seed: int = 1355) -> SuiteResult:
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < count:
        field = F7 if done % 2 else QQ
        nvars = rng.randint(1, 3)
        f = _random_poly(rng, field, nvars)
        g = _random_poly(rng, field, nvars)
        if f.is_zero() or g.is_zero():
            continue
        done += 1
        if exact_divide(f * g, g) != f:
            failures.append(f"pair {done}: exact_divide(f*g, g) != f")
    return SuiteResult("exact-divide-roundtrip", count, tuple(failures))


def classical_golden_suite() -> SuiteResult:
    failures = []
    checks = 0
    for name, expected in corpus.CLASSICAL_GOLDENS.items():
        d = corpus.diagram(name)
        got = classical_alexander(d)
        want = LaurentPoly.parse(QQ, d.mu, expected)
        checks += 1
        if not equal_up_to_units(got, want, 1):
            failures.append(f"{name}: classical polynomial {got.to_text()} != {expected}")
    return SuiteResult("classical-goldens", checks, tuple(failures))


def run_all(fast: bool = False):
    """Run every suite; ``fast`` trims the randomized counts."""
    scale = 5 if fast else 1
    return [
        fox_identity_suite(),
        phi_multiplicativity_suite(pairs=1000 // scale),
        column_independence_suite(),
        det_agreement_suite(count=200 // scale),
        divide_roundtrip_suite(count=500 // scale),
        classical_golden_suite(),
    ]
