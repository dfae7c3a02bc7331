"""Alexander matrices and twisted Alexander polynomials.

The Alexander matrix of a deficiency-one presentation with respect to a
degree-n representation has one n x n block per (relator, generator) pair:
the image under :func:`~twistalex.representation.phi` of the free derivative
of the relator.  Removing one generator's column block leaves a square
matrix; its determinant divided by det(Phi(x_j - 1)) is the twisted
Alexander polynomial, well defined up to units +-t^(n*k) (sign only when n
is odd).

The n = 1 trivial representation recovers the classical multivariable
Alexander polynomial: for a knot the minor itself, for a link the minor
divided by t_c - 1 where t_c is the removed generator's variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (LaurentPoly, PolyMatrix, QQ, canonical_unit_form,
                      exact_divide)
from .diagram import LinkDiagram, wirtinger
from .errors import DegenerateInputError, ValidationError
from .freegroup import GroupRingElement, Presentation, Word, fox_derivative
from .representation import Representation, phi, validate


@dataclass(frozen=True)
class AlexanderMatrix:
    """Block matrix of fox-derivative images; block (k, j) corresponds to
    relator k and generator j."""

    matrix: PolyMatrix
    pres: Presentation
    rep: Representation

    @property
    def degree(self) -> int:
        return self.rep.degree

    @property
    def block_rows(self) -> int:
        return len(self.pres.relators)

    @property
    def block_cols(self) -> int:
        return self.pres.ngens

    def block(self, k: int, j: int) -> PolyMatrix:
        n = self.degree
        return self.matrix.submatrix(range(k * n, k * n + n), range(j * n, j * n + n))

    def minor(self, removed_gen: int) -> PolyMatrix:
        """Square matrix obtained by removing one generator's column block."""
        if not 0 <= removed_gen < self.block_cols:
            raise ValidationError(f"generator index {removed_gen} out of range")
        n = self.degree
        cols = [j for g in range(self.block_cols) if g != removed_gen
                for j in range(g * n, g * n + n)]
        return self.matrix.submatrix(range(self.matrix.nrows), cols)


def alexander_matrix(pres: Presentation, rep: Representation) -> AlexanderMatrix:
    fld, n, nv = rep.field, rep.degree, pres.nvars
    u = pres.ngens
    rows = [[None] * (u * n) for _ in range(len(pres.relators) * n)]
    for k, r in enumerate(pres.relators):
        for j in range(u):
            block = phi(fox_derivative(r, j), rep, pres)
            for a in range(n):
                for b in range(n):
                    rows[k * n + a][j * n + b] = block[a, b]
    if not rows:
        matrix = PolyMatrix(fld, nv, [])
        # keep the column count honest for empty matrices
        matrix.ncols = u * n
    else:
        matrix = PolyMatrix(fld, nv, rows)
    return AlexanderMatrix(matrix=matrix, pres=pres, rep=rep)


def generator_denominator(pres: Presentation, rep: Representation, j: int) -> LaurentPoly:
    """det(Phi(x_j - 1)) = det(t_c * rho(x_j) - I) for the generator's variable t_c."""
    e = GroupRingElement.from_word(Word.generator(j)) - GroupRingElement.one()
    return phi(e, rep, pres).det()


@dataclass(frozen=True)
class TwistedInvariant:
    """Numerator, denominator, and (when it exists) polynomial quotient of
    the twisted Alexander polynomial for one choice of removed generator."""

    numerator: LaurentPoly
    denominator: LaurentPoly
    quotient: Optional[LaurentPoly]
    removed_generator: str
    degree: int
    polynomiality_warning: bool

    def canonical_numerator(self) -> LaurentPoly:
        return canonical_unit_form(self.numerator, self.degree)

    def canonical_quotient(self) -> Optional[LaurentPoly]:
        if self.quotient is None:
            return None
        return canonical_unit_form(self.quotient, self.degree)


def twisted_invariant(pres: Presentation, rep: Representation,
                      remove_gen: Optional[str] = None,
                      validated: bool = False) -> TwistedInvariant:
    """Compute the twisted Alexander polynomial data for one column choice.

    When ``remove_gen`` is omitted the first generator (in presentation
    order) with nonzero denominator is used.  Division failure for n >= 2 is
    reported through ``polynomiality_warning`` rather than raised: the value
    is then only a rational function.
    """
    if not validated:
        violations = validate(rep, pres)
        if violations:
            raise ValidationError("representation is not defined on this group",
                                  violations)
    candidates = (range(pres.ngens) if remove_gen is None
                  else [pres.index_of(remove_gen)])
    denominator = None
    removed = None
    for j in candidates:
        d = generator_denominator(pres, rep, j)
        if not d.is_zero():
            denominator, removed = d, j
            break
    if denominator is None:
        raise DegenerateInputError(
            "every candidate denominator det(Phi(x_j - 1)) vanishes")

    am = alexander_matrix(pres, rep)
    numerator = am.minor(removed).det()
    quotient = exact_divide(numerator, denominator)
    warning = quotient is None and rep.degree >= 2
    return TwistedInvariant(
        numerator=numerator, denominator=denominator, quotient=quotient,
        removed_generator=pres.generators[removed], degree=rep.degree,
        polynomiality_warning=warning)


def classical_alexander(d: LinkDiagram) -> LaurentPoly:
    """Classical multivariable Alexander polynomial from the n = 1 trivial
    representation, in canonical unit form."""
    pres = wirtinger(d)
    rep = Representation.trivial(QQ, 1, pres.generators)
    am = alexander_matrix(pres, rep)
    j = 0  # n = 1 denominators t_c - 1 never vanish
    numerator = am.minor(j).det()
    if d.mu == 1:
        return canonical_unit_form(numerator, 1)
    t_c = LaurentPoly.variable(QQ, d.mu, pres.components[j] - 1)
    one = LaurentPoly.one(QQ, d.mu)
    quotient = exact_divide(numerator, t_c - one)
    if quotient is None:
        raise ValidationError(
            "Wirtinger minor is not divisible by t_c - 1; diagram bookkeeping "
            "is inconsistent")
    return canonical_unit_form(quotient, 1)
