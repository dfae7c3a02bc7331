"""Torres-type factorization checks for twisted Alexander polynomials.

Deleting the last-listed component of a link induces a surjection of link
groups, and the twisted polynomial of the big link specialized at t_mu = 1
factors as the twisted polynomial of the smaller link times a bracket
polynomial in T = t_1^{l_1} ... t_{mu-1}^{l_{mu-1}}:

    T^n + eps_1 T^{n-1} + ... + eps_{n-1} T + (-1)^n,

where l_i are linking numbers with the deleted component and the eps_k lie
in the coefficient field.  This module verifies the factorization at the
numerator level: the same arc is removed as a column on both sides via the
arc merge map, so the denominators agree literally and never need to be
formed as rational functions.  It also extracts the eps_k from the quotient,
compares them with the closed-form predictions available for upper-triangular
representations, and checks the classical (n = 1, trivial) statement, where
the bracket degenerates to T - 1.

Two sign conventions coexist in the degree-2 case: the quadratic bracket is
often written T^2 - eps*T + 1 with eps = lam^l + lam^-l for a reducible
representation with eigenvalue lam.  In the convention above that same
quantity is eps_1 = -(lam^l + lam^-l); both are reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .algebra import (LaurentPoly, QQ, canonical_unit_form, equal_up_to_units,
                      exact_divide)
from .diagram import (ComponentDeletion, LinkDiagram, delete_component,
                      linking_numbers, wirtinger)
from .errors import DegenerateInputError, ValidationError
from .representation import Representation, pullback, validate
from .twisted import alexander_matrix, classical_alexander

OK = "ok"
NOT_IDENTIFIABLE = "not-identifiable"
NOT_BRACKET_SHAPED = "not-bracket-shaped"


# ----------------------------------------------------------------------
# Bracket polynomials and their coefficients
# ----------------------------------------------------------------------

def bracket_polynomial(field, linking, degree: int, eps) -> LaurentPoly:
    """T^n + sum eps_k T^(n-k) + (-1)^n in the ring with len(linking) variables."""
    nv = len(linking)
    n = degree
    if len(eps) != max(n - 1, 0):
        raise ValueError(f"expected {n - 1} bracket coefficients, got {len(eps)}")
    terms: dict = {}

    def add(power_of_t, coeff):
        exps = tuple(l * power_of_t for l in linking)
        c = field.add(terms.get(exps, field.zero), field.of(coeff))
        if c == field.zero:
            terms.pop(exps, None)
        else:
            terms[exps] = c

    add(n, field.one)
    for k, e in enumerate(eps, start=1):
        add(n - k, e)
    add(0, field.one if n % 2 == 0 else field.neg(field.one))
    return LaurentPoly(field, nv, terms)


def reducible_bracket_coefficient(field, eigenvalue, total_linking: int):
    """lam^l + lam^-l: the quadratic bracket coefficient (in the
    T^2 - eps*T + 1 convention) of a reducible SL(2) representation."""
    lam = field.of(eigenvalue)
    if lam == field.zero:
        raise ValueError("eigenvalue must be nonzero")
    return field.add(field.power(lam, total_linking),
                     field.power(lam, -total_linking))


def triangular_bracket_coefficients(field, eigenvalues, total_linking: int):
    """Predicted (eps_1, ..., eps_{n-1}) for an upper-triangular
    representation with the given eigenvalues on every generator.

    eps_k = (-1)^k * sum over k-subsets of the eigenvalue list of
    (product of the omitted-complement)^l; since the product of all
    eigenvalues is 1 this is (-1)^k times the k-th elementary symmetric
    function of {lam_i^-l}.
    """
    lams = [field.of(x) for x in eigenvalues]
    prod = field.one
    for x in lams:
        if x == field.zero:
            raise ValueError("eigenvalues must be nonzero")
        prod = field.mul(prod, x)
    if prod != field.one:
        raise ValidationError("eigenvalue list is not unimodular (product != 1)")
    n = len(lams)
    inv_powers = [field.power(x, -total_linking) for x in lams]
    eps = []
    for k in range(1, n):
        total = field.zero
        for subset in combinations(range(n), k):
            term = field.one
            for i in subset:
                term = field.mul(term, inv_powers[i])
            total = field.add(total, term)
        if k % 2 == 1:
            total = field.neg(total)
        eps.append(total)
    return tuple(eps)


@dataclass(frozen=True)
class EpsilonExtraction:
    """Result of reading bracket coefficients off a quotient polynomial.

    ``status`` is one of ``ok`` (coefficients recovered), ``not-identifiable``
    (T = 1 collapses the bracket to the reported constant), or
    ``not-bracket-shaped``.
    """
    status: str
    eps: Optional[tuple] = None
    constant: Optional[object] = None

    @property
    def shaped(self) -> bool:
        return self.status != NOT_BRACKET_SHAPED


def extract_bracket_coefficients(q: LaurentPoly, linking, degree: int) -> EpsilonExtraction:
    """Identify q, up to an allowed unit, with a bracket polynomial.

    Searches for the unit shift placing supp(q) inside {T^0, ..., T^n} with
    coefficient 1 at T^n and (-1)^n at T^0 (sign flips allowed only for odd
    n), then reads off the eps_k.  When every linking number vanishes the
    bracket is a constant and the coefficients are not individually
    recoverable; the collapsed constant is reported instead.
    """
    n = degree
    fld = q.field
    m_t = tuple(linking)
    if len(m_t) != q.nvars:
        raise ValidationError("linking vector length does not match variable count")

    if all(l == 0 for l in m_t):
        if q.is_zero():
            return EpsilonExtraction(NOT_IDENTIFIABLE, constant=fld.zero)
        if len(q.terms) != 1:
            return EpsilonExtraction(NOT_BRACKET_SHAPED)
        exps, _ = q.leading()
        if any(e % n for e in exps):
            return EpsilonExtraction(NOT_BRACKET_SHAPED)
        constant = canonical_unit_form(q, n).constant_value()
        return EpsilonExtraction(NOT_IDENTIFIABLE, constant=constant)

    if q.is_zero():
        return EpsilonExtraction(NOT_BRACKET_SHAPED)

    anchor = min(q.support())
    pivot = next(v for v in range(q.nvars) if m_t[v] != 0)
    slots: dict = {}
    for exps in q.support():
        diff = tuple(a - b for a, b in zip(exps, anchor))
        j, rem = divmod(diff[pivot], m_t[pivot])
        if rem != 0:
            return EpsilonExtraction(NOT_BRACKET_SHAPED)
        if diff != tuple(j * l for l in m_t):
            return EpsilonExtraction(NOT_BRACKET_SHAPED)
        slots[j] = exps
    j_min, j_max = min(slots), max(slots)
    if j_max - j_min != n:
        return EpsilonExtraction(NOT_BRACKET_SHAPED)
    base = slots[j_min]
    if any(e % n for e in base):
        return EpsilonExtraction(NOT_BRACKET_SHAPED)

    def coeff(power_of_t):
        exps = tuple(b + power_of_t * l for b, l in zip(base, m_t))
        return q.terms.get(exps, fld.zero)

    sign = coeff(n)
    if sign != fld.one and not (n % 2 == 1 and sign == fld.neg(fld.one)):
        return EpsilonExtraction(NOT_BRACKET_SHAPED)
    low = fld.one if n % 2 == 0 else fld.neg(fld.one)
    if coeff(0) != fld.mul(sign, low):
        return EpsilonExtraction(NOT_BRACKET_SHAPED)
    inv_sign = fld.inv(sign)
    eps = tuple(fld.mul(coeff(n - k), inv_sign) for k in range(1, n))
    return EpsilonExtraction(OK, eps=eps)


# ----------------------------------------------------------------------
# The main verification
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class TorresReport:
    """Both sides of the factorization for one (link, deleted component,
    representation) instance, with extracted and predicted coefficients."""

    link: str
    deleted_component: int
    degree: int
    field_name: str
    linking: tuple
    total_linking: int
    removed_generator: str
    removed_generator_image: str
    lhs: LaurentPoly
    rhs: LaurentPoly
    quotient: Optional[LaurentPoly]
    degenerate: bool
    lhs_zero_when_degenerate: Optional[bool]
    divisible: Optional[bool]
    extraction: Optional[EpsilonExtraction]
    predicted_eps: Optional[tuple]
    predicted_constant: Optional[object]
    prediction_ok: Optional[bool]
    block_ok: Optional[bool]
    reducible_coefficient: Optional[object]

    @property
    def passed(self) -> bool:
        if self.degenerate:
            return bool(self.lhs_zero_when_degenerate)
        if not self.divisible:
            return False
        if self.extraction is None or not self.extraction.shaped:
            return False
        if self.prediction_ok is False:
            return False
        if self.block_ok is False:
            return False
        return True

    @property
    def notices(self):
        out = []
        if self.degenerate:
            out.append("DEGENERATE: smaller link's numerator vanishes; only the "
                       "zero-consistency of the specialized side was checked")
        if self.extraction is not None and self.extraction.status == NOT_IDENTIFIABLE:
            out.append("NOT-IDENTIFIABLE: total linking data collapses T to 1; "
                       "individual bracket coefficients are not recoverable")
        return out

    def verdicts(self):
        rows = []
        if self.degenerate:
            rows.append(("divisibility", "DEGENERATE"))
            rows.append(("zero-consistency",
                         "PASS" if self.lhs_zero_when_degenerate else "FAIL"))
            return rows
        rows.append(("divisibility", "DIVISIBLE" if self.divisible else "FAIL"))
        if self.divisible:
            status = {OK: "BRACKET-PASS", NOT_IDENTIFIABLE: "NOT-IDENTIFIABLE",
                      NOT_BRACKET_SHAPED: "FAIL"}[self.extraction.status]
            rows.append(("bracket-shape", status))
        if self.prediction_ok is not None:
            rows.append(("prediction", "PASS" if self.prediction_ok else "FAIL"))
        if self.block_ok is not None:
            rows.append(("block-structure", "PASS" if self.block_ok else "FAIL"))
        return rows

    def to_dict(self):
        fld_text = lambda v: None if v is None else str(v)  # noqa: E731
        return {
            "record": "torres",
            "link": self.link,
            "deleted_component": self.deleted_component,
            "degree": self.degree,
            "field": self.field_name,
            "linking": list(self.linking),
            "total_linking": self.total_linking,
            "removed_generator": self.removed_generator,
            "removed_generator_image": self.removed_generator_image,
            "lhs": self.lhs.to_text(),
            "rhs": self.rhs.to_text(),
            "quotient": None if self.quotient is None else self.quotient.to_text(),
            "degenerate": self.degenerate,
            "divisible": self.divisible,
            "eps_status": None if self.extraction is None else self.extraction.status,
            "eps": (None if self.extraction is None or self.extraction.eps is None
                    else [str(e) for e in self.extraction.eps]),
            "collapsed_constant": (None if self.extraction is None
                                   else fld_text(self.extraction.constant)),
            "predicted_eps": (None if self.predicted_eps is None
                              else [str(e) for e in self.predicted_eps]),
            "prediction_ok": self.prediction_ok,
            "block_ok": self.block_ok,
            "reducible_coefficient": fld_text(self.reducible_coefficient),
            "verdicts": [f"{name}={status}" for name, status in self.verdicts()],
            "passed": self.passed,
        }

    def render_text(self) -> str:
        lines = [
            f"link {self.link or '<unnamed>'}: deleted component "
            f"{self.deleted_component}, degree {self.degree} over {self.field_name}",
            f"  linking numbers {list(self.linking)} (total {self.total_linking})",
            f"  removed column {self.removed_generator} "
            f"(image {self.removed_generator_image})",
            f"  lhs  = {self.lhs.to_text()}",
            f"  rhs  = {self.rhs.to_text()}",
        ]
        if self.quotient is not None:
            lines.append(f"  quot = {self.quotient.to_text()}")
        if self.extraction is not None and self.extraction.eps is not None:
            lines.append("  eps  = [" + ", ".join(str(e) for e in self.extraction.eps) + "]")
        if self.extraction is not None and self.extraction.constant is not None:
            lines.append(f"  collapsed constant = {self.extraction.constant}")
        if self.reducible_coefficient is not None:
            lines.append(f"  quadratic-convention eps = {self.reducible_coefficient}")
        if self.predicted_eps is not None:
            lines.append("  predicted eps = [" +
                         ", ".join(str(e) for e in self.predicted_eps) + "]")
        for name, status in self.verdicts():
            lines.append(f"  {name}: {status}")
        for notice in self.notices:
            lines.append(f"  note: {notice}")
        lines.append(f"  overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _drop_choice_avoiding(d: LinkDiagram, component: int) -> int:
    """Last crossing whose under-strand is not on ``component``; dropping it
    keeps every under-crossing of that component among the relators."""
    for i in range(len(d.crossings) - 1, -1, -1):
        if d.crossings[i].under_component != component:
            return i
    raise DegenerateInputError(
        f"every crossing passes under component {component}; the other "
        f"components never go under, which a valid diagram cannot do")


def verify_torres(d: LinkDiagram, component: int, rep_prime: Representation,
                  remove_arc: Optional[str] = None,
                  block_check: bool = True) -> TorresReport:
    """Verify the factorization of the specialized twisted polynomial.

    ``rep_prime`` lives on the diagram obtained by deleting ``component``;
    it is pulled back to the full link.  ``remove_arc`` optionally names the
    removed generator (an arc label of the full diagram on a surviving
    component); the corresponding merged arc is removed on the smaller side.
    """
    deletion = delete_component(d, component)
    pres_prime = wirtinger(deletion.diagram)
    violations = validate(rep_prime, pres_prime)
    if violations:
        raise ValidationError(
            "representation is not defined on the deleted-component link group",
            violations)

    pres = wirtinger(d, drop_crossing=_drop_choice_avoiding(d, component))
    rep = pullback(rep_prime, deletion, d)
    pull_violations = validate(rep, pres)
    assert not pull_violations, f"pullback failed to validate: {pull_violations}"

    n = rep_prime.degree
    fld = rep_prime.field
    l_vec = linking_numbers(d, component)
    l_total = sum(l_vec)

    if remove_arc is None:
        arc_id = next(i for i, a in enumerate(d.arcs) if a.component != component)
    else:
        arc_id = d.arc_by_label(remove_arc)
        if d.arcs[arc_id].component == component:
            raise ValidationError(
                f"removed generator {remove_arc} lies on the deleted component; "
                f"choose an arc of a surviving component")
    image_arc = deletion.arc_map[arc_id]
    removed_label = d.arc_label(arc_id)
    image_label = deletion.diagram.arc_label(image_arc)

    am = alexander_matrix(pres, rep)
    lhs_full = am.minor(pres.index_of(removed_label)).det()
    lhs = lhs_full.specialize(component - 1, fld.one)

    am_prime = alexander_matrix(pres_prime, rep_prime)
    rhs = am_prime.minor(pres_prime.index_of(image_label)).det()

    common = dict(
        link=d.name, deleted_component=component, degree=n, field_name=fld.name,
        linking=tuple(l_vec), total_linking=l_total,
        removed_generator=removed_label, removed_generator_image=image_label,
        lhs=lhs, rhs=rhs)

    if rhs.is_zero():
        return TorresReport(
            quotient=None, degenerate=True, lhs_zero_when_degenerate=lhs.is_zero(),
            divisible=None, extraction=None, predicted_eps=None,
            predicted_constant=None, prediction_ok=None, block_ok=None,
            reducible_coefficient=None, **common)

    quotient = exact_divide(lhs, rhs)
    divisible = quotient is not None

    extraction = None
    prediction_ok = None
    predicted_eps = None
    predicted_constant = None
    reducible_coefficient = None
    if divisible:
        extraction = extract_bracket_coefficients(quotient, l_vec, n)
        if extraction.status == OK and n >= 2:
            reducible_coefficient = fld.neg(extraction.eps[0]) if n == 2 else None
        diagonal = rep_prime.common_upper_triangular_diagonal()
        if diagonal is not None and n >= 1:
            predicted_eps = triangular_bracket_coefficients(fld, diagonal, l_total)
            constant_value = fld.one if n % 2 == 0 else fld.neg(fld.one)
            acc = fld.add(fld.one, constant_value)
            for e in predicted_eps:
                acc = fld.add(acc, e)
            predicted_constant = acc
            if extraction.status == OK:
                prediction_ok = tuple(extraction.eps) == tuple(predicted_eps)
            elif extraction.status == NOT_IDENTIFIABLE:
                expected = canonical_unit_form(
                    LaurentPoly.constant(fld, len(l_vec), predicted_constant),
                    n).constant_value()
                prediction_ok = extraction.constant == expected

    block_ok = None
    if block_check and divisible:
        block_ok = _block_structure_ok(d, component, pres, am, removed_label,
                                       quotient, n, fld)

    return TorresReport(
        quotient=quotient, degenerate=False, lhs_zero_when_degenerate=None,
        divisible=divisible, extraction=extraction, predicted_eps=predicted_eps,
        predicted_constant=predicted_constant, prediction_ok=prediction_ok,
        block_ok=block_ok, reducible_coefficient=reducible_coefficient, **common)


def _block_structure_ok(d, component, pres, am, removed_label, quotient, n, fld):
    """After specializing t_mu = 1 and sorting the deleted component's
    relators and generators last, the matrix is block upper triangular and
    the lower-right block's determinant is the bracket up to units."""
    removed_index = pres.index_of(removed_label)
    specialized = am.matrix.specialize(component - 1, fld.one)

    rows_other = [k * n + a for k, under in enumerate(pres.relator_under)
                  if under != component for a in range(n)]
    rows_deleted = [k * n + a for k, under in enumerate(pres.relator_under)
                    if under == component for a in range(n)]
    cols_other = [g * n + b for g in range(pres.ngens)
                  if pres.components[g] != component and g != removed_index
                  for b in range(n)]
    cols_deleted = [g * n + b for g in range(pres.ngens)
                    if pres.components[g] == component for b in range(n)]

    zero_block = specialized.submatrix(rows_deleted, cols_other)
    if not zero_block.is_zero():
        return False
    corner = specialized.submatrix(rows_deleted, cols_deleted)
    return equal_up_to_units(corner.det(), quotient, n)


# ----------------------------------------------------------------------
# Classical statement (degree 1, trivial representation)
# ----------------------------------------------------------------------

def cyclotomic_quotient(field, nvars: int, var: int, l: int) -> LaurentPoly:
    """(t^l - 1)/(t - 1) as an exact Laurent polynomial (zero when l = 0)."""
    terms: dict = {}
    if l > 0:
        exps_range = range(0, l)
        coeff = field.one
    elif l < 0:
        exps_range = range(l, 0)
        coeff = field.neg(field.one)
    else:
        return LaurentPoly.zero(field, nvars)
    for k in exps_range:
        e = [0] * nvars
        e[var] = k
        terms[tuple(e)] = coeff
    return LaurentPoly(field, nvars, terms)


@dataclass(frozen=True)
class ClassicalTorresReport:
    link: str
    deleted_component: int
    linking: tuple
    lhs: LaurentPoly
    rhs: LaurentPoly
    passed: bool
    degenerate_zero: bool

    def to_dict(self):
        return {
            "record": "classical-torres",
            "link": self.link,
            "deleted_component": self.deleted_component,
            "linking": list(self.linking),
            "lhs": self.lhs.to_text(),
            "rhs": self.rhs.to_text(),
            "degenerate_zero": self.degenerate_zero,
            "passed": self.passed,
        }

    def render_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        note = " (both sides zero)" if self.degenerate_zero else ""
        return (f"link {self.link or '<unnamed>'}: classical factorization on "
                f"deleting component {self.deleted_component}: lhs = "
                f"{self.lhs.to_text()}, rhs = {self.rhs.to_text()} -> {status}{note}")


def verify_classical_torres(d: LinkDiagram, component: int) -> ClassicalTorresReport:
    """Check the classical two-case factorization of the multivariable
    Alexander polynomial under deletion of one component."""
    if d.mu < 2:
        raise DegenerateInputError("need at least two components")
    l_vec = linking_numbers(d, component)
    deletion = delete_component(d, component)
    lhs = classical_alexander(d).specialize(component - 1, 1)
    delta_prime = classical_alexander(deletion.diagram)
    nv = d.mu - 1
    if d.mu == 2:
        factor = cyclotomic_quotient(QQ, nv, 0, l_vec[0])
    else:
        t_power = LaurentPoly.monomial(QQ, tuple(l_vec))
        factor = t_power - LaurentPoly.one(QQ, nv)
    rhs = factor * delta_prime
    passed = equal_up_to_units(lhs, rhs, 1)
    return ClassicalTorresReport(
        link=d.name, deleted_component=component, linking=tuple(l_vec),
        lhs=lhs, rhs=rhs, passed=passed,
        degenerate_zero=lhs.is_zero() and rhs.is_zero())
