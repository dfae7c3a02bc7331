"""Unimodular matrix representations of link groups and the ring map into
matrices of Laurent polynomials.

A representation assigns to every generator label an n x n matrix over the
coefficient field with determinant 1, such that every relator of the attached
presentation maps to the identity.  Tensoring with the abelianization gives
the ring homomorphism sending a group-ring element sum(c_w * w) to
sum(c_w * t^alpha(w) * rho(w)), realized by :func:`phi`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from .algebra import (LaurentPoly, PolyMatrix, field_from_name, mat_det,
                      mat_identity, mat_inv, mat_is_identity, mat_mul,
                      mat_parse, mat_to_text)
from .diagram import ComponentDeletion, LinkDiagram
from .errors import ParseError, ValidationError
from .freegroup import GroupRingElement, Presentation, Word


@dataclass(frozen=True)
class Representation:
    """Generator label -> SL(n; F) matrix."""

    field: object
    degree: int
    matrices: dict
    _inverses: dict = dataclass_field(default_factory=dict, repr=False, compare=False)

    def matrix(self, label: str):
        try:
            return self.matrices[label]
        except KeyError:
            raise KeyError(f"representation assigns no matrix to {label!r}") from None

    def inverse(self, label: str):
        if label not in self._inverses:
            self._inverses[label] = mat_inv(self.field, self.matrix(label))
        return self._inverses[label]

    def word_matrix(self, pres: Presentation, w: Word):
        out = mat_identity(self.field, self.degree)
        for g, e in w.letters:
            label = pres.generators[g]
            m = self.matrix(label) if e == 1 else self.inverse(label)
            out = mat_mul(self.field, out, m)
        return out

    def common_upper_triangular_diagonal(self) -> Optional[tuple]:
        """The shared diagonal when every matrix is upper triangular with the
        same diagonal, else None.  Used to predict Torres bracket
        coefficients for triangular representations."""
        fld = self.field
        diag = None
        for m in self.matrices.values():
            n = len(m)
            for i in range(n):
                for j in range(i):
                    if m[i][j] != fld.zero:
                        return None
            d = tuple(m[i][i] for i in range(n))
            if diag is None:
                diag = d
            elif diag != d:
                return None
        return diag

    @classmethod
    def trivial(cls, field, degree: int, labels) -> "Representation":
        eye = mat_identity(field, degree)
        return cls(field=field, degree=degree, matrices={g: eye for g in labels})

    @classmethod
    def constant(cls, field, matrix, labels) -> "Representation":
        """Every generator maps to the same matrix.  Valid for any
        presentation whose relators abelianize trivially."""
        return cls(field=field, degree=len(matrix), matrices={g: matrix for g in labels})


def validate(rep: Representation, pres: Presentation):
    """Check unimodularity and that every relator maps to the identity.

    Returns a list of violation strings; an empty list means the
    representation is well defined on the presented group.
    """
    violations = []
    fld = rep.field
    for g in pres.generators:
        if g not in rep.matrices:
            violations.append(f"generator {g} has no assigned matrix")
    if violations:
        return violations
    for g in pres.generators:
        m = rep.matrix(g)
        if len(m) != rep.degree or any(len(r) != rep.degree for r in m):
            violations.append(f"matrix for {g} is not {rep.degree}x{rep.degree}")
            continue
        d = mat_det(fld, m)
        if d != fld.one:
            violations.append(f"matrix for {g} has determinant {fld.to_text(d)} != 1")
    if violations:
        return violations
    for k, r in enumerate(pres.relators):
        image = rep.word_matrix(pres, r)
        if not mat_is_identity(fld, image):
            violations.append(
                f"relator {k} ({pres.word_to_text(r)}) does not map to the identity")
    return violations


def pullback(rep_prime: Representation, deletion: ComponentDeletion,
             original: LinkDiagram) -> Representation:
    """Pull a representation of the deleted-component diagram back to the
    full diagram: surviving arcs take their merged arc's matrix and arcs of
    the deleted component map to the identity."""
    fld, n = rep_prime.field, rep_prime.degree
    eye = mat_identity(fld, n)
    matrices = {}
    for arc_id, arc in enumerate(original.arcs):
        target = deletion.arc_map[arc_id]
        if target is None:
            matrices[arc.label] = eye
        else:
            matrices[arc.label] = rep_prime.matrix(deletion.diagram.arc_label(target))
    return Representation(field=fld, degree=n, matrices=matrices)


def phi(e: GroupRingElement, rep: Representation, pres: Presentation) -> PolyMatrix:
    """The ring homomorphism into n x n matrices over F[t_1^pm, ..., t_mu^pm]."""
    fld, n, nv = rep.field, rep.degree, pres.nvars
    entries = [[{} for _ in range(n)] for _ in range(n)]
    for w, coeff in e.coeffs.items():
        exps = [0] * nv
        for g, s in enumerate(w.exponent_sums(pres.ngens)):
            exps[pres.components[g] - 1] += s
        exps = tuple(exps)
        c = fld.of(coeff)
        m = rep.word_matrix(pres, w)
        for i in range(n):
            for j in range(n):
                if m[i][j] == fld.zero:
                    continue
                cell = entries[i][j]
                s = fld.add(cell.get(exps, fld.zero), fld.mul(c, m[i][j]))
                if s == fld.zero:
                    cell.pop(exps, None)
                else:
                    cell[exps] = s
    return PolyMatrix(fld, nv, [[LaurentPoly(fld, nv, entries[i][j])
                                 for j in range(n)] for i in range(n)])


# ----------------------------------------------------------------------
# Systematic sources of triangular representations (test utility)
# ----------------------------------------------------------------------

def reducible_sl2_representations(pres: Presentation, field, eigenvalue,
                                  limit: int = 20):
    """Upper-triangular SL(2) representations with fixed diagonal
    (lam, lam^-1) shared by every generator.

    The relator constraints on the upper-right entries are linear and
    homogeneous; this enumerates solutions deterministically (the zero vector
    gives the diagonal representation).  Yields at most ``limit``
    representations, all of which validate by construction.
    """
    fld = field
    lam = fld.of(eigenvalue)
    if lam == fld.zero:
        raise ValueError("eigenvalue must be nonzero")
    u = pres.ngens
    lam_inv = fld.inv(lam)

    # each relator yields one homogeneous linear equation in the b_g:
    # walking the relator letters keeps the running product upper triangular
    # with diagonal (lam^d, lam^-d) and top-right entry linear in the b_g
    rows = []
    for r in pres.relators:
        coeffs = [fld.zero] * u
        d = 0  # running exponent
        for g, e in r.letters:
            lam_d = fld.power(lam, d)
            lam_me = fld.power(lam, -e)
            # B' = lam^d * (e * b_g) + lam^-e * B
            for i in range(u):
                coeffs[i] = fld.mul(coeffs[i], lam_me)
            delta = lam_d if e == 1 else fld.neg(lam_d)
            coeffs[g] = fld.add(coeffs[g], delta)
            d += e
        rows.append(coeffs)

    basis = _homogeneous_kernel_basis(fld, rows, u)

    def build(b_vector):
        matrices = {}
        for g, label in enumerate(pres.generators):
            matrices[label] = ((lam, b_vector[g]), (fld.zero, lam_inv))
        return Representation(field=fld, degree=2, matrices=matrices)

    produced = 0
    for coeffs in _coefficient_tuples(fld, len(basis)):
        b = [fld.zero] * u
        for c, vec in zip(coeffs, basis):
            for i in range(u):
                b[i] = fld.add(b[i], fld.mul(c, vec[i]))
        yield build(tuple(b))
        produced += 1
        if produced >= limit:
            return


def _coefficient_tuples(field, dim: int):
    """Deterministic stream of coefficient tuples for kernel sampling."""
    if dim == 0:
        yield ()
        return
    if hasattr(field, "p"):
        values = [field.of(v) for v in range(field.p)]
    else:
        values = [field.of(v) for v in (0, 1, -1, 2, -2, 3, -3, 5)]
    yield from itertools.product(values, repeat=dim)


def _homogeneous_kernel_basis(field, rows, ncols: int):
    """Kernel basis of a homogeneous system by Gaussian elimination."""
    fld = field
    mat = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(mat)):
            if mat[r][col] != fld.zero:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = fld.inv(mat[rank][col])
        mat[rank] = [fld.mul(x, inv) for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != fld.zero:
                factor = mat[r][col]
                mat[r] = [fld.sub(x, fld.mul(factor, y))
                          for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [fld.zero] * ncols
        vec[fc] = fld.one
        for r, pc in enumerate(pivots):
            vec[pc] = fld.neg(mat[r][fc])
        basis.append(tuple(vec))
    return basis


def unimodular_upper_triangular(field, diagonal, uppers):
    """Assemble an upper-triangular matrix from its diagonal and the strict
    upper entries listed row by row; checks det = 1."""
    fld = field
    n = len(diagonal)
    diagonal = [fld.of(x) for x in diagonal]
    prod = fld.one
    for x in diagonal:
        prod = fld.mul(prod, x)
    if prod != fld.one:
        raise ValidationError("diagonal entries must multiply to 1")
    it = iter([fld.of(x) for x in uppers])
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j < i:
                row.append(fld.zero)
            elif j == i:
                row.append(diagonal[i])
            else:
                row.append(next(it))
        rows.append(tuple(row))
    return tuple(rows)


# ----------------------------------------------------------------------
# Representation files
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RepresentationFile:
    """Parsed representation file, not yet bound to a presentation.

    Format::

        field Fp 7      # or: field Q
        degree 2
        gen x1_1
        1 2
        0 4
        gen *           # fallback for generators not listed explicitly
        1 0
        0 1

    Entries are integer or fraction literals.
    """
    field: object
    degree: int
    matrices: dict
    fallback: Optional[tuple]

    def bind(self, pres: Presentation) -> Representation:
        matrices = {}
        for g in pres.generators:
            if g in self.matrices:
                matrices[g] = self.matrices[g]
            elif self.fallback is not None:
                matrices[g] = self.fallback
            else:
                raise ValidationError(
                    f"representation file assigns no matrix to generator {g} "
                    f"and declares no 'gen *' fallback")
        return Representation(field=self.field, degree=self.degree, matrices=matrices)


def parse_representation_file(text: str, source=None) -> RepresentationFile:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(lines):
            raise ParseError("unexpected end of representation file", source)
        item = lines[pos]
        pos += 1
        return item

    lineno, header = take()
    if not header.startswith("field"):
        raise ParseError("representation file must start with a 'field' line",
                         source, lineno)
    try:
        fld = field_from_name(header[len("field"):].strip())
    except ValueError as exc:
        raise ParseError(str(exc), source, lineno) from None

    lineno, degree_line = take()
    parts = degree_line.split()
    if len(parts) != 2 or parts[0] != "degree":
        raise ParseError("expected 'degree <n>'", source, lineno)
    n = int(parts[1])
    if n < 1:
        raise ParseError("degree must be >= 1", source, lineno)

    matrices = {}
    fallback = None
    while pos < len(lines):
        lineno, genline = take()
        parts = genline.split()
        if len(parts) != 2 or parts[0] != "gen":
            raise ParseError("expected 'gen <label>'", source, lineno)
        label = parts[1]
        rows = []
        for _ in range(n):
            row_lineno, row = take()
            rows.append(row)
        try:
            m = mat_parse(fld, n, rows)
        except (ValueError, TypeError) as exc:
            raise ParseError(f"bad matrix for {label}: {exc}", source, lineno) from None
        if label == "*":
            fallback = m
        else:
            if label in matrices:
                raise ParseError(f"generator {label} listed twice", source, lineno)
            matrices[label] = m
    return RepresentationFile(field=fld, degree=n, matrices=matrices, fallback=fallback)


def render_representation_file(rep: Representation) -> str:
    fld = rep.field
    header = "field Q" if fld.name == "Q" else f"field Fp {fld.p}"
    parts = [header, f"degree {rep.degree}"]
    for label in sorted(rep.matrices):
        parts.append(f"gen {label}")
        parts.append(mat_to_text(fld, rep.matrices[label]))
    return "\n".join(parts) + "\n"
