"""Exact arithmetic layer: coefficient fields, multivariate Laurent polynomials,
and matrices over them.

Every invariant computed by this package lives in a Laurent polynomial ring
F[t_1^{±1}, ..., t_mu^{±1}] over an exact field F, which is either the
rationals or a prime field F_p.  No floating point is used anywhere.

Coefficients are stored as plain Python values (``fractions.Fraction`` for Q,
canonical ``int`` representatives in [0, p-1] for F_p) and all coefficient
arithmetic is routed through a field object, so polynomials over the two
fields share one implementation.

A Laurent polynomial is a finite map from exponent vectors (tuples of signed
integers, one slot per ring variable) to nonzero coefficients.  The zero
polynomial is the empty map.  Values are immutable after construction and all
operations are pure.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError


# ----------------------------------------------------------------------
# Coefficient fields
# ----------------------------------------------------------------------

def _is_prime(p: int) -> bool:
    # deterministic Miller-Rabin; bases 2,3,5,7 cover everything below 3.2e9
    if p < 2:
        return False
    for q in (2, 3, 5, 7):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q; elements are ``Fraction`` values in lowest terms."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0 in Q")
        return a / b

    def power(self, a, e: int):
        if a == 0 and e < 0:
            raise ZeroDivisionError("negative power of 0 in Q")
        return a ** e

    def is_positive(self, a) -> bool:
        return a > 0

    def to_text(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime p < 2^31; elements are ints in [0, p-1]."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2 ** 31:
            raise ValueError(f"prime {p} too large (must be < 2^31)")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def of(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return int(value) % self.p
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by 0 in F_{self.p}")
        return a * pow(b, -1, self.p) % self.p

    def power(self, a, e: int):
        if a % self.p == 0:
            if e < 0:
                raise ZeroDivisionError(f"negative power of 0 in F_{self.p}")
            return 0 if e > 0 else 1 % self.p
        return pow(a, e, self.p)

    def is_positive(self, a) -> bool:
        # canonical "sign": representatives in [1, (p-1)/2] count as positive
        return 1 <= a <= (self.p - 1) // 2

    def to_text(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"


QQ = RationalField()


def field_from_name(text: str):
    """Parse a field descriptor: ``Q``, ``Fp 7`` or ``Fp:7``."""
    parts = text.replace(":", " ").split()
    if parts == ["Q"]:
        return QQ
    if len(parts) == 2 and parts[0] in ("Fp", "fp", "F"):
        return PrimeField(int(parts[1]))
    raise ValueError(f"unknown field descriptor {text!r} (expected 'Q' or 'Fp <p>')")


# ----------------------------------------------------------------------
# Laurent polynomials
# ----------------------------------------------------------------------

def _check_same_ring(f: "LaurentPoly", g: "LaurentPoly"):
    if f.nvars != g.nvars:
        raise DimensionError(f"variable count mismatch: {f.nvars} vs {g.nvars}")
    if f.field != g.field:
        raise ValueError(f"field mismatch: {f.field} vs {g.field}")


class LaurentPoly:
    """A multivariate Laurent polynomial with exact coefficients.

    >>> t = LaurentPoly.variable(QQ, 1, 0)
    >>> str(t * t - t + LaurentPoly.constant(QQ, 1, 1))
    't1^2 - t1 + 1'
    >>> str(t ** -2)
    't1^-2'
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars: int, terms: dict):
        self.field = field
        self.nvars = nvars
        clean = {}
        for exps, c in terms.items():
            if c != field.zero:
                clean[exps] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field, nvars: int) -> "LaurentPoly":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars: int, value) -> "LaurentPoly":
        return cls(field, nvars, {(0,) * nvars: field.of(value)})

    @classmethod
    def one(cls, field, nvars: int) -> "LaurentPoly":
        return cls.constant(field, nvars, 1)

    @classmethod
    def variable(cls, field, nvars: int, index: int, exponent: int = 1) -> "LaurentPoly":
        if not 0 <= index < nvars:
            raise DimensionError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = exponent
        return cls(field, nvars, {tuple(exps): field.one})

    @classmethod
    def monomial(cls, field, exps, coeff=1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls(field, len(exps), {exps: field.of(coeff)})

    # -- predicates / accessors -----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.nvars}

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def support(self):
        return self.terms.keys()

    def sorted_terms(self):
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def leading(self):
        """(exponents, coefficient) of the lexicographically greatest monomial."""
        exps = max(self.terms)
        return exps, self.terms[exps]

    def min_exponents(self):
        """Per-variable minimum exponent over the support (zero poly: all 0)."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[v] for e in self.terms) for v in range(self.nvars))

    def max_exponents(self):
        if not self.terms:
            return (0,) * self.nvars
        return tuple(max(e[v] for e in self.terms) for v in range(self.nvars))

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.field == other.field
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        _check_same_ring(self, other)
        fld = self.field
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = fld.add(terms.get(exps, fld.zero), c)
            if s == fld.zero:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return LaurentPoly(fld, self.nvars, terms)

    def __neg__(self):
        fld = self.field
        return LaurentPoly(fld, self.nvars, {e: fld.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        _check_same_ring(self, other)
        fld = self.field
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        result: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                s = fld.add(result.get(exps, fld.zero), fld.mul(ca, cb))
                if s == fld.zero:
                    result.pop(exps, None)
                else:
                    result[exps] = s
        return LaurentPoly(fld, self.nvars, result)

    def scale(self, value) -> "LaurentPoly":
        fld = self.field
        c = fld.of(value)
        if c == fld.zero:
            return LaurentPoly.zero(fld, self.nvars)
        return LaurentPoly(fld, self.nvars, {e: fld.mul(k, c) for e, k in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only defined for monomials")
            exps, c = next(iter(self.terms.items()))
            return LaurentPoly(self.field, self.nvars,
                               {tuple(x * e for x in exps): self.field.power(c, e)})
        result = LaurentPoly.one(self.field, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shifted(self, shift) -> "LaurentPoly":
        """Multiply by the monomial t^shift (exact unit shift)."""
        shift = tuple(shift)
        if len(shift) != self.nvars:
            raise DimensionError("shift vector length mismatch")
        if all(s == 0 for s in shift):
            return self
        return LaurentPoly(self.field, self.nvars,
                           {tuple(x + s for x, s in zip(e, shift)): c
                            for e, c in self.terms.items()})

    # -- ring maps --------------------------------------------------------

    def specialize(self, index: int, value) -> "LaurentPoly":
        """Substitute t_index := value (nonzero) and drop that variable.

        The result lives in the ring with one variable fewer; variables above
        ``index`` shift down by one.
        """
        if not 0 <= index < self.nvars:
            raise DimensionError(f"variable index {index} out of range")
        fld = self.field
        value = fld.of(value)
        if value == fld.zero:
            raise ValueError("cannot specialize a Laurent variable at 0")
        result: dict = {}
        for exps, c in self.terms.items():
            scaled = fld.mul(c, fld.power(value, exps[index]))
            new = exps[:index] + exps[index + 1:]
            s = fld.add(result.get(new, fld.zero), scaled)
            if s == fld.zero:
                result.pop(new, None)
            else:
                result[new] = s
        return LaurentPoly(fld, self.nvars - 1, result)

    def evaluate(self, values):
        """Evaluate at a full point (all coordinates nonzero if negative
        exponents occur); returns a field element."""
        if len(values) != self.nvars:
            raise DimensionError("evaluation point has wrong length")
        fld = self.field
        values = [fld.of(v) for v in values]
        total = fld.zero
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(values, exps):
                term = fld.mul(term, fld.power(v, e))
            total = fld.add(total, term)
        return total

    # -- rendering ---------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: descending lex term order, ``t1^2*t2^-1`` style."""
        if not self.terms:
            return "0"
        fld = self.field
        pieces = []
        for i, (exps, c) in enumerate(self.sorted_terms()):
            vars_part = "*".join(
                f"t{v + 1}" if e == 1 else f"t{v + 1}^{e}"
                for v, e in enumerate(exps) if e != 0
            )
            ctext = fld.to_text(c)
            negative = ctext.startswith("-")
            if negative:
                ctext = ctext[1:]
            if vars_part and ctext == "1":
                body = vars_part
            elif vars_part:
                body = f"{ctext}*{vars_part}"
            else:
                body = ctext
            if i == 0:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    __str__ = to_text

    def __repr__(self):
        return f"LaurentPoly({self.field!r}, {self.to_text()})"

    @classmethod
    def parse(cls, field, nvars: int, text: str) -> "LaurentPoly":
        """Parse the canonical text form (also accepts '+'/'-' without spaces)."""
        text = text.strip()
        if text == "0":
            return cls.zero(field, nvars)
        text = text.replace("- ", "-").replace("+ ", "+")
        text = text.replace("-", " -").replace("+", " +")
        # protect exponent signs mangled by the split above: t1^ -2 -> join
        tokens = []
        for raw in text.split():
            if raw.startswith(("+", "-")) and tokens and tokens[-1].endswith("^"):
                tokens[-1] += raw
            else:
                tokens.append(raw)
        result = cls.zero(field, nvars)
        for token in tokens:
            sign = 1
            if token.startswith("+"):
                token = token[1:]
            elif token.startswith("-"):
                sign = -1
                token = token[1:]
            coeff = field.one
            exps = [0] * nvars
            for factor in token.split("*"):
                if factor.startswith("t"):
                    name, _, power = factor.partition("^")
                    index = int(name[1:]) - 1
                    if not 0 <= index < nvars:
                        raise DimensionError(f"variable {name} out of range")
                    exps[index] += int(power) if power else 1
                else:
                    coeff = field.mul(coeff, field.of(factor))
            if sign < 0:
                coeff = field.neg(coeff)
            result = result + cls(field, nvars, {tuple(exps): coeff})
        return result


# ----------------------------------------------------------------------
# Exact division and unit normal forms
# ----------------------------------------------------------------------

def exact_divide(f: LaurentPoly, g: LaurentPoly):
    """Return q with f = g*q in the Laurent ring, or None when no such q exists.

    Both operands are shifted to ordinary polynomials by clearing minimal
    exponents; the quotient is then computed by repeated leading-term division
    under the global lexicographic order with t1 > t2 > ....  A failed
    leading-term step certifies non-divisibility.
    """
    _check_same_ring(f, g)
    if g.is_zero():
        raise ZeroDivisionError("exact_divide by the zero polynomial")
    fld = f.field
    if f.is_zero():
        return f
    fmin = f.min_exponents()
    gmin = g.min_exponents()
    rem = {tuple(x - m for x, m in zip(e, fmin)): c for e, c in f.terms.items()}
    gsh = {tuple(x - m for x, m in zip(e, gmin)): c for e, c in g.terms.items()}
    g_lead = max(gsh)
    g_lead_c = gsh[g_lead]
    quotient: dict = {}
    while rem:
        lead = max(rem)
        q_exps = tuple(a - b for a, b in zip(lead, g_lead))
        if any(e < 0 for e in q_exps):
            return None
        q_c = fld.div(rem[lead], g_lead_c)
        quotient[q_exps] = q_c
        for e, c in gsh.items():
            target = tuple(a + b for a, b in zip(q_exps, e))
            s = fld.sub(rem.get(target, fld.zero), fld.mul(q_c, c))
            if s == fld.zero:
                rem.pop(target, None)
            else:
                rem[target] = s
    shift = tuple(a - b for a, b in zip(fmin, gmin))
    return LaurentPoly(fld, f.nvars, quotient).shifted(shift)


def canonical_unit_form(f: LaurentPoly, n: int) -> LaurentPoly:
    """The canonical representative of f's orbit under units e*t^(n*k).

    Multiplication by t_i^(n*k_i) is always allowed; the sign e = -1 only when
    n is odd.  The representative has every per-variable minimum exponent in
    [0, n), and for odd n the coefficient of the lexicographically greatest
    monomial is "positive" (Q: > 0; F_p: representative in [1, (p-1)/2]).
    """
    if n < 1:
        raise ValueError("unit parameter n must be >= 1")
    if f.is_zero():
        return f
    mins = f.min_exponents()
    shift = tuple(-n * (m // n) for m in mins)
    g = f.shifted(shift)
    if n % 2 == 1:
        _, lead_c = g.leading()
        if not f.field.is_positive(lead_c):
            g = -g
    return g


def equal_up_to_units(f: LaurentPoly, g: LaurentPoly, n: int) -> bool:
    """True iff f and g agree up to a factor e*t^(n*k) (sign only for odd n)."""
    _check_same_ring(f, g)
    return canonical_unit_form(f, n) == canonical_unit_form(g, n)


# ----------------------------------------------------------------------
# Matrices of Laurent polynomials
# ----------------------------------------------------------------------

class PolyMatrix:
    """Dense rectangular matrix with LaurentPoly entries."""

    __slots__ = ("field", "nvars", "nrows", "ncols", "rows")

    def __init__(self, field, nvars: int, rows):
        self.field = field
        self.nvars = nvars
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise DimensionError("ragged rows in PolyMatrix")
            for entry in r:
                if entry.nvars != nvars or entry.field != field:
                    raise DimensionError("entry from a different ring")

    @classmethod
    def zeros(cls, field, nvars: int, nrows: int, ncols: int) -> "PolyMatrix":
        z = LaurentPoly.zero(field, nvars)
        return cls(field, nvars, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, nvars: int, n: int) -> "PolyMatrix":
        m = cls.zeros(field, nvars, n, n)
        one = LaurentPoly.one(field, nvars)
        for i in range(n):
            m.rows[i][i] = one
        return m

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.rows == other.rows
                and self.nvars == other.nvars and self.field == other.field)

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("matrix shape mismatch in +")
        return PolyMatrix(self.field, self.nvars,
                          [[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("matrix shape mismatch in -")
        return PolyMatrix(self.field, self.nvars,
                          [[a - b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return PolyMatrix(self.field, self.nvars,
                              [[e * other for e in r] for r in self.rows])
        if self.ncols != other.nrows:
            raise DimensionError("matrix shape mismatch in *")
        z = LaurentPoly.zero(self.field, self.nvars)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, self.nvars, out)

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def submatrix(self, row_indices, col_indices) -> "PolyMatrix":
        return PolyMatrix(self.field, self.nvars,
                          [[self.rows[i][j] for j in col_indices] for i in row_indices])

    def specialize(self, index: int, value) -> "PolyMatrix":
        return PolyMatrix(self.field, self.nvars - 1,
                          [[e.specialize(index, value) for e in r] for r in self.rows])

    def det(self, method: str = "auto") -> LaurentPoly:
        """Exact determinant.

        ``bareiss`` runs fraction-free elimination after clearing each row's
        monomial denominators; ``cofactor`` expands recursively.  ``auto``
        picks cofactor expansion up to 3x3 and Bareiss elimination above.
        """
        if self.nrows != self.ncols:
            raise DimensionError(f"determinant of non-square {self.nrows}x{self.ncols} matrix")
        n = self.nrows
        if n == 0:
            return LaurentPoly.one(self.field, self.nvars)
        if method == "auto":
            method = "cofactor" if n <= 3 else "bareiss"
        if method == "cofactor":
            return self._det_cofactor()
        if method == "bareiss":
            return self._det_bareiss()
        raise ValueError(f"unknown determinant method {method!r}")

    def _det_cofactor(self) -> LaurentPoly:
        fld, nv = self.field, self.nvars
        rows = self.rows

        def expand(row_indices, col_indices):
            if len(row_indices) == 1:
                return rows[row_indices[0]][col_indices[0]]
            i = row_indices[0]
            rest = row_indices[1:]
            total = LaurentPoly.zero(fld, nv)
            for pos, j in enumerate(col_indices):
                entry = rows[i][j]
                if entry.is_zero():
                    continue
                minor = expand(rest, col_indices[:pos] + col_indices[pos + 1:])
                term = entry * minor
                total = total + (term if pos % 2 == 0 else -term)
            return total

        return expand(tuple(range(self.nrows)), tuple(range(self.ncols)))

    def _det_bareiss(self) -> LaurentPoly:
        fld, nv, n = self.field, self.nvars, self.nrows
        # clear monomial denominators row by row so elimination stays in the
        # ordinary polynomial subring; undo the total shift at the end
        work = []
        total_shift = [0] * nv
        for row in self.rows:
            mins = [0] * nv
            for e in row:
                if e.is_zero():
                    continue
                for v, m in enumerate(e.min_exponents()):
                    mins[v] = min(mins[v], m)
            shift = tuple(-m for m in mins)
            work.append([e.shifted(shift) if any(shift) else e for e in row])
            for v in range(nv):
                total_shift[v] += shift[v]

        sign = 1
        prev = LaurentPoly.one(fld, nv)
        for k in range(n - 1):
            pivot_row = k
            while pivot_row < n and work[pivot_row][k].is_zero():
                pivot_row += 1
            if pivot_row == n:
                return LaurentPoly.zero(fld, nv)
            if pivot_row != k:
                work[pivot_row], work[k] = work[k], work[pivot_row]
                sign = -sign
            pivot = work[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = pivot * work[i][j] - work[i][k] * work[k][j]
                    q = exact_divide(num, prev)
                    assert q is not None, "Bareiss division must be exact"
                    work[i][j] = q
                work[i][k] = LaurentPoly.zero(fld, nv)
            prev = pivot
        result = work[n - 1][n - 1]
        if sign < 0:
            result = -result
        return result.shifted(tuple(-s for s in total_shift))


# ----------------------------------------------------------------------
# Small dense matrices over the coefficient field (no polynomial entries)
# ----------------------------------------------------------------------

def mat_identity(field, n: int):
    return tuple(tuple(field.one if i == j else field.zero for j in range(n))
                 for i in range(n))


def mat_mul(field, a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(
        tuple(
            _dot(field, a[i], [b[r][j] for r in range(k)])
            for j in range(m)
        )
        for i in range(n)
    )


def _dot(field, xs, ys):
    total = field.zero
    for x, y in zip(xs, ys):
        total = field.add(total, field.mul(x, y))
    return total


def mat_det(field, a):
    """Determinant by Gaussian elimination with exact field division."""
    n = len(a)
    if n == 0:
        return field.one
    rows = [list(r) for r in a]
    det = field.one
    for k in range(n):
        pivot = None
        for r in range(k, n):
            if rows[r][k] != field.zero:
                pivot = r
                break
        if pivot is None:
            return field.zero
        if pivot != k:
            rows[pivot], rows[k] = rows[k], rows[pivot]
            det = field.neg(det)
        det = field.mul(det, rows[k][k])
        inv = field.inv(rows[k][k])
        for r in range(k + 1, n):
            factor = field.mul(rows[r][k], inv)
            if factor == field.zero:
                continue
            for c in range(k, n):
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[k][c]))
    return det


def mat_inv(field, a):
    """Inverse by Gauss-Jordan elimination; raises on singular input."""
    n = len(a)
    rows = [list(r) + [field.one if i == j else field.zero for j in range(n)]
            for i, r in enumerate(a)]
    for k in range(n):
        pivot = None
        for r in range(k, n):
            if rows[r][k] != field.zero:
                pivot = r
                break
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        if pivot != k:
            rows[pivot], rows[k] = rows[k], rows[pivot]
        inv = field.inv(rows[k][k])
        rows[k] = [field.mul(x, inv) for x in rows[k]]
        for r in range(n):
            if r == k or rows[r][k] == field.zero:
                continue
            factor = rows[r][k]
            rows[r] = [field.sub(x, field.mul(factor, y))
                       for x, y in zip(rows[r], rows[k])]
    return tuple(tuple(r[n:]) for r in rows)


def mat_is_identity(field, a) -> bool:
    n = len(a)
    return all(a[i][j] == (field.one if i == j else field.zero)
               for i in range(n) for j in range(n))


def mat_parse(field, n: int, lines):
    """Parse n rows of n whitespace-separated field entries."""
    rows = []
    for line in lines:
        entries = [field.of(tok) for tok in line.split()]
        if len(entries) != n:
            raise ValueError(f"expected {n} entries per matrix row, got {len(entries)}")
        rows.append(tuple(entries))
    if len(rows) != n:
        raise ValueError(f"expected {n} matrix rows, got {len(rows)}")
    return tuple(rows)


def mat_to_text(field, a) -> str:
    return "\n".join(" ".join(field.to_text(x) for x in row) for row in a)
