"""The degree-p symbol algebra engine.

An algebra handle represents the p^2-dimensional algebra generated over
its base field by x and y subject to

    x^p - x = alpha,    y^p = beta,    y*x*y^(-1) = x + 1,

with elements stored as p x p coefficient grids in the basis x^i y^j.
Products are brought to normal form by first moving powers of y past
powers of x (y^j x^c = (x+j)^c y^j, expanded binomially), then reducing
x-degrees of p and above through x^p = x + alpha, then y-degrees through
y^p = beta.  The expansions of all basis-monomial products are cached per
algebra; elements and handles are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import polys
from .errors import (
    InvalidPrime,
    InvalidSlot,
    NotArtinSchreier,
    NotInSubfield,
    NotInvertible,
    WitnessVerificationFailed,
    ZeroElement,
)

_COMB = math.comb

# inverse Vandermonde matrices on the nodes 0, ..., p-1 over F_p, per prime
_VANDERMONDE_INV: dict[int, tuple] = {}


def _vandermonde_inverse(p):
    cached = _VANDERMONDE_INV.get(p)
    if cached is not None:
        return cached
    # rows m, columns i: V[m][i] = i^m mod p (0^0 = 1)
    aug = [[pow(i, m, p) if (i, m) != (0, 0) else 1 for i in range(p)] + [1 if k == m else 0 for k in range(p)]
           for m in range(p)]
    for col in range(p):
        piv = next(r for r in range(col, p) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = polys.inv_mod(aug[col][col], p)
        aug[col] = [(v * inv) % p for v in aug[col]]
        for r in range(p):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(v - f * w) % p for v, w in zip(aug[r], aug[col])]
    vinv = tuple(tuple(row[p:]) for row in aug)
    _VANDERMONDE_INV[p] = vinv
    return vinv


class SymbolAlgebra:
    """Handle for the algebra with left slot alpha and right slot beta."""

    __slots__ = ("p", "alpha", "beta", "field", "_zero", "_one", "_cache")

    def __init__(self, p, alpha, beta, field):
        if not polys.is_prime(p):
            raise InvalidPrime(f"{p} is not prime")
        if field.prime != p:
            raise InvalidPrime("field characteristic does not match p")
        if not field.owns(alpha) or not field.owns(beta):
            raise ValueError("slots must be scalars of the described field")
        if beta.is_zero():
            raise InvalidSlot("the right slot must be nonzero")
        self.p = p
        self.alpha = alpha
        self.beta = beta
        self.field = field
        self._zero = field.zero()
        self._one = field.one()
        self._cache = {}

    # identity of handles is by value so rebuilt algebras interoperate
    def __eq__(self, other):
        if not isinstance(other, SymbolAlgebra):
            return NotImplemented
        return (
            self.p == other.p
            and self.field == other.field
            and self.alpha == other.alpha
            and self.beta == other.beta
        )

    def __hash__(self):
        return hash((self.p, self.field))

    def __str__(self):
        return f"[{self.alpha}, {self.beta})_{self.p}"

    def __repr__(self):
        return f"SymbolAlgebra({self})"

    # element constructors ---------------------------------------------------
    def _grid(self, entries):
        p = self.p
        rows = []
        for i in range(p):
            rows.append(tuple(entries.get((i, j), self._zero) for j in range(p)))
        return AlgElement(self, tuple(rows))

    def zero(self):
        return self._grid({})

    def one(self):
        return self._grid({(0, 0): self._one})

    def scalar(self, c):
        if isinstance(c, int):
            c = self.field.from_int(c)
        if not self.field.owns(c):
            raise ValueError("scalar does not belong to the base field")
        return self._grid({(0, 0): c})

    def x(self):
        return self._grid({(1, 0): self._one})

    def y(self):
        return self._grid({(0, 1): self._one})

    def monomial(self, c, i, j):
        if not (0 <= i < self.p and 0 <= j < self.p):
            raise ValueError("monomial exponents must lie in [0, p)")
        if isinstance(c, int):
            c = self.field.from_int(c)
        return self._grid({(i, j): c})

    def from_entries(self, entries):
        """Element from a map (i, j) -> scalar-or-int."""
        conv = {}
        for (i, j), c in entries.items():
            conv[(i, j)] = self.field.from_int(c) if isinstance(c, int) else c
        return self._grid(conv)

    def parse(self, text, env=None):
        from .parsing import parse_element

        return parse_element(text, self, env)

    def _check(self, t):
        if t.algebra != self:
            raise ValueError("element belongs to a different algebra")

    # normal-form multiplication ----------------------------------------------
    def _basis_product(self, i1, j1, i2, j2):
        key = (i1, j1, i2, j2)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        p = self.p
        # x^i1 y^j1 x^i2 y^j2 = x^i1 (x + j1)^i2 y^(j1 + j2)
        coeffs = [self._zero] * (i1 + i2 + 1)
        for k in range(i2 + 1):
            c = (_COMB(i2, k) * pow(j1, i2 - k, p)) % p
            if c:
                coeffs[i1 + k] = self.field.from_int(c)
        # reduce x-degree with x^p = x + alpha until it is below p
        while len(coeffs) > p:
            top = coeffs.pop()
            d = len(coeffs)  # popped exponent
            e = d - p
            coeffs[e + 1] = coeffs[e + 1] + top
            coeffs[e] = coeffs[e] + top * self.alpha
        j = j1 + j2
        if j >= p:
            j -= p
            coeffs = [c * self.beta for c in coeffs]
        expansion = tuple(
            ((e, j), c) for e, c in enumerate(coeffs) if not _surely_zero(c)
        )
        self._cache[key] = expansion
        return expansion

    def mul(self, s, t):
        self._check(s)
        self._check(t)
        p = self.p
        acc = [[self._zero] * p for _ in range(p)]
        for (i1, j1), c1 in s.support():
            for (i2, j2), c2 in t.support():
                c12 = c1 * c2
                for (i, j), k in self._basis_product(i1, j1, i2, j2):
                    acc[i][j] = acc[i][j] + c12 * k
        return AlgElement(self, tuple(tuple(row) for row in acc))

    def add(self, s, t):
        self._check(s)
        self._check(t)
        rows = tuple(
            tuple(cs + ct for cs, ct in zip(rs, rt))
            for rs, rt in zip(s.coeffs, t.coeffs)
        )
        return AlgElement(self, rows)

    def neg(self, t):
        self._check(t)
        return AlgElement(self, tuple(tuple(-c for c in row) for row in t.coeffs))

    def sub(self, s, t):
        return self.add(s, self.neg(t))

    def scale(self, c, t):
        """Multiply by a central scalar."""
        if isinstance(c, int):
            c = self.field.from_int(c)
        return AlgElement(self, tuple(tuple(c * e for e in row) for row in t.coeffs))

    def power(self, t, n):
        self._check(t)
        if n < 0:
            raise ValueError("negative powers go through inverse")
        out = self.one()
        base = t
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base) if n > 1 else base
            n >>= 1
        return out

    def commutator(self, s, t):
        return self.sub(self.mul(s, t), self.mul(t, s))

    def certified_equal(self, s, t):
        """Equality up to the certification window of each coefficient.

        Strict equality for rational scalars; over Laurent fields a
        difference whose stored terms all vanish counts as equal, which is
        the right notion for verifying identities whose inputs passed
        through window-truncating operations (inversion).
        """
        d = self.sub(s, t)
        return all(_zero_at_precision(c) for row in d.coeffs for c in row)

    # linear algebra over the base field --------------------------------------
    def inverse(self, t):
        """Two-sided inverse, raising NotInvertible with a nonzero witness s
        (s*t = 0, a zero divisor) when none exists.

        In a central simple algebra of degree p every element satisfies a
        monic polynomial of degree at most p over the center, so the powers
        1, t, ..., t^p are linearly dependent.  The minimal dependency is
        found by incremental elimination over the base field; a nonzero
        constant term inverts t, a zero constant term hands back the
        dependency tail as a zero-divisor witness.  The result is verified
        by multiplication on both sides.
        """
        self._check(t)
        p = self.p
        n = p * p
        zero, one = self._zero, self._one
        basis = []  # (pivot_col, row, history) rows in reduced echelon state
        powers = [self.one()]
        cur = self.one()
        for k in range(p + 1):
            if k:
                cur = self.mul(cur, t)
                powers.append(cur)
            row = [cur.coeff(i, j) for i in range(p) for j in range(p)]
            hist = [one if m == k else zero for m in range(p + 1)]
            for pc, brow, bhist in basis:
                f = row[pc]
                if not _surely_zero(f):
                    row = [a - f * b for a, b in zip(row, brow)]
                    hist = [a - f * b for a, b in zip(hist, bhist)]
            piv = next((c for c in range(n) if not _surely_zero(row[c])), None)
            if piv is None:
                return self._resolve_dependency(t, powers, hist)
            inv = one / row[piv]
            row = [inv * v for v in row]
            hist = [inv * v for v in hist]
            for idx, (pc, brow, bhist) in enumerate(basis):
                f = brow[piv]
                if not _surely_zero(f):
                    basis[idx] = (
                        pc,
                        [a - f * b for a, b in zip(brow, row)],
                        [a - f * b for a, b in zip(bhist, hist)],
                    )
            basis.append((piv, row, hist))
        raise WitnessVerificationFailed("powers 1..t^p were independent")

    def _resolve_dependency(self, t, powers, coeffs):
        """Turn a dependency sum(coeffs[i] * t^i) = 0 into an inverse or a
        zero-divisor witness; coeffs came from a minimal dependency, so the
        tail sum is nonzero whenever the constant term vanishes."""
        tail = self.zero()
        for i in range(1, len(powers)):
            c = coeffs[i]
            if not _surely_zero(c):
                tail = self.add(tail, self.scale(c, powers[i - 1]))
        c0 = coeffs[0]
        if _surely_zero(c0):
            if tail.is_zero() or not self.certified_equal(self.mul(tail, t), self.zero()):
                raise WitnessVerificationFailed("bad zero-divisor witness")
            raise NotInvertible("element is a zero divisor", witness=tail)
        s = self.scale(-(self.field.one() / c0), tail)
        if not (
            self.certified_equal(self.mul(s, t), self.one())
            and self.certified_equal(self.mul(t, s), self.one())
        ):
            raise WitnessVerificationFailed("solved inverse failed the two-sided check")
        return s

    # --- reference path: dense solve over the base field -----------------------
    # Kept as an independent cross-check for the tests: same contract as
    # inverse(), implemented as the p^2 x p^2 right-multiplication solve.
    def _inverse_dense(self, t):
        p = self.p
        n = p * p
        zero, one = self._zero, self._one
        # column m of M holds e_m * t; we solve M^T s = e_(0,0)
        mt = [[zero] * n for _ in range(n)]
        for m in range(n):
            i1, j1 = divmod(m, p)
            for (i2, j2), c2 in t.support():
                for (i, j), k in self._basis_product(i1, j1, i2, j2):
                    r = i * p + j
                    mt[r][m] = mt[r][m] + c2 * k
        rhs = [one if r == 0 else zero for r in range(n)]
        sol = _solve_or_null(mt, rhs, zero, one)
        kind, vec = sol
        if kind == "null":
            witness = self._grid(
                {divmod(m, p): c for m, c in enumerate(vec) if not _surely_zero(c)}
            )
            raise NotInvertible("element is a zero divisor", witness=witness)
        s = self._grid(
            {divmod(m, p): c for m, c in enumerate(vec) if not _surely_zero(c)}
        )
        if not (
            self.certified_equal(self.mul(s, t), self.one())
            and self.certified_equal(self.mul(t, s), self.one())
        ):
            raise WitnessVerificationFailed("solved inverse failed the two-sided check")
        return s

    def conjugate(self, u, t):
        """u * t * u^(-1)."""
        return self.mul(self.mul(u, t), self.inverse(u))

    # element predicates -------------------------------------------------------
    def is_artin_schreier(self, t):
        """The scalar t^p - t when t is Artin-Schreier and not central, else None."""
        self._check(t)
        if t.is_scalar() is not None:
            return None
        d = self.sub(self.power(t, self.p), t)
        return d.is_scalar()

    def is_p_central(self, t):
        """The scalar t^p when t is p-central and not central, else None."""
        self._check(t)
        if t.is_scalar() is not None:
            return None
        return self.power(t, self.p).is_scalar()

    # the commutative subring F[x] ----------------------------------------------
    def _require_fx(self, u):
        self._check(u)
        for (i, j), _ in u.support():
            if j != 0:
                raise NotInSubfield("element involves y")

    def shift_x(self, u, k):
        """Substitute x -> x + k in an element of F[x]."""
        self._require_fx(u)
        p = self.p
        k %= p
        if k == 0:
            return u
        entries = {}
        for (e, _), c in u.support():
            for m in range(e + 1):
                const = (_COMB(e, m) * pow(k, e - m, p)) % p
                if const:
                    cur = entries.get((m, 0), self._zero)
                    entries[(m, 0)] = cur + self.field.from_int(const) * c
        return self._grid(entries)

    def norm_Fx(self, u):
        """Product of the p shifts u(x + i), reduced to a base-field scalar."""
        self._require_fx(u)
        if u.is_zero():
            raise ZeroElement("the norm of zero is not defined")
        prod = u
        for i in range(1, self.p):
            prod = self.mul(prod, self.shift_x(u, i))
        c = prod.is_scalar()
        if c is None:
            raise WitnessVerificationFailed("norm did not land in the base field")
        return c

    # eigendecomposition for the inner derivation by an Artin-Schreier element --
    def ad_decompose(self, t, x_el):
        """Split t into the p eigencomponents of v -> v*x_el - x_el*v.

        Component i satisfies t_i x_el - x_el t_i = i t_i and the components
        sum back to t; both facts are consequences of x_el^p - x_el being
        central, which is what makes the operator satisfy ad^p = ad.
        """
        self._check(t)
        if self.is_artin_schreier(x_el) is None:
            raise NotArtinSchreier("the reference element must be Artin-Schreier")
        p = self.p
        iterates = [t]
        cur = t
        for _ in range(p - 1):
            cur = self.sub(self.mul(cur, x_el), self.mul(x_el, cur))
            iterates.append(cur)
        vinv = _vandermonde_inverse(p)
        parts = []
        for i in range(p):
            part = self.zero()
            for m in range(p):
                c = vinv[i][m]
                if c:
                    part = self.add(part, self.scale(c, iterates[m]))
            parts.append(part)
        return AdComponents(tuple(parts))


def _surely_zero(c):
    """Zero test safe for grid bookkeeping: only exact zeros are dropped."""
    if hasattr(c, "_surely_zero"):
        return c._surely_zero()
    return c.is_zero()


def _zero_at_precision(c):
    """True when the scalar is zero as far as its window certifies: exact
    zero for rational functions, empty stored terms for Laurent scalars."""
    if hasattr(c, "terms"):
        return not c.terms
    return c.is_zero()


def _solve_or_null(matrix, rhs, zero, one):
    """Gaussian elimination with exact pivoting by first nonzero entry.

    Returns ("solution", vec) with matrix @ vec = rhs when the matrix is
    invertible, else ("null", vec) with a nonzero kernel vector.
    """
    n = len(matrix)
    m = [row[:] + [r] for row, r in zip(matrix, rhs)]
    pivot_of_col = {}
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, n):
            if not _surely_zero(m[r][col]):
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = one / m[row][col]
        m[row] = [inv * v for v in m[row]]
        for r in range(n):
            if r != row and not _surely_zero(m[r][col]):
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[row])]
        pivot_of_col[col] = row
        row += 1
    if row == n:
        vec = [zero] * n
        for col, r in pivot_of_col.items():
            vec[col] = m[r][n]
        return "solution", vec
    # rank-deficient: build a kernel vector from a free column
    free = next(c for c in range(n) if c not in pivot_of_col)
    vec = [zero] * n
    vec[free] = one
    for col, r in pivot_of_col.items():
        vec[col] = -m[r][free]
    return "null", vec


class AlgElement:
    """Element of a symbol algebra as an immutable p x p coefficient grid."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    def coeff(self, i, j):
        return self.coeffs[i][j]

    def support(self):
        out = []
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if not _surely_zero(c):
                    out.append(((i, j), c))
        return out

    def is_zero(self):
        return not self.support()

    def is_scalar(self):
        """The coefficient of 1 when the element lies in F*1, else None."""
        for (i, j), _ in self.support():
            if (i, j) != (0, 0):
                return None
        return self.coeffs[0][0]

    # operators -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgElement):
            return other
        if isinstance(other, int) or self.algebra.field.owns(other):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.algebra.add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.algebra.neg(self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.algebra.sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.algebra.sub(other, self)

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return self.algebra.mul(self, other)
        if isinstance(other, int) or self.algebra.field.owns(other):
            return self.algebra.scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) or self.algebra.field.owns(other):
            return self.algebra.scale(other, self)
        return NotImplemented

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.algebra.mul(self, self.algebra.inverse(other))

    def __pow__(self, n):
        return self.algebra.power(self, n)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.algebra.scalar(other)
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.algebra, self.coeffs))

    # printing ----------------------------------------------------------------
    def __str__(self):
        parts = []
        for (i, j), c in self.support():
            xy = []
            if i:
                xy.append("x" if i == 1 else f"x^{i}")
            if j:
                xy.append("y" if j == 1 else f"y^{j}")
            cs = str(c)
            if not xy:
                parts.append(f"({cs})" if _scalar_is_sum(c) else cs)
                continue
            if cs == "1":
                parts.append("*".join(xy))
            elif _scalar_is_sum(c):
                parts.append("*".join([f"({cs})"] + xy))
            else:
                parts.append("*".join([cs] + xy))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AlgElement({self.algebra}, {self})"


def _scalar_is_sum(c):
    return c._is_sum() if hasattr(c, "_is_sum") else False


@dataclass(frozen=True)
class AdComponents:
    """Eigencomponents of an element under the inner derivation by x_el."""

    parts: tuple

    def total(self):
        out = self.parts[0]
        for part in self.parts[1:]:
            out = out + part
        return out

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __len__(self):
        return len(self.parts)


def make_algebra(p, alpha, beta, field):
    """Construct the symbol algebra with the given slots over the field."""
    return SymbolAlgebra(p, alpha, beta, field)
