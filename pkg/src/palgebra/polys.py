"""Sparse polynomial kernels over the prime fields F_p.

Two raw representations are used internally:

* univariate: dict mapping exponent -> coefficient in {1, ..., p-1},
  with {} for the zero polynomial;
* bivariate: dict mapping (ea, eb) -> coefficient, same convention,
  for polynomials in the indeterminates a and b.

All functions are pure. Monomial comparisons use graded lexicographic
order with a ranked above b; gcds are returned monic with respect to
that order so that canonical forms are unique.
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def inv_mod(c: int, p: int) -> int:
    return pow(c % p, p - 2, p)


# ---------------------------------------------------------------------------
# univariate helpers (used by the bivariate gcd, recursive in b over F_p[a])
# ---------------------------------------------------------------------------

def u_const(c, p):
    c %= p
    return {0: c} if c else {}


def u_add(f, g, p):
    out = dict(f)
    for e, c in g.items():
        s = (out.get(e, 0) + c) % p
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def u_neg(f, p):
    return {e: (-c) % p for e, c in f.items()}


def u_sub(f, g, p):
    return u_add(f, u_neg(g, p), p)


def u_mul(f, g, p):
    if not f or not g:
        return {}
    if len(f) == 1:
        (e1, c1), = f.items()
        return {e1 + e2: (c1 * c2) % p for e2, c2 in g.items() if (c1 * c2) % p}
    if len(g) == 1:
        (e2, c2), = g.items()
        return {e1 + e2: (c1 * c2) % p for e1, c1 in f.items() if (c1 * c2) % p}
    if len(f) * len(g) <= 16:
        out = {}
        for e1, c1 in f.items():
            for e2, c2 in g.items():
                e = e1 + e2
                s = (out.get(e, 0) + c1 * c2) % p
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return out
    # Kronecker substitution: pack coefficients into one big integer per
    # operand with enough headroom, multiply, unpack mod p
    shift = (p * p * (min(len(f), len(g)) + 1)).bit_length()
    fi = 0
    for e, c in f.items():
        fi |= c << (e * shift)
    gi = 0
    for e, c in g.items():
        gi |= c << (e * shift)
    prod = fi * gi
    mask = (1 << shift) - 1
    out = {}
    e = 0
    while prod:
        c = (prod & mask) % p
        if c:
            out[e] = c
        prod >>= shift
        e += 1
    return out


def u_scale(f, c, p):
    c %= p
    if not c:
        return {}
    return {e: (k * c) % p for e, k in f.items()}


def u_degree(f):
    return max(f) if f else -1


def u_lc(f):
    return f[max(f)]


def u_monic(f, p):
    if not f:
        return {}
    return u_scale(f, inv_mod(u_lc(f), p), p)


def u_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("univariate division by zero")
    if not f:
        return {}, {}
    df, dg = max(f), max(g)
    if df < dg:
        return {}, dict(f)
    r = [0] * (df + 1)
    for e, c in f.items():
        r[e] = c
    gitems = list(g.items())
    inv_lc = inv_mod(g[dg], p)
    q = {}
    for k in range(df - dg, -1, -1):
        c = r[k + dg]
        if c:
            c = (c * inv_lc) % p
            q[k] = c
            for e, gc in gitems:
                r[e + k] = (r[e + k] - c * gc) % p
    rem = {e: c for e, c in enumerate(r[:dg]) if c}
    return q, rem


def u_div_exact(f, g, p):
    q, r = u_divmod(f, g, p)
    if r:
        raise ArithmeticError("univariate division was not exact")
    return q


def _dense_rem(a, b, p):
    """Remainder of dense coefficient lists (trailing entry nonzero)."""
    db = len(b) - 1
    inv_lc = inv_mod(b[db], p)
    a = a[:]
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if c:
            c = (c * inv_lc) % p
            for e in range(db):
                if b[e]:
                    a[e + k] = (a[e + k] - c * b[e]) % p
            a[k + db] = 0
    while a and a[-1] == 0:
        a.pop()
    return a


def u_gcd(f, g, p):
    a = [0] * (max(f) + 1) if f else []
    for e, c in f.items():
        a[e] = c
    b = [0] * (max(g) + 1) if g else []
    for e, c in g.items():
        b[e] = c
    while b:
        a, b = b, _dense_rem(a, b, p)
    if not a:
        return {}
    inv = inv_mod(a[-1], p)
    return {e: (c * inv) % p for e, c in enumerate(a) if c}


# ---------------------------------------------------------------------------
# bivariate layer
# ---------------------------------------------------------------------------

P_ONE = {(0, 0): 1}


def p_const(c, p):
    c %= p
    return {(0, 0): c} if c else {}


def p_gen(name):
    if name == "a":
        return {(1, 0): 1}
    if name == "b":
        return {(0, 1): 1}
    raise ValueError(f"unknown indeterminate {name!r}")


def p_add(f, g, p):
    out = dict(f)
    for m, c in g.items():
        s = (out.get(m, 0) + c) % p
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def p_neg(f, p):
    return {m: (-c) % p for m, c in f.items()}


def p_sub(f, g, p):
    return p_add(f, p_neg(g, p), p)


def p_mul(f, g, p):
    if not f or not g:
        return {}
    out = {}
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            m = (a1 + a2, b1 + b2)
            s = (out.get(m, 0) + c1 * c2) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def p_scale(f, c, p):
    c %= p
    if not c:
        return {}
    return {m: (k * c) % p for m, k in f.items()}


def p_frobenius(f, p):
    # (sum c m)^p = sum c^p m^p = sum c m^p since c^p = c in F_p
    return {(ea * p, eb * p): c for (ea, eb), c in f.items()}


def grlex_key(m):
    return (m[0] + m[1], m[0])


def p_leading_monomial(f):
    return max(f, key=grlex_key)


def p_lc(f):
    return f[p_leading_monomial(f)]


def p_monic(f, p):
    if not f:
        return {}
    return p_scale(f, inv_mod(p_lc(f), p), p)


def p_is_one(f):
    return f == P_ONE


def total_degree(f):
    return max(ea + eb for ea, eb in f) if f else -1


# recursive view: dict b-exponent -> univariate poly in a

def _to_rec(f):
    rec = {}
    for (ea, eb), c in f.items():
        rec.setdefault(eb, {})[ea] = c
    return rec


def _from_rec(rec):
    out = {}
    for eb, ua in rec.items():
        for ea, c in ua.items():
            out[(ea, eb)] = c
    return out


def _rec_content(rec, p):
    g = {}
    for ua in rec.values():
        g = u_gcd(g, ua, p)
        if g == {0: 1}:
            break
    return g


def _rec_quo_content(rec, cont, p):
    if cont == {0: 1}:
        return rec
    return {eb: u_div_exact(ua, cont, p) for eb, ua in rec.items()}


def _rec_scale(rec, u, p):
    out = {}
    for eb, ua in rec.items():
        prod = u_mul(ua, u, p)
        if prod:
            out[eb] = prod
    return out


def _rec_sub(f, g, p):
    out = dict(f)
    for eb, ua in g.items():
        s = u_sub(out.get(eb, {}), ua, p)
        if s:
            out[eb] = s
        else:
            out.pop(eb, None)
    return out


def _u_pow(f, n, p):
    out = {0: 1}
    base = f
    while n:
        if n & 1:
            out = u_mul(out, base, p)
        if n > 1:
            base = u_mul(base, base, p)
        n >>= 1
    return out


def _prem_b(F, G, p):
    """Standard pseudo-remainder lc(G)^(delta+1) * F mod G, recursive in b."""
    dG = max(G)
    lcg = G[dG]
    delta = max(F) - dG
    R = F
    steps = 0
    while R and max(R) >= dG:
        dR = max(R)
        lcr = R[dR]
        shifted = {eb + dR - dG: u_mul(ua, lcr, p) for eb, ua in G.items()}
        R = _rec_sub(_rec_scale(R, lcg, p), shifted, p)
        steps += 1
    if R and steps < delta + 1:
        R = _rec_scale(R, _u_pow(lcg, delta + 1 - steps, p), p)
    return R


def _subresultant_gcd(F, G, p):
    """Gcd of primitive F, G in F_p[a][b] (recursive dicts, deg_b F >= deg_b G
    >= 1) up to content, via the subresultant pseudo-remainder sequence."""
    g = {0: 1}
    h = {0: 1}
    while True:
        delta = max(F) - max(G)
        R = _prem_b(F, G, p)
        if not R:
            return G
        if max(R) == 0:
            return {0: {0: 1}}
        divisor = u_mul(g, _u_pow(h, delta, p), p)
        F, G = G, {eb: u_div_exact(ua, divisor, p) for eb, ua in R.items()}
        g = F[max(F)]
        if delta == 1:
            h = g
        elif delta > 1:
            h = u_div_exact(_u_pow(g, delta, p), _u_pow(h, delta - 1, p), p)


def p_gcd(f, g, p):
    """Gcd in F_p[a, b]: contents split off, then the subresultant
    pseudo-remainder sequence on the primitive parts (fraction-free,
    linear coefficient growth)."""
    if not f:
        return p_monic(g, p)
    if not g:
        return p_monic(f, p)
    if p_is_one(f) or p_is_one(g):
        return dict(P_ONE)
    if f == g:
        return p_monic(f, p)
    if len(f) == 1 and len(g) == 1:
        (ma, mb), = f
        (na, nb), = g
        return {(min(ma, na), min(mb, nb)): 1}
    rf, rg = _to_rec(f), _to_rec(g)
    df, dg = max(rf), max(rg)
    if df == 0 and dg == 0:
        return _from_rec({0: u_gcd(rf[0], rg[0], p)})
    if df == 0:
        return _from_rec({0: u_gcd(rf[0], _rec_content(rg, p), p)})
    if dg == 0:
        return _from_rec({0: u_gcd(rg[0], _rec_content(rf, p), p)})
    cf, cg = _rec_content(rf, p), _rec_content(rg, p)
    c = u_gcd(cf, cg, p)
    F = _rec_quo_content(rf, cf, p)
    G = _rec_quo_content(rg, cg, p)
    if max(F) < max(G):
        F, G = G, F
    H = _subresultant_gcd(F, G, p)
    cont = _rec_content(H, p)
    H = _rec_quo_content(H, cont, p)
    return p_monic(_from_rec(_rec_scale(H, c, p)), p)


def p_div_exact(f, g, p):
    """Quotient f/g assuming g divides f; raises ArithmeticError otherwise."""
    if not g:
        raise ZeroDivisionError("bivariate division by zero")
    q = {}
    r = dict(f)
    glm = p_leading_monomial(g)
    inv_glc = inv_mod(g[glm], p)
    while r:
        rlm = p_leading_monomial(r)
        da, db = rlm[0] - glm[0], rlm[1] - glm[1]
        if da < 0 or db < 0:
            raise ArithmeticError("bivariate division was not exact")
        c = (r[rlm] * inv_glc) % p
        q[(da, db)] = c
        for (ea, eb), k in g.items():
            m = (ea + da, eb + db)
            s = (r.get(m, 0) - c * k) % p
            if s:
                r[m] = s
            else:
                r.pop(m, None)
    return q


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _format_monomial(ea, eb, c, constant_one=True):
    parts = []
    if c != 1 or (ea == 0 and eb == 0 and constant_one):
        parts.append(str(c))
    if ea:
        parts.append("a" if ea == 1 else f"a^{ea}")
    if eb:
        parts.append("b" if eb == 1 else f"b^{eb}")
    return "*".join(parts) if parts else "1"


def format_poly(f, order="grlex"):
    """Render a bivariate polynomial; terms descending in grlex order by
    default, ascending in b-dominant lexicographic order for series."""
    if not f:
        return "0"
    if order == "grlex":
        monomials = sorted(f, key=grlex_key, reverse=True)
    else:
        monomials = sorted(f, key=lambda m: (m[1], m[0]))
    return " + ".join(_format_monomial(ea, eb, f[(ea, eb)]) for ea, eb in monomials)
