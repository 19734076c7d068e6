"""Seeded random generators for scalars and algebra elements.

Everything takes an explicit random.Random so that experiment scripts,
the CLI and the test suite stay reproducible. Sampled coefficients are
kept small: the engine is exact, so size only costs time.
"""

from __future__ import annotations

from .fields import LaurentScalar, RatFunc


def random_poly_scalar(rng, field, max_degree=2, max_terms=3, nonzero=False):
    """Random polynomial in a, b as a scalar of the field."""
    p = field.prime
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            m = (rng.randint(0, max_degree), rng.randint(0, max_degree))
            c = rng.randrange(p)
            terms[m] = (terms.get(m, 0) + c) % p
        terms = {m: c for m, c in terms.items() if c}
        if terms or not nonzero:
            break
    if field.kind == "rational":
        return RatFunc(p, terms, _canonical=True)
    return LaurentScalar(p, field.precision, terms)


def random_monomial_scalar(rng, field, max_degree=2):
    """Random nonzero monomial c * a^i * b^j."""
    p = field.prime
    m = (rng.randint(0, max_degree), rng.randint(0, max_degree))
    c = rng.randrange(1, p)
    if field.kind == "rational":
        return RatFunc(p, {m: c}, _canonical=True)
    return LaurentScalar(p, field.precision, {m: c})


def random_rational_function(rng, field, max_degree=2):
    """Random scalar with a nontrivial denominator (rational fields only)."""
    num = random_poly_scalar(rng, field, max_degree, nonzero=True)
    den = random_monomial_scalar(rng, field, max_degree=1) + random_poly_scalar(
        rng, field, max_degree=1, max_terms=1
    )
    if den.is_zero():
        den = field.one()
    return num / den


def random_element(rng, algebra, density=0.35, scalar_sampler=None):
    """Random algebra element; each grid entry is filled with the given
    probability. Density is kept low so property tests stay fast at p=5."""
    sample = scalar_sampler or (lambda r: random_poly_scalar(r, algebra.field, max_degree=1, max_terms=2))
    entries = {}
    p = algebra.p
    for i in range(p):
        for j in range(p):
            if rng.random() < density:
                entries[(i, j)] = sample(rng)
    return algebra.from_entries(entries)


def random_nonzero_element(rng, algebra, density=0.35, scalar_sampler=None):
    while True:
        t = random_element(rng, algebra, density, scalar_sampler)
        if not t.is_zero():
            return t


def random_fx_element(rng, algebra, nonzero=True):
    """Random element of the commutative subring F[x]."""
    p = algebra.p
    while True:
        entries = {}
        for i in range(p):
            if rng.random() < 0.6:
                c = random_poly_scalar(rng, algebra.field, max_degree=1, max_terms=2)
                if not c.is_zero():
                    entries[(i, 0)] = c
        if entries or not nonzero:
            return algebra.from_entries(entries)
