"""Shared sampling helpers for the test suite."""

from palgebra import frobenius, solve_lambda
from palgebra.sampling import (
    random_monomial_scalar,
    random_poly_scalar,
)


def draw_right_linked(rng, field, monomial_beta=True):
    """Random (alpha, gamma, beta) for the common-left-slot construction,
    resampling the degenerate draws where alpha + lambda^p - lambda = 0
    (split instances excluded by the division-algebra hypothesis)."""
    while True:
        alpha = random_poly_scalar(rng, field, max_degree=1)
        gamma = random_poly_scalar(rng, field, max_degree=1)
        if monomial_beta:
            beta = random_monomial_scalar(rng, field, max_degree=1)
        else:
            beta = random_poly_scalar(rng, field, max_degree=1, nonzero=True)
        lam = solve_lambda(alpha, gamma, beta)
        if not (alpha + frobenius(lam) - lam).is_zero():
            return alpha, gamma, beta


def random_poly_element(rng, A, density=0.3, max_degree=1, max_terms=2):
    """Random element with polynomial coefficients."""
    entries = {}
    for i in range(A.p):
        for j in range(A.p):
            if rng.random() < density:
                c = random_poly_scalar(rng, A.field, max_degree=max_degree, max_terms=max_terms)
                if not c.is_zero():
                    entries[(i, j)] = c
    return A.from_entries(entries)
