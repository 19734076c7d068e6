"""Symbol-presentation transformations with machine-checked witnesses.

A presentation [left, right) of an algebra is certified by a generator
pair (z, w) with w z w^(-1) = z + 1, z^p - z = left and w^p = right.
Every transformation here returns both the new presentation and such a
witness, verified by the multiplication engine rather than trusted from
the closed forms that motivate it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgElement, SymbolAlgebra, make_algebra
from .errors import (
    HypothesisFails,
    InvalidSlot,
    RelationFails,
    WitnessVerificationFailed,
)
from .fields import FieldDescriptor, frobenius


@dataclass(frozen=True)
class SymbolPresentation:
    """The data [left, right)_p over a named base field."""

    left: object
    right: object
    p: int
    field: FieldDescriptor

    def __post_init__(self):
        if self.right.is_zero():
            raise InvalidSlot("the right slot must be nonzero")

    def to_algebra(self) -> SymbolAlgebra:
        return make_algebra(self.p, self.left, self.right, self.field)

    def __str__(self):
        return f"[{self.left}, {self.right})_{self.p}"


@dataclass(frozen=True)
class LinkageWitness:
    """A generator pair certifying a presentation of its algebra."""

    z: AlgElement
    w: AlgElement
    claimed_left: object
    claimed_right: object

    def to_dict(self):
        return {
            "z": str(self.z),
            "w": str(self.w),
            "left": str(self.claimed_left),
            "right": str(self.claimed_right),
        }


@dataclass(frozen=True)
class LeftLinkResult:
    """Output of the right-linked to left-linked construction."""

    lam: object
    common_left: object
    pres_A: SymbolPresentation
    pres_Aprime: SymbolPresentation
    witness_A: LinkageWitness
    witness_Aprime: LinkageWitness

    def to_dict(self):
        return {
            "lambda": str(self.lam),
            "common_left": str(self.common_left),
            "presentation_A": str(self.pres_A),
            "presentation_Aprime": str(self.pres_Aprime),
            "witness_A": self.witness_A.to_dict(),
            "witness_Aprime": self.witness_Aprime.to_dict(),
        }


@dataclass(frozen=True)
class LemmaReport:
    """Both sides of (x+y)^p - (x+y) = (x^p - x) + y^p plus the shift check."""

    k: int
    m: int
    lhs: AlgElement
    rhs: AlgElement
    sides_agree: bool
    shift_conjugation_ok: bool

    @property
    def ok(self):
        return self.sides_agree and self.shift_conjugation_ok

    def to_dict(self):
        return {
            "k": self.k,
            "m": self.m,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "sides_agree": self.sides_agree,
            "shift_conjugation_ok": self.shift_conjugation_ok,
        }


def verify_presentation(A: SymbolAlgebra, z: AlgElement, w: AlgElement) -> LinkageWitness:
    """Check the generator-pair relations and extract the certified slots.

    A nonzero pair with w z w^(-1) = z + 1 forces z to be Artin-Schreier
    and w to be p-central, and the algebra is then presented by the slots
    (z^p - z, w^p); all three facts are engine-checked here.
    """
    if z.is_zero() or w.is_zero():
        raise RelationFails("generators must be nonzero")
    conj = A.conjugate(w, z)
    if not A.certified_equal(conj, z + A.one()):
        raise RelationFails("w z w^-1 = z + 1", computed=conj, expected=z + A.one())
    left = A.sub(A.power(z, A.p), z).is_scalar()
    if left is None:
        raise RelationFails("z^p - z lies in the base field")
    right = A.power(w, A.p).is_scalar()
    if right is None:
        raise RelationFails("w^p lies in the base field")
    return LinkageWitness(z=z, w=w, claimed_left=left, claimed_right=right)


def chain_identity(pres: SymbolPresentation):
    """The presentation [left + right, right) of the same algebra, with the
    witness pair (x + y, y)."""
    A = pres.to_algebra()
    witness = verify_presentation(A, A.x() + A.y(), A.y())
    if witness.claimed_left != pres.left + pres.right or witness.claimed_right != pres.right:
        raise WitnessVerificationFailed("chain identity produced unexpected slots")
    new_pres = SymbolPresentation(witness.claimed_left, witness.claimed_right, pres.p, pres.field)
    return new_pres, witness


def scale_slot_by_norm(pres: SymbolPresentation, u: AlgElement):
    """Rescale the right slot by the norm of u in F[x]: [left, N(u)*right).

    The witness pair is (x, u*y); u commutes with x, so u*y still shifts
    x by one under conjugation.
    """
    A = pres.to_algebra()
    norm = A.norm_Fx(u)
    witness = verify_presentation(A, A.x(), A.mul(u, A.y()))
    if witness.claimed_left != pres.left or witness.claimed_right != norm * pres.right:
        raise WitnessVerificationFailed("norm scaling produced unexpected slots")
    new_pres = SymbolPresentation(pres.left, witness.claimed_right, pres.p, pres.field)
    return new_pres, witness


def verify_lemma(A: SymbolAlgebra, x_el: AlgElement, y_el: AlgElement) -> LemmaReport:
    """Check the additivity identity for a pair with y x - x y = k y.

    Finds k in {1, ..., p-1} with commutator(y_el, x_el) = k * y_el, then
    expands both sides of (x+y)^p - (x+y) = (x^p - x) + y^p directly.  The
    report also confirms that conjugating x_el + y_el by y_el^m shifts it
    by one, where m k = 1 (mod p), which is what makes the sum
    Artin-Schreier.
    """
    if x_el.is_zero() or y_el.is_zero():
        raise HypothesisFails("both elements must be nonzero")
    comm = A.commutator(y_el, x_el)
    k_found = None
    for k in range(1, A.p):
        if comm == A.scale(k, y_el):
            k_found = k
            break
    if k_found is None:
        raise HypothesisFails("no k in 1..p-1 with y x - x y = k y")
    m = next(m for m in range(1, A.p) if (m * k_found) % A.p == 1)
    s = x_el + y_el
    lhs = A.sub(A.power(s, A.p), s)
    rhs = A.add(A.sub(A.power(x_el, A.p), x_el), A.power(y_el, A.p))
    shifted = A.conjugate(A.power(y_el, m), s)
    return LemmaReport(
        k=k_found,
        m=m,
        lhs=lhs,
        rhs=rhs,
        sides_agree=A.certified_equal(lhs, rhs),
        shift_conjugation_ok=A.certified_equal(shifted, s + A.one()),
    )


def solve_lambda(alpha, gamma, beta):
    """The unique lambda with alpha + beta*(alpha - lambda) = gamma."""
    if beta.is_zero():
        raise InvalidSlot("the shared right slot must be nonzero")
    lam = alpha - (gamma - alpha) / beta
    if alpha + beta * (alpha - lam) != gamma:
        raise WitnessVerificationFailed("lambda failed its defining equation")
    return lam


def right_to_left(alpha, gamma, beta, p, field: FieldDescriptor) -> LeftLinkResult:
    """Produce a common left slot for the right-linked pair [alpha, beta),
    [gamma, beta), with verified witnesses in both algebras.

    In A = [alpha, beta) the pair is z = x + (lambda + x) y, w = (lambda + x) y;
    in A' = [gamma, beta) it is z' = x' + lambda y', w' = y'.  Both z and z'
    have p-th Artin-Schreier constant gamma + lambda^p beta.
    """
    lam = solve_lambda(alpha, gamma, beta)
    lam_p = frobenius(lam)
    common_left = gamma + lam_p * beta
    norm_slot = (alpha + lam_p - lam) * beta
    if norm_slot.is_zero():
        raise InvalidSlot(
            "alpha + lambda^p - lambda = 0: the rescaled right slot vanishes, "
            "so the pair is degenerate (x + lambda is a zero divisor in F[x])"
        )

    A = make_algebra(p, alpha, beta, field)
    w = A.mul(A.scalar(lam) + A.x(), A.y())
    z = A.x() + w
    witness_A = verify_presentation(A, z, w)
    if witness_A.claimed_left != common_left or witness_A.claimed_right != norm_slot:
        raise WitnessVerificationFailed("witness slots in A disagree with the closed form")

    Aprime = make_algebra(p, gamma, beta, field)
    zp = Aprime.x() + lam * Aprime.y()
    witness_Aprime = verify_presentation(Aprime, zp, Aprime.y())
    if witness_Aprime.claimed_left != common_left or witness_Aprime.claimed_right != beta:
        raise WitnessVerificationFailed("witness slots in A' disagree with the closed form")

    if alpha + norm_slot != common_left:
        raise WitnessVerificationFailed("slot bookkeeping identity failed")

    return LeftLinkResult(
        lam=lam,
        common_left=common_left,
        pres_A=SymbolPresentation(common_left, norm_slot, p, field),
        pres_Aprime=SymbolPresentation(common_left, beta, p, field),
        witness_A=witness_A,
        witness_Aprime=witness_Aprime,
    )
