"""Adjunctions carried as unit/counit 4-tuples, induced (co)monads, strictly
commuting squares between adjunctions, the mate calculus, and the two
comparison functors.

An adjunction L ⊣ R: C → X points in the direction of its left adjoint:
L: C → X and R: X → C. The triangle identities are constructor-enforced,
so every adjunction in the system is lawful by construction.

A right-commuting square (J between bases, K between upper categories)
demands R̄∘K = J∘R strictly; its mate is

    λ: L̄∘J → K∘L,   λ = (ε̄ K L) ∘ (L̄ J η).

A left-commuting square demands K∘L = L̄∘J; its mate is

    ρ: J∘R → R̄∘K,   ρ = (R̄ K ε) ∘ (η̄ J R).

Mates are always computed from the square, never stored independently.
"""

from __future__ import annotations

from .errors import LawViolation, SquareConstraintViolation, TypeMismatch
from .fincat import (
    FinCategory,
    Functor,
    NatTrans,
    compose_functors,
    identity_functor,
    identity_nat,
    vcomp,
    whisker_left,
    whisker_right,
)
from .monad import Comonad, Monad
from .report import Violation


class Adjunction:
    """L ⊣ R with unit: Id → R∘L and counit: L∘R → Id."""

    __slots__ = ("L", "R", "unit", "counit")

    def __init__(self, L: Functor, R: Functor, unit: NatTrans, counit: NatTrans):
        if L.source != R.target or L.target != R.source:
            raise TypeMismatch("L and R do not form a functor pair")
        C = L.source
        X = L.target
        if unit.source != identity_functor(C) or unit.target != compose_functors(R, L):
            raise TypeMismatch("unit must be typed Id -> R∘L")
        if counit.source != compose_functors(L, R) or counit.target != identity_functor(X):
            raise TypeMismatch("counit must be typed L∘R -> Id")
        self.L = L
        self.R = R
        self.unit = unit
        self.counit = counit
        bad = self._triangles()
        if bad:
            raise LawViolation(bad, context="adjunction triangle identities")

    def _triangles(self) -> list:
        out = []
        # (counit L) ∘ (L unit) = id_L
        left = vcomp(whisker_left(self.L, self.unit),
                     whisker_right(self.counit, self.L))
        ident = identity_nat(self.L)
        for x in self.base.objects:
            if left.at(x) != ident.at(x):
                out.append(Violation("TriangleIdentityL", "law-triangle-left",
                                     where=x, lhs=left.at(x), rhs=ident.at(x)))
                break
        # (R counit) ∘ (unit R) = id_R
        right = vcomp(whisker_right(self.unit, self.R),
                      whisker_left(self.R, self.counit))
        ident = identity_nat(self.R)
        for x in self.upper.objects:
            if right.at(x) != ident.at(x):
                out.append(Violation("TriangleIdentityR", "law-triangle-right",
                                     where=x, lhs=right.at(x), rhs=ident.at(x)))
                break
        return out

    @property
    def base(self) -> FinCategory:
        return self.L.source

    @property
    def upper(self) -> FinCategory:
        return self.L.target

    def __eq__(self, other):
        if not isinstance(other, Adjunction):
            return NotImplemented
        return (self.L == other.L and self.R == other.R
                and self.unit == other.unit and self.counit == other.counit)

    def __hash__(self):
        return hash((self.L.canonical_key(), self.R.canonical_key(),
                     self.unit.canonical_key(), self.counit.canonical_key()))

    def __repr__(self):
        return f"Adjunction({self.base!r} -> {self.upper!r})"


def identity_adjunction(cat: FinCategory) -> Adjunction:
    Id = identity_functor(cat)
    return Adjunction(Id, Id, identity_nat(Id), identity_nat(Id))


def induced_monad(a: Adjunction) -> Monad:
    """(C, R∘L, R counit L, unit)."""
    S = compose_functors(a.R, a.L)
    mu_raw = whisker_left(a.R, whisker_right(a.counit, a.L))
    mu = NatTrans(compose_functors(S, S), S, mu_raw.components)
    eta = NatTrans(identity_functor(a.base), S, a.unit.components)
    return Monad(a.base, S, mu, eta)


def induced_comonad(a: Adjunction) -> Comonad:
    """(X, L∘R, L unit R, counit)."""
    G = compose_functors(a.L, a.R)
    delta_raw = whisker_left(a.L, whisker_right(a.unit, a.R))
    delta = NatTrans(G, compose_functors(G, G), delta_raw.components)
    eps = NatTrans(G, identity_functor(a.upper), a.counit.components)
    return Comonad(a.upper, G, delta, eps)


class CommutingSquareR:
    """A strictly commuting square of right adjoints: R̄∘K = J∘R."""

    __slots__ = ("dom", "cod", "J", "K")

    def __init__(self, dom: Adjunction, cod: Adjunction, J: Functor, K: Functor):
        if J.source != dom.base or J.target != cod.base:
            raise TypeMismatch("J must map base to base")
        if K.source != dom.upper or K.target != cod.upper:
            raise TypeMismatch("K must map upper to upper")
        if compose_functors(cod.R, K) != compose_functors(J, dom.R):
            raise SquareConstraintViolation("R̄∘K = J∘R fails")
        self.dom = dom
        self.cod = cod
        self.J = J
        self.K = K

    def __eq__(self, other):
        if not isinstance(other, CommutingSquareR):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.J == other.J and self.K == other.K)

    def __hash__(self):
        return hash((self.J.canonical_key(), self.K.canonical_key()))


class CommutingSquareL:
    """A strictly commuting square of left adjoints: K∘L = L̄∘J."""

    __slots__ = ("dom", "cod", "J", "K")

    def __init__(self, dom: Adjunction, cod: Adjunction, J: Functor, K: Functor):
        if J.source != dom.base or J.target != cod.base:
            raise TypeMismatch("J must map base to base")
        if K.source != dom.upper or K.target != cod.upper:
            raise TypeMismatch("K must map upper to upper")
        if compose_functors(K, dom.L) != compose_functors(cod.L, J):
            raise SquareConstraintViolation("K∘L = L̄∘J fails")
        self.dom = dom
        self.cod = cod
        self.J = J
        self.K = K

    def __eq__(self, other):
        if not isinstance(other, CommutingSquareL):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.J == other.J and self.K == other.K)

    def __hash__(self):
        return hash((self.J.canonical_key(), self.K.canonical_key()))


def mate_right(sq: CommutingSquareR) -> NatTrans:
    """λ: L̄∘J → K∘L, computed as (ε̄ K L) ∘ (L̄ J η)."""
    LbarJ = compose_functors(sq.cod.L, sq.J)
    KL = compose_functors(sq.K, sq.dom.L)
    return vcomp(whisker_left(LbarJ, sq.dom.unit),
                 whisker_right(sq.cod.counit, KL))


def mate_left(sq: CommutingSquareL) -> NatTrans:
    """ρ: J∘R → R̄∘K, computed as (R̄ K ε) ∘ (η̄ J R)."""
    JR = compose_functors(sq.J, sq.dom.R)
    RbarK = compose_functors(sq.cod.R, sq.K)
    return vcomp(whisker_right(sq.cod.unit, JR),
                 whisker_left(RbarK, sq.dom.counit))


def mate_right_transpose(sq: CommutingSquareR, lam: NatTrans) -> NatTrans:
    """Transpose a right-square mate back: (R̄ K ε) ∘ (R̄ λ R) ∘ (η̄ J R).

    For λ = mate_right(sq) this recovers the identity transformation of
    J∘R = R̄∘K, which is what makes the square's strict equality and its
    mate two views of the same cell.
    """
    JR = compose_functors(sq.J, sq.dom.R)
    RbarK = compose_functors(sq.cod.R, sq.K)
    return vcomp(whisker_right(sq.cod.unit, JR),
                 vcomp(whisker_right(whisker_left(sq.cod.R, lam), sq.dom.R),
                       whisker_left(RbarK, sq.dom.counit)))


# ---------------------------------------------------------------------------
# Comparison functors


def comparison_functor_em(a: Adjunction) -> CommutingSquareR:
    """The canonical functor from the upper category into the algebras of
    the induced monad, packaged as the square (Id, K) into the
    algebra adjunction: U∘K = R and K∘L = F hold strictly.
    """
    from .construct import em_category

    m = induced_monad(a)
    em = em_category(m)
    obj_map = {}
    for y in a.upper.objects:
        obj_map[y] = em.algebra_id(a.R.ob(y), a.R.mor(a.counit.at(y)))
    mor_map = {}
    for g in a.upper.morphisms:
        mid = em.as_algebra_morphism(a.R.mor(g.id), obj_map[g.src], obj_map[g.tgt])
        if mid is None:
            raise SquareConstraintViolation(
                f"comparison image of {g.id} is not an algebra morphism")
        mor_map[g.id] = mid
    K = Functor(a.upper, em.category, obj_map, mor_map)
    sq = CommutingSquareR(a, em.adj, identity_functor(a.base), K)
    # The other side of the unit square also commutes strictly: K∘L = F.
    if compose_functors(K, a.L) != em.F:
        raise SquareConstraintViolation("comparison functor: K∘L = F fails")
    return sq


def comparison_functor_kleisli(a: Adjunction) -> CommutingSquareL:
    """The canonical functor from the Kleisli category of the induced monad
    into the base adjunction, packaged as the square (Id, K) out of the
    Kleisli adjunction: K∘D = L holds strictly.
    """
    from .construct import kleisli_category

    m = induced_monad(a)
    kl = kleisli_category(m)
    obj_map = {x: a.L.ob(x) for x in kl.category.objects}
    mor_map = {}
    for mm in kl.category.morphisms:
        y, x_src, y_tgt = kl.underlying(mm.id)
        # y: X -> R L Y downstairs; image is counit_{L Y} ∘ L y upstairs
        mor_map[mm.id] = a.upper.compose(a.L.mor(y), a.counit.at(a.L.ob(y_tgt)))
    K = Functor(kl.category, a.upper, obj_map, mor_map)
    return CommutingSquareL(kl.adj, a, identity_functor(a.base), K)
