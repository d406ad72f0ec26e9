"""Monads and comonads on finite categories, with exhaustive law checking
and brute-force enumeration oracles.

On a poset category a monad is exactly a closure operator (monotone,
inflationary, idempotent) and a comonad an interior operator; the
enumerators below do not assume thinness, though: multiplication and unit
candidates are enumerated per object over hom-sets and filtered by
naturality and the monad laws, so one-object monoid categories work too.
"""

from __future__ import annotations

from .errors import EnumerationCapExceeded, LawViolation, TypeMismatch
from .fincat import (
    DEFAULT_CAP,
    FinCategory,
    Functor,
    NatTrans,
    check_naturality,
    compose_functors,
    enumerate_functors,
    enumerate_nat_trans,
    identity_functor,
    identity_nat,
    opposite,
    vcomp,
    whisker_left,
    whisker_right,
)
from .parallel import pmap
from .report import Violation


class Monad:
    """An endofunctor S with mu: S∘S → S and eta: Id → S.

    The constructor checks typing only; :func:`check_monad_laws` reports law
    violations and :meth:`require_valid` turns them into an exception.
    """

    __slots__ = ("base", "S", "mu", "eta")

    def __init__(self, base: FinCategory, S: Functor, mu: NatTrans, eta: NatTrans):
        if S.source != base or S.target != base:
            raise TypeMismatch("monad functor must be an endofunctor on the base")
        SS = compose_functors(S, S)
        if mu.source != SS or mu.target != S:
            raise TypeMismatch("mu must be typed S∘S -> S")
        if eta.source != identity_functor(base) or eta.target != S:
            raise TypeMismatch("eta must be typed Id -> S")
        self.base = base
        self.S = S
        self.mu = mu
        self.eta = eta

    def check(self) -> list:
        return check_monad_laws(self)

    def require_valid(self) -> "Monad":
        bad = self.check()
        if bad:
            raise LawViolation(bad, context="monad")
        return self

    def canonical_key(self):
        return (self.S.canonical_key(), self.mu.canonical_key(),
                self.eta.canonical_key())

    def __eq__(self, other):
        if not isinstance(other, Monad):
            return NotImplemented
        return (self.base == other.base and self.S == other.S
                and self.mu == other.mu and self.eta == other.eta)

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"Monad({self.S.object_map})"


class Comonad:
    """An endofunctor G with delta: G → G∘G and epsilon: G → Id."""

    __slots__ = ("base", "G", "delta", "epsilon")

    def __init__(self, base: FinCategory, G: Functor, delta: NatTrans,
                 epsilon: NatTrans):
        if G.source != base or G.target != base:
            raise TypeMismatch("comonad functor must be an endofunctor on the base")
        GG = compose_functors(G, G)
        if delta.source != G or delta.target != GG:
            raise TypeMismatch("delta must be typed G -> G∘G")
        if epsilon.source != G or epsilon.target != identity_functor(base):
            raise TypeMismatch("epsilon must be typed G -> Id")
        self.base = base
        self.G = G
        self.delta = delta
        self.epsilon = epsilon

    def check(self) -> list:
        return check_comonad_laws(self)

    def require_valid(self) -> "Comonad":
        bad = self.check()
        if bad:
            raise LawViolation(bad, context="comonad")
        return self

    def canonical_key(self):
        return (self.G.canonical_key(), self.delta.canonical_key(),
                self.epsilon.canonical_key())

    def __eq__(self, other):
        if not isinstance(other, Comonad):
            return NotImplemented
        return (self.base == other.base and self.G == other.G
                and self.delta == other.delta and self.epsilon == other.epsilon)

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"Comonad({self.G.object_map})"


def _compare(label, tag, lhs: NatTrans, rhs: NatTrans, out: list) -> None:
    for x in lhs.base.objects:
        if lhs.at(x) != rhs.at(x):
            out.append(Violation(label, tag, where=x, lhs=lhs.at(x), rhs=rhs.at(x)))
            return


def check_monad_laws(m: Monad) -> list:
    """Empty report iff mu/eta are natural and all three monad laws hold."""
    out = []
    for v in check_naturality(m.mu):
        out.append(Violation("MultiplicationNotNatural", "law-naturality",
                             where=v.where, lhs=v.lhs, rhs=v.rhs))
    for v in check_naturality(m.eta):
        out.append(Violation("UnitNotNatural", "law-naturality",
                             where=v.where, lhs=v.lhs, rhs=v.rhs))
    # mu ∘ (mu S) = mu ∘ (S mu)
    _compare("MonadAssociativity", "law-monad-assoc",
             vcomp(whisker_right(m.mu, m.S), m.mu),
             vcomp(whisker_left(m.S, m.mu), m.mu), out)
    # mu ∘ (eta S) = id_S
    _compare("MonadUnitLeft", "law-monad-unit-left",
             vcomp(whisker_right(m.eta, m.S), m.mu), identity_nat(m.S), out)
    # mu ∘ (S eta) = id_S
    _compare("MonadUnitRight", "law-monad-unit-right",
             vcomp(whisker_left(m.S, m.eta), m.mu), identity_nat(m.S), out)
    return out


def check_comonad_laws(c: Comonad) -> list:
    out = []
    for v in check_naturality(c.delta):
        out.append(Violation("ComultiplicationNotNatural", "law-naturality",
                             where=v.where, lhs=v.lhs, rhs=v.rhs))
    for v in check_naturality(c.epsilon):
        out.append(Violation("CounitNotNatural", "law-naturality",
                             where=v.where, lhs=v.lhs, rhs=v.rhs))
    # (delta G) ∘ delta = (G delta) ∘ delta
    _compare("ComonadCoassociativity", "law-comonad-coassoc",
             vcomp(c.delta, whisker_right(c.delta, c.G)),
             vcomp(c.delta, whisker_left(c.G, c.delta)), out)
    # (epsilon G) ∘ delta = id_G
    _compare("ComonadCounitLeft", "law-comonad-counit-left",
             vcomp(c.delta, whisker_right(c.epsilon, c.G)),
             identity_nat(c.G), out)
    # (G epsilon) ∘ delta = id_G
    _compare("ComonadCounitRight", "law-comonad-counit-right",
             vcomp(c.delta, whisker_left(c.G, c.epsilon)),
             identity_nat(c.G), out)
    return out


def identity_monad(cat: FinCategory) -> Monad:
    Id = identity_functor(cat)
    comps = {x: cat.identity(x) for x in cat.objects}
    return Monad(cat, Id, NatTrans(compose_functors(Id, Id), Id, comps),
                 NatTrans(Id, Id, comps))


def identity_comonad(cat: FinCategory) -> Comonad:
    Id = identity_functor(cat)
    comps = {x: cat.identity(x) for x in cat.objects}
    return Comonad(cat, Id, NatTrans(Id, compose_functors(Id, Id), comps),
                   NatTrans(Id, Id, comps))


def enumerate_monads(cat: FinCategory, cap: int = DEFAULT_CAP,
                     jobs: int = 1) -> list:
    """All monads on the category: deterministic, duplicate-free, sorted.

    Raises :class:`EnumerationCapExceeded` when the candidate space
    |endofunctors| x |mu choices| x |eta choices| exceeds the cap.
    """
    endos = enumerate_functors(cat, cat, cap=cap, jobs=jobs)

    estimate = 0
    for S in endos:
        mu_n = eta_n = 1
        for x in cat.objects:
            mu_n *= len(cat.hom(S.ob(S.ob(x)), S.ob(x)))
            eta_n *= len(cat.hom(x, S.ob(x)))
        estimate += mu_n * eta_n
        if estimate > cap:
            raise EnumerationCapExceeded(estimate, cap)

    def monads_on(S: Functor) -> list:
        found = []
        SS = compose_functors(S, S)
        Id = identity_functor(cat)
        for mu in enumerate_nat_trans(SS, S, cap=cap):
            for eta in enumerate_nat_trans(Id, S, cap=cap):
                m = Monad(cat, S, mu, eta)
                if not check_monad_laws(m):
                    found.append(m)
        return found

    groups = pmap(monads_on, endos, jobs=jobs)
    out = [m for group in groups for m in group]
    out.sort(key=lambda m: m.canonical_key())
    return out


def enumerate_comonads(cat: FinCategory, cap: int = DEFAULT_CAP,
                       jobs: int = 1) -> list:
    """All comonads on the category; dual of :func:`enumerate_monads`."""
    endos = enumerate_functors(cat, cat, cap=cap, jobs=jobs)

    estimate = 0
    for G in endos:
        d_n = e_n = 1
        for x in cat.objects:
            d_n *= len(cat.hom(G.ob(x), G.ob(G.ob(x))))
            e_n *= len(cat.hom(G.ob(x), x))
        estimate += d_n * e_n
        if estimate > cap:
            raise EnumerationCapExceeded(estimate, cap)

    def comonads_on(G: Functor) -> list:
        found = []
        GG = compose_functors(G, G)
        Id = identity_functor(cat)
        for delta in enumerate_nat_trans(G, GG, cap=cap):
            for eps in enumerate_nat_trans(G, Id, cap=cap):
                c = Comonad(cat, G, delta, eps)
                if not check_comonad_laws(c):
                    found.append(c)
        return found

    groups = pmap(comonads_on, endos, jobs=jobs)
    out = [c for group in groups for c in group]
    out.sort(key=lambda c: c.canonical_key())
    return out


def monad_on_opposite(c: Comonad) -> Monad:
    """The monad on the opposite category carried by a comonad (same tables)."""
    op = opposite(c.base)
    G = Functor(op, op, c.G.object_map, c.G.morphism_map)
    GG = compose_functors(G, G)
    mu = NatTrans(GG, G, c.delta.components)
    eta = NatTrans(identity_functor(op), G, c.epsilon.components)
    return Monad(op, G, mu, eta)
