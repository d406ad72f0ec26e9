"""Distributive laws phi: S∘T → T∘S between monads and mixed distributive
laws psi: S∘G → G∘S from a monad to a comonad: representation, the four
axiom diagrams, and exhaustive enumeration.

On a poset category a law from S to T exists iff S(T(x)) <= T(S(x)) for
every x, and is then unique; the enumerators agree with that criterion but
do not rely on it. Untypable situations (an empty hom-set at some object)
are classified separately from axiom failures.
"""

from __future__ import annotations

from itertools import product

from .errors import (
    BaseMismatch,
    EnumerationCapExceeded,
    LawViolation,
    TypeMismatch,
    UnTypableComponent,
)
from .fincat import (
    DEFAULT_CAP,
    NatTrans,
    check_naturality,
    compose_functors,
    vcomp,
    whisker_left,
    whisker_right,
)
from .monad import Comonad, Monad
from .parallel import pmap
from .report import Violation


class DistributiveLaw:
    """A candidate law phi: S∘T → T∘S over one base category.

    The constructor checks typing; :func:`check_dist_law` reports on the
    four axiom diagrams.
    """

    __slots__ = ("S", "T", "phi")

    def __init__(self, S: Monad, T: Monad, phi: NatTrans):
        if S.base != T.base:
            raise BaseMismatch("monads live on different bases")
        if phi.source != compose_functors(S.S, T.S):
            raise TypeMismatch("phi source must be S∘T")
        if phi.target != compose_functors(T.S, S.S):
            raise TypeMismatch("phi target must be T∘S")
        self.S = S
        self.T = T
        self.phi = phi

    def check(self) -> list:
        return check_dist_law(self.S, self.T, self.phi)

    def require_valid(self) -> "DistributiveLaw":
        bad = self.check()
        if bad:
            raise LawViolation(bad, context="distributive law")
        return self

    def canonical_key(self):
        return self.phi.canonical_key()

    def __eq__(self, other):
        if not isinstance(other, DistributiveLaw):
            return NotImplemented
        return (self.S == other.S and self.T == other.T
                and self.phi.components == other.phi.components)

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"DistributiveLaw({self.phi.components})"


class MixedDistributiveLaw:
    """A candidate mixed law psi: S∘G → G∘S for a monad S and comonad G."""

    __slots__ = ("S", "G", "psi")

    def __init__(self, S: Monad, G: Comonad, psi: NatTrans):
        if S.base != G.base:
            raise BaseMismatch("monad and comonad live on different bases")
        if psi.source != compose_functors(S.S, G.G):
            raise TypeMismatch("psi source must be S∘G")
        if psi.target != compose_functors(G.G, S.S):
            raise TypeMismatch("psi target must be G∘S")
        self.S = S
        self.G = G
        self.psi = psi

    def check(self) -> list:
        return check_mixed_law(self.S, self.G, self.psi)

    def require_valid(self) -> "MixedDistributiveLaw":
        bad = self.check()
        if bad:
            raise LawViolation(bad, context="mixed distributive law")
        return self

    def canonical_key(self):
        return self.psi.canonical_key()

    def __eq__(self, other):
        if not isinstance(other, MixedDistributiveLaw):
            return NotImplemented
        return (self.S == other.S and self.G == other.G
                and self.psi.components == other.psi.components)

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"MixedDistributiveLaw({self.psi.components})"


def _first_diff(kind, tag, lhs: NatTrans, rhs: NatTrans, out: list) -> None:
    for x in lhs.base.objects:
        if lhs.at(x) != rhs.at(x):
            out.append(Violation(kind, tag, where=x, lhs=lhs.at(x), rhs=rhs.at(x)))
            return


def check_dist_law(S: Monad, T: Monad, phi: NatTrans) -> list:
    """Name each of the four axioms with pass/fail and the first failing object.

    Naturality of phi is checked first; a non-natural candidate is not a
    distributive law regardless of the diagrams.
    """
    out = []
    for v in check_naturality(phi):
        out.append(Violation("LawNotNatural", "law-naturality",
                             where=v.where, lhs=v.lhs, rhs=v.rhs))

    Sf, Tf = S.S, T.S
    # (i)  phi ∘ (mu^S T) = (T mu^S) ∘ (phi S) ∘ (S phi)
    lhs = vcomp(whisker_right(S.mu, Tf), phi)
    rhs = vcomp(whisker_left(Sf, phi),
                vcomp(whisker_right(phi, Sf), whisker_left(Tf, S.mu)))
    _first_diff("MultiplicationSquareS", "Eq-1510071248-i", lhs, rhs, out)
    # (ii) phi ∘ (eta^S T) = T eta^S
    lhs = vcomp(whisker_right(S.eta, Tf), phi)
    rhs = whisker_left(Tf, S.eta)
    _first_diff("UnitTriangleS", "Eq-1510071248-ii", lhs, rhs, out)
    # (iii) phi ∘ (S mu^T) = (mu^T S) ∘ (T phi) ∘ (phi T)
    lhs = vcomp(whisker_left(Sf, T.mu), phi)
    rhs = vcomp(whisker_right(phi, Tf),
                vcomp(whisker_left(Tf, phi), whisker_right(T.mu, Sf)))
    _first_diff("MultiplicationSquareT", "Eq-1510071249-i", lhs, rhs, out)
    # (iv) phi ∘ (S eta^T) = eta^T S
    lhs = vcomp(whisker_left(Sf, T.eta), phi)
    rhs = whisker_right(T.eta, Sf)
    _first_diff("UnitTriangleT", "Eq-1510071249-ii", lhs, rhs, out)
    return out


def check_mixed_law(S: Monad, G: Comonad, psi: NatTrans) -> list:
    """Six reported instances: naturality plus the four mixed axioms."""
    out = []
    for v in check_naturality(psi):
        out.append(Violation("LawNotNatural", "law-naturality",
                             where=v.where, lhs=v.lhs, rhs=v.rhs))

    Sf, Gf = S.S, G.G
    # (i)  psi ∘ (mu^S G) = (G mu^S) ∘ (psi S) ∘ (S psi)
    lhs = vcomp(whisker_right(S.mu, Gf), psi)
    rhs = vcomp(whisker_left(Sf, psi),
                vcomp(whisker_right(psi, Sf), whisker_left(Gf, S.mu)))
    _first_diff("MultiplicationSquare", "Eq-1510081240-i", lhs, rhs, out)
    # (ii) psi ∘ (eta^S G) = G eta^S
    lhs = vcomp(whisker_right(S.eta, Gf), psi)
    rhs = whisker_left(Gf, S.eta)
    _first_diff("UnitTriangle", "Eq-1510081240-ii", lhs, rhs, out)
    # (iii) (delta^G S) ∘ psi = (G psi) ∘ (psi G) ∘ (S delta^G)
    lhs = vcomp(psi, whisker_right(G.delta, Sf))
    rhs = vcomp(whisker_left(Sf, G.delta),
                vcomp(whisker_right(psi, Gf), whisker_left(Gf, psi)))
    _first_diff("ComultiplicationSquare", "Eq-1510081242-i", lhs, rhs, out)
    # (iv) (epsilon^G S) ∘ psi = S epsilon^G
    lhs = vcomp(psi, whisker_right(G.epsilon, Sf))
    rhs = whisker_left(Sf, G.epsilon)
    _first_diff("CounitTriangle", "Eq-1510081242-ii", lhs, rhs, out)
    return out


# ---------------------------------------------------------------------------
# Typability


def untypable_objects(S: Monad, T) -> list:
    """Objects where no candidate component exists (empty hom-set)."""
    endo = T.S if isinstance(T, Monad) else T.G
    cat = S.base
    out = []
    for x in cat.objects:
        st = S.S.ob(endo.ob(x))
        ts = endo.ob(S.S.ob(x))
        if not cat.hom(st, ts):
            out.append(x)
    return out


def require_typable(S: Monad, T) -> None:
    bad = untypable_objects(S, T)
    if bad:
        x = bad[0]
        endo = T.S if isinstance(T, Monad) else T.G
        raise UnTypableComponent(
            x, f"hom({S.S.ob(endo.ob(x))},{endo.ob(S.S.ob(x))}) is empty")


# ---------------------------------------------------------------------------
# Enumeration


def enumerate_dist_laws(S: Monad, T: Monad, cap: int = DEFAULT_CAP,
                        jobs: int = 1) -> list:
    """All distributive laws from S to T, canonically ordered.

    Candidates are generated only after a typability pre-pass; an
    untypable pair yields an empty list rather than an error.
    """
    S.require_valid()
    T.require_valid()
    if untypable_objects(S, T):
        return []
    cat = S.base
    objs = cat.objects
    choices = [cat.hom(S.S.ob(T.S.ob(x)), T.S.ob(S.S.ob(x))) for x in objs]
    estimate = 1
    for c in choices:
        estimate *= len(c)
        if estimate > cap:
            raise EnumerationCapExceeded(estimate, cap)

    src = compose_functors(S.S, T.S)
    tgt = compose_functors(T.S, S.S)

    def scan(first_choice):
        found = []
        rest = choices[1:] if objs else []
        for combo in product([first_choice], *rest):
            phi = NatTrans(src, tgt, dict(zip(objs, combo)))
            dl = DistributiveLaw(S, T, phi)
            if not dl.check():
                found.append(dl)
        return found

    if not objs:
        phi = NatTrans(src, tgt, {})
        dl = DistributiveLaw(S, T, phi)
        return [dl] if not dl.check() else []

    groups = pmap(scan, choices[0], jobs=jobs)
    out = [dl for group in groups for dl in group]
    out.sort(key=lambda dl: dl.canonical_key())
    return out


def enumerate_mixed_laws(S: Monad, G: Comonad, cap: int = DEFAULT_CAP,
                         jobs: int = 1) -> list:
    """All mixed distributive laws from S to G, canonically ordered."""
    S.require_valid()
    G.require_valid()
    if untypable_objects(S, G):
        return []
    cat = S.base
    objs = cat.objects
    choices = [cat.hom(S.S.ob(G.G.ob(x)), G.G.ob(S.S.ob(x))) for x in objs]
    estimate = 1
    for c in choices:
        estimate *= len(c)
        if estimate > cap:
            raise EnumerationCapExceeded(estimate, cap)

    src = compose_functors(S.S, G.G)
    tgt = compose_functors(G.G, S.S)

    def scan(first_choice):
        found = []
        rest = choices[1:] if objs else []
        for combo in product([first_choice], *rest):
            psi = NatTrans(src, tgt, dict(zip(objs, combo)))
            ml = MixedDistributiveLaw(S, G, psi)
            if not ml.check():
                found.append(ml)
        return found

    if not objs:
        psi = NatTrans(src, tgt, {})
        ml = MixedDistributiveLaw(S, G, psi)
        return [ml] if not ml.check() else []

    groups = pmap(scan, choices[0], jobs=jobs)
    out = [ml for group in groups for ml in group]
    out.sort(key=lambda ml: ml.canonical_key())
    return out


def dist_law_from_components(S: Monad, T: Monad, components: dict) -> DistributiveLaw:
    phi = NatTrans(compose_functors(S.S, T.S), compose_functors(T.S, S.S),
                   components)
    return DistributiveLaw(S, T, phi)


def mixed_law_from_components(S: Monad, G: Comonad, components: dict) -> MixedDistributiveLaw:
    psi = NatTrans(compose_functors(S.S, G.G), compose_functors(G.G, S.S),
                   components)
    return MixedDistributiveLaw(S, G, psi)
