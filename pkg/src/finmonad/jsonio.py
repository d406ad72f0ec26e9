"""JSON file formats for categories, monads, comonads, and laws.

Category file:
    {"objects": [...],
     "morphisms": [{"id", "src", "tgt"}, ...],
     "identities": {obj: morph}?,            # optional, synthesized if absent
     "composition": [{"first", "then", "equals"}, ...]}   # equals = then∘first

Monad file:
    {"category": <path or inline category>,
     "endofunctor": {"objects": {x: y}, "morphisms": {f: g}},
     "mu": {obj: morph}, "eta": {obj: morph}}

Comonad file: same with "delta"/"epsilon".
Law file: {"S": <path or inline monad>, "T": <...>, "phi": {obj: morph}};
mixed law file: {"S": ..., "G": <comonad>, "psi": {...}}.

Nested "category"/"S"/... values given as strings are paths resolved
relative to the referring file.
"""

from __future__ import annotations

import json
import os

from .distlaw import DistributiveLaw, MixedDistributiveLaw, require_typable
from .errors import BaseMismatch, ComponentMistyped, LawViolation
from .fincat import (
    FinCategory,
    Functor,
    NatTrans,
    compose_functors,
    check_functor,
    identity_functor,
    validate_category,
)
from .monad import Comonad, Monad


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _resolve(value, base_dir: str):
    """A string is a path relative to the referring file; a dict is inline."""
    if isinstance(value, str):
        path = value if os.path.isabs(value) else os.path.join(base_dir, value)
        return _load_json(path), os.path.dirname(os.path.abspath(path))
    if isinstance(value, dict):
        return value, base_dir
    raise ComponentMistyped(f"expected a path or inline object, got {value!r}")


# -- categories --------------------------------------------------------------


def category_to_raw(cat: FinCategory) -> dict:
    return {
        "objects": list(cat.objects),
        "morphisms": [{"id": m.id, "src": m.src, "tgt": m.tgt}
                      for m in cat.morphisms],
        "identities": dict(sorted(cat.identities.items())),
        "composition": [{"first": f, "then": g, "equals": h}
                        for f, g, h in cat.composition_items()],
    }


def parse_category(raw: dict, *, seed: int = 0) -> FinCategory:
    return validate_category(raw, seed=seed)


def load_category(path: str, *, seed: int = 0) -> FinCategory:
    return parse_category(_load_json(path), seed=seed)


def dump_category(cat: FinCategory, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(category_to_raw(cat), fh, indent=2, sort_keys=True,
                  ensure_ascii=False)
        fh.write("\n")


# -- functors and transformations against a known category -------------------


def parse_endofunctor(cat: FinCategory, raw: dict) -> Functor:
    try:
        obj_map = {str(k): str(v) for k, v in raw["objects"].items()}
        mor_map = {str(k): str(v) for k, v in raw["morphisms"].items()}
    except (KeyError, TypeError, AttributeError):
        raise ComponentMistyped("endofunctor needs objects/morphisms maps")
    F = Functor(cat, cat, obj_map, mor_map)
    bad = check_functor(F)
    if bad:
        raise LawViolation(bad, context="endofunctor")
    return F


def functor_to_raw(F: Functor) -> dict:
    return {"objects": dict(sorted(F.object_map.items())),
            "morphisms": dict(sorted(F.morphism_map.items()))}


# -- monads and comonads ------------------------------------------------------


def parse_monad(raw: dict, base_dir: str = ".", *, seed: int = 0) -> Monad:
    cat_raw, _ = _resolve(raw["category"], base_dir)
    cat = parse_category(cat_raw, seed=seed)
    S = parse_endofunctor(cat, raw["endofunctor"])
    mu = NatTrans(compose_functors(S, S), S,
                  {str(k): str(v) for k, v in raw["mu"].items()})
    eta = NatTrans(identity_functor(cat), S,
                   {str(k): str(v) for k, v in raw["eta"].items()})
    return Monad(cat, S, mu, eta).require_valid()


def load_monad(path: str, *, seed: int = 0) -> Monad:
    return parse_monad(_load_json(path), os.path.dirname(os.path.abspath(path)),
                       seed=seed)


def monad_to_raw(m: Monad) -> dict:
    return {
        "category": category_to_raw(m.base),
        "endofunctor": functor_to_raw(m.S),
        "mu": dict(sorted(m.mu.components.items())),
        "eta": dict(sorted(m.eta.components.items())),
    }


def parse_comonad(raw: dict, base_dir: str = ".", *, seed: int = 0) -> Comonad:
    cat_raw, _ = _resolve(raw["category"], base_dir)
    cat = parse_category(cat_raw, seed=seed)
    G = parse_endofunctor(cat, raw["endofunctor"])
    delta = NatTrans(G, compose_functors(G, G),
                     {str(k): str(v) for k, v in raw["delta"].items()})
    eps = NatTrans(G, identity_functor(cat),
                   {str(k): str(v) for k, v in raw["epsilon"].items()})
    return Comonad(cat, G, delta, eps).require_valid()


def load_comonad(path: str, *, seed: int = 0) -> Comonad:
    return parse_comonad(_load_json(path),
                         os.path.dirname(os.path.abspath(path)), seed=seed)


def comonad_to_raw(c: Comonad) -> dict:
    return {
        "category": category_to_raw(c.base),
        "endofunctor": functor_to_raw(c.G),
        "delta": dict(sorted(c.delta.components.items())),
        "epsilon": dict(sorted(c.epsilon.components.items())),
    }


# -- laws ---------------------------------------------------------------------


def parse_dist_law(raw: dict, base_dir: str = ".", *, seed: int = 0) -> DistributiveLaw:
    s_raw, s_dir = _resolve(raw["S"], base_dir)
    t_raw, t_dir = _resolve(raw["T"], base_dir)
    S = parse_monad(s_raw, s_dir, seed=seed)
    T = parse_monad(t_raw, t_dir, seed=seed)
    if S.base != T.base:
        raise BaseMismatch("S and T are monads on different categories")
    require_typable(S, T)
    phi = NatTrans(compose_functors(S.S, T.S), compose_functors(T.S, S.S),
                   {str(k): str(v) for k, v in raw["phi"].items()})
    return DistributiveLaw(S, T, phi)


def load_dist_law(path: str, *, seed: int = 0) -> DistributiveLaw:
    return parse_dist_law(_load_json(path),
                          os.path.dirname(os.path.abspath(path)), seed=seed)


def dist_law_to_raw(dl: DistributiveLaw) -> dict:
    return {
        "S": monad_to_raw(dl.S),
        "T": monad_to_raw(dl.T),
        "phi": dict(sorted(dl.phi.components.items())),
    }


def parse_mixed_law(raw: dict, base_dir: str = ".", *, seed: int = 0) -> MixedDistributiveLaw:
    s_raw, s_dir = _resolve(raw["S"], base_dir)
    g_raw, g_dir = _resolve(raw["G"], base_dir)
    S = parse_monad(s_raw, s_dir, seed=seed)
    G = parse_comonad(g_raw, g_dir, seed=seed)
    if S.base != G.base:
        raise BaseMismatch("S and G live on different categories")
    require_typable(S, G)
    psi = NatTrans(compose_functors(S.S, G.G), compose_functors(G.G, S.S),
                   {str(k): str(v) for k, v in raw["psi"].items()})
    return MixedDistributiveLaw(S, G, psi)


def load_mixed_law(path: str, *, seed: int = 0) -> MixedDistributiveLaw:
    return parse_mixed_law(_load_json(path),
                           os.path.dirname(os.path.abspath(path)), seed=seed)


def mixed_law_to_raw(ml: MixedDistributiveLaw) -> dict:
    return {
        "S": monad_to_raw(ml.S),
        "G": comonad_to_raw(ml.G),
        "psi": dict(sorted(ml.psi.components.items())),
    }
