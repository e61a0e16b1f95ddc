"""Spans ``X <- M -> Y`` of simplicial groupoids, their composition, and the 2-Segal span conditions."""

from __future__ import annotations

from dataclasses import dataclass

from .fin_groupoid import constant_functor, terminal
from .segal_checks import (
    CheckReport,
    is_1_segal,
    is_2_segal,
    is_active_equifibered,
    is_relative_2_segal_family,
    is_relative_2_segal_morphism,
    is_relative_segal,
)
from .simplicial_objects import (
    SIMPLEX,
    PullbackSimplicial,
    SimplicialMorphism,
    TruncatedSimplicialGroupoid,
    compose_morphisms,
    identity_morphism,
)
from .waldhausen import ConstantSimplicial


@dataclass
class SimplicialSpan:
    left: SimplicialMorphism
    right: SimplicialMorphism
    name: str = ""

    def __post_init__(self) -> None:
        if self.left.source is not self.right.source:
            raise ValueError("span legs must share their apex")

    @property
    def apex(self) -> TruncatedSimplicialGroupoid:
        return self.left.source

    @property
    def X(self) -> TruncatedSimplicialGroupoid:
        return self.left.target

    @property
    def Y(self) -> TruncatedSimplicialGroupoid:
        return self.right.target

    @property
    def N(self) -> int:
        return min(self.left.N, self.right.N)


def identity_span(X: TruncatedSimplicialGroupoid) -> SimplicialSpan:
    i = identity_morphism(X)
    return SimplicialSpan(i, i, f"id({X.name})")


def terminal_simplicial(N: int) -> ConstantSimplicial:
    return ConstantSimplicial(terminal(), N, "*")


def to_terminal(X: TruncatedSimplicialGroupoid, T: ConstantSimplicial) -> SimplicialMorphism:
    G = T.G
    pt = G.objects()[0]
    return SimplicialMorphism(X, T, lambda k: constant_functor(X.level(k), G, pt), "!")


def compose_spans(a: SimplicialSpan, b: SimplicialSpan) -> SimplicialSpan:
    """``X <- M x_Y M' -> Z`` with the iso-comma pullback as apex."""
    if a.Y is not b.X:
        raise ValueError(f"spans do not compose: {a.Y.name} vs {b.X.name}")
    P = PullbackSimplicial(a.right, b.left)
    return SimplicialSpan(
        compose_morphisms(a.left, P.first()),
        compose_morphisms(b.right, P.second()),
        f"({a.name};{b.name})",
    )


def _segal_report(X: TruncatedSimplicialGroupoid, N: int) -> CheckReport:
    if X.shape.kind == SIMPLEX:
        return is_2_segal(X, N)
    return is_relative_2_segal_family(X, N)


def is_2_segal_span(sp: SimplicialSpan, N: int) -> CheckReport:
    """Feet and apex 2-Segal (or relative 2-Segal by shape), left leg active equifibered, right leg relative Segal."""
    rep = CheckReport(f"2-Segal span {sp.name}")
    for tag, r in (
        ("source", _segal_report(sp.X, N)),
        ("apex", _segal_report(sp.apex, N)),
        ("target", _segal_report(sp.Y, N)),
        ("left leg", is_active_equifibered(sp.left, N)),
        ("right leg", is_relative_segal(sp.right, N)),
    ):
        r.name = f"{tag} {r.name}"
        rep.merge(r)
    return rep


@dataclass
class RelativeResults:
    composite: SimplicialMorphism
    pullback: SimplicialMorphism
    pullback_object: PullbackSimplicial


def rel2seg_compose_and_pullback(p: SimplicialMorphism, f: SimplicialMorphism, g: SimplicialMorphism) -> RelativeResults:
    """For ``p : Y -> X``, ``f : X -> Z`` and ``g : W -> X``: the composite ``f p`` and ``Y x_X W -> W``."""
    if f.source is not p.target or g.target is not p.target:
        raise ValueError("f must start and g must end at the target of p")
    P = PullbackSimplicial(p, g)
    return RelativeResults(compose_morphisms(f, p), P.second(), P)


def check_rel2seg_outputs(res: RelativeResults, N: int, target_N: int | None = None) -> tuple[CheckReport, CheckReport]:
    return (
        is_relative_2_segal_morphism(res.composite, N, target_N),
        is_relative_2_segal_morphism(res.pullback, N, target_N),
    )


def right_leg_to_terminal_matches_1_segal(X: TruncatedSimplicialGroupoid, N: int) -> tuple[bool, bool]:
    """``X -> *`` relative Segal versus ``X`` 1-Segal."""
    T = terminal_simplicial(X.N)
    return is_relative_segal(to_terminal(X, T), N).passed, is_1_segal(X, N).passed
