"""CSM, Fulton and Milnor classes, and the Euler characteristic.

Everything is a cap with the total Chern class of the tangent bundle of the
ambient projective space:

    csm    = c(TP^n) * s°          fulton = c(TP^n) * s
    milnor = c(TP^n) * (s° - s)  = csm - fulton

The degree of the csm class is the topological Euler characteristic of the
subscheme's support.  The Milnor class convention here carries no extra
sign: for a nodal plane curve its degree is the number of nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chow import ChowClass, chern_tangent, integral, truncated_mul
from .ideals import IdealPresentation
from .segre import GenericityContext, segre_class
from .sm_segre import SUBSET_CAP, sm_segre


@dataclass(frozen=True)
class ClassReport:
    """Everything the engine can say about one subscheme, computed from a
    single Segre and a single s° run."""

    ambient_dim: int
    variables: tuple[str, ...]
    segre: ChowClass
    sm_segre: ChowClass
    csm: ChowClass
    fulton: ChowClass
    milnor_measure: ChowClass
    milnor: ChowClass
    euler: int
    context: GenericityContext
    union_mode: str


def csm(
    ideal: IdealPresentation,
    ctx: GenericityContext,
    union_mode: str = "product",
    subset_cap: int = SUBSET_CAP,
) -> ChowClass:
    n = ideal.ambient_dim
    s_circ = sm_segre(ideal, ctx, union_mode=union_mode, subset_cap=subset_cap)
    return truncated_mul(chern_tangent(n), s_circ)


def fulton(ideal: IdealPresentation, ctx: GenericityContext) -> ChowClass:
    n = ideal.ambient_dim
    return truncated_mul(chern_tangent(n), segre_class(ideal, ctx))


def milnor_measure(
    ideal: IdealPresentation,
    ctx: GenericityContext,
    union_mode: str = "product",
    subset_cap: int = SUBSET_CAP,
) -> ChowClass:
    """s° - s: vanishes exactly when the correction terms do (smooth or
    empty input), and localizes on the singular locus."""
    s_circ = sm_segre(ideal, ctx, union_mode=union_mode, subset_cap=subset_cap)
    return s_circ - segre_class(ideal, ctx)


def milnor(
    ideal: IdealPresentation,
    ctx: GenericityContext,
    union_mode: str = "product",
    subset_cap: int = SUBSET_CAP,
) -> ChowClass:
    n = ideal.ambient_dim
    measure = milnor_measure(ideal, ctx, union_mode=union_mode, subset_cap=subset_cap)
    return truncated_mul(chern_tangent(n), measure)


def euler(
    ideal: IdealPresentation,
    ctx: GenericityContext,
    union_mode: str = "product",
    subset_cap: int = SUBSET_CAP,
) -> int:
    return integral(csm(ideal, ctx, union_mode=union_mode, subset_cap=subset_cap))


def compute_report(
    ideal: IdealPresentation,
    ctx: GenericityContext,
    union_mode: str = "product",
    subset_cap: int = SUBSET_CAP,
) -> ClassReport:
    n = ideal.ambient_dim
    c_tangent = chern_tangent(n)
    s = segre_class(ideal, ctx)
    s_circ = sm_segre(ideal, ctx, union_mode=union_mode, subset_cap=subset_cap)
    csm_class = truncated_mul(c_tangent, s_circ)
    fulton_class = truncated_mul(c_tangent, s)
    measure = s_circ - s
    milnor_class = truncated_mul(c_tangent, measure)
    if milnor_class != csm_class - fulton_class:
        raise AssertionError("milnor class failed to match csm - fulton")
    return ClassReport(
        ambient_dim=n,
        variables=ideal.variables,
        segre=s,
        sm_segre=s_circ,
        csm=csm_class,
        fulton=fulton_class,
        milnor_measure=measure,
        milnor=milnor_class,
        euler=integral(csm_class),
        context=ctx,
        union_mode=union_mode,
    )
