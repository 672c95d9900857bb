"""The inclusion-exclusion Segre class s°.

For one hypersurface X = V(F) with singularity subscheme Y (the ideal of
all first partials), s° corrects the Segre class of X by a twisted copy of
the Segre class of Y:

    s°(X) = s(X) + c(O(d))^(-1) * (s(Y)^dual tensor O(d)),   d = deg F.

The same class has a direct componentwise form,

    s°_p = s(X)_p + (-1)^p * sum_j C(p, j) d^j s(Y)_(p-j),

and both are evaluated on every call; any mismatch is an implementation
bug and raises immediately.

For an arbitrary ideal the class is defined by inclusion-exclusion over
nonempty subsets of the generators, each subset contributing the
hypersurface cut out by the product (or, in intersection mode, by the
intersection) of its members, with alternating signs.  The value does not
depend on the chosen generators; that independence is a theorem, exercised
by the test suite rather than assumed by the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .chow import ChowClass, dual, tensor_by, truncated_inverse, truncated_mul
from .errors import InputError
from .groebner import intersect_ideals
from .ideals import (
    IdealPresentation,
    partial_derivatives,
    principal_ideal,
    product_ideal,
)
from .poly import Polynomial
from .segre import GenericityContext, segre_class

SUBSET_CAP = 10

UNION_MODES = ("product", "intersection")

cross_check_stats = {"checked": 0}


@dataclass(frozen=True)
class HypersurfaceDatum:
    """A hypersurface, its degree, and its singularity subscheme."""

    equation: Polynomial
    degree: int
    singular_ideal: IdealPresentation

    @staticmethod
    def from_polynomial(f: Polynomial) -> "HypersurfaceDatum":
        if f.is_zero() or not f.is_homogeneous():
            raise InputError("hypersurface equation must be homogeneous and nonzero")
        if f.is_constant():
            raise InputError("hypersurface equation must be nonconstant")
        return HypersurfaceDatum(f, f.total_degree(), partial_derivatives(f))


def singularity_subscheme(f: Polynomial) -> IdealPresentation:
    """Ideal of all first partials of a homogeneous polynomial."""
    return partial_derivatives(f)


def hypersurface_segre(n: int, d: int) -> ChowClass:
    """s of a degree-d hypersurface in P^n: dH / (1 + dH)."""
    return truncated_mul(
        ChowClass.hyperplane(n, d), truncated_inverse(ChowClass.line_bundle(n, d))
    )


def _component_formula(s_x: ChowClass, s_y: ChowClass, d: int) -> ChowClass:
    n = s_x.ambient_dim
    out = []
    for p in range(n + 1):
        acc = sum(comb(p, j) * d**j * s_y.coeffs[p - j] for j in range(p + 1))
        out.append(s_x.coeffs[p] + (-1) ** p * acc)
    return ChowClass(n, tuple(out))


def sm_segre_hypersurface(
    f: Polynomial, ctx: GenericityContext, label: str = ""
) -> ChowClass:
    """s° of one hypersurface, evaluated along both routes and cross-checked."""
    datum = HypersurfaceDatum.from_polynomial(f)
    n = f.ring.nvars - 1
    d = datum.degree
    s_x = hypersurface_segre(n, d)
    if datum.singular_ideal.contains_unit:
        s_y = ChowClass.zero(n)
    else:
        s_y = segre_class(datum.singular_ideal, ctx, label=f"{label}|sing")
    via_classes = s_x + truncated_mul(
        truncated_inverse(ChowClass.line_bundle(n, d)), tensor_by(dual(s_y), d)
    )
    via_components = _component_formula(s_x, s_y, d)
    if via_classes != via_components:
        raise AssertionError(
            "the two evaluation routes for a hypersurface s° disagree: "
            f"{via_classes.coeffs} vs {via_components.coeffs}"
        )
    cross_check_stats["checked"] += 1
    return via_classes


def _principal_intersection(polys: list[Polynomial]) -> Polynomial:
    ideal = principal_ideal(polys[0])
    for f in polys[1:]:
        ideal = intersect_ideals(ideal, principal_ideal(f))
        if len(ideal.generators) != 1:
            raise AssertionError(
                "intersection of principal ideals did not come back principal"
            )
    return ideal.generators[0]


def sm_segre(
    ideal: IdealPresentation,
    ctx: GenericityContext,
    union_mode: str = "product",
    subset_cap: int = SUBSET_CAP,
    label: str = "",
    _cache: dict | None = None,
) -> ChowClass:
    """s° of the subscheme presented by the ideal: alternating sum of
    hypersurface values over nonempty subsets of the generators."""
    if union_mode not in UNION_MODES:
        raise InputError(f"union mode must be one of {UNION_MODES}")
    n = ideal.ambient_dim
    if ideal.contains_unit:
        return ChowClass.zero(n)
    r = len(ideal.generators)
    if r > subset_cap:
        raise InputError(
            f"{r} generators would need {2**r - 1} subsets; the cap is {subset_cap}"
        )
    cache = {} if _cache is None else _cache
    total = ChowClass.zero(n)
    for size in range(1, r + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(range(r), size):
            polys = [ideal.generators[i] for i in subset]
            if union_mode == "product":
                f = polys[0]
                for g in polys[1:]:
                    f = f * g
            else:
                f = _principal_intersection(polys)
            key = f.canonical()
            value = cache.get(key)
            if value is None:
                tag = ",".join(str(i) for i in subset)
                value = sm_segre_hypersurface(f, ctx, label=f"{label}|sub{tag}")
                cache[key] = value
            total = total + (sign * value)
    return total


def sm_segre_inclusion_exclusion(
    ideals,
    ctx: GenericityContext,
    union_mode: str = "product",
    subset_cap: int = SUBSET_CAP,
    label: str = "",
) -> ChowClass:
    """Signed subset sum over a list of subschemes: each nonempty subset
    contributes s° of the union of its members (product of their ideals, or
    their intersection in intersection mode), with alternating signs.  By
    inclusion-exclusion the total is s° of the common intersection of all
    the subschemes: two lines through a point give the point's class."""
    ideals = list(ideals)
    if not ideals:
        raise InputError("empty subscheme list")
    ring = ideals[0].ring
    for other in ideals[1:]:
        if other.ring != ring:
            raise InputError("subschemes of different spaces")
    if len(ideals) > subset_cap:
        raise InputError(
            f"{len(ideals)} subschemes would need {2**len(ideals) - 1} subsets; "
            f"the cap is {subset_cap}"
        )
    cache: dict = {}
    total = ChowClass.zero(ideals[0].ambient_dim)
    for size in range(1, len(ideals) + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(range(len(ideals)), size):
            chosen = [ideals[i] for i in subset]
            if union_mode == "product":
                union = product_ideal(*chosen)
            else:
                union = chosen[0]
                for other in chosen[1:]:
                    union = intersect_ideals(union, other)
            tag = ",".join(str(i) for i in subset)
            part = sm_segre(
                union,
                ctx,
                union_mode=union_mode,
                subset_cap=subset_cap,
                label=f"{label}|union{tag}",
                _cache=cache,
            )
            total = total + (sign * part)
    return total
