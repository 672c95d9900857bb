"""Segre classes of projective subschemes via projective degrees.

For a scheme cut out by degree-d elements spanning the ideal, the i-th
projective degree g_i is the number of points, counted over GF(p), of a
system made of i random degree-d combinations, n-i random hyperplane cuts,
a random affine chart, and a Rabinowitsch variable excising the base locus.
The g_i assemble into the Segre class through a twist by O(d):

    s = 1 - (1 + dH)^(-1) * (sum g_i H^i) tensor O(d).

Every random draw comes from a hash-derived stream, so identical inputs,
seeds, and labels replay identical computations.  Each degree is sampled in
independent trials that must agree exactly; disagreement or repeated
degenerate draws surface as GenericityError rather than a wrong answer.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

import numpy as np

from .chow import ChowClass, tensor_by, truncated_inverse, truncated_mul
from .errors import GenericityError, InputError, NotZeroDimensionalError
from .groebner import DEFAULT_PAIR_BUDGET, groebner_basis, quotient_dimension_count
from .ideals import IdealPresentation, graded_piece
from .poly import Polynomial, PolyRing


def is_probable_prime(m: int) -> bool:
    """Deterministic Miller-Rabin for anything that fits the use case."""
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class GenericityContext:
    """Knobs for every randomized computation: the working prime, the master
    seed, how many independent trials must agree, how many redraws a
    degenerate configuration gets, and the Groebner pair budget."""

    prime: int = 32003
    seed: int = 0
    trials: int = 3
    retries: int = 5
    budget: int = DEFAULT_PAIR_BUDGET

    def __post_init__(self):
        if not is_probable_prime(self.prime):
            raise InputError(f"{self.prime} is not prime")
        if self.trials < 1:
            raise InputError("need at least one trial")
        if self.retries < 1:
            raise InputError("need at least one attempt per trial")
        if self.budget < 1:
            raise InputError("pair budget must be positive")


@dataclass(frozen=True)
class ProjectiveDegrees:
    """Point counts g_0..g_n at the spanning degree used to produce them."""

    degrees: tuple[int, ...]
    spanning_degree: int

    def __post_init__(self):
        g = self.degrees
        d = self.spanning_degree
        if not g or g[0] != 1:
            raise ValueError("projective degree sequence must start with 1")
        for i, v in enumerate(g):
            if v < 0 or v > d**i:
                raise ValueError(f"degree {v} at index {i} violates 0 <= g_i <= d^i")


class _DegenerateDraw(Exception):
    """Random choices produced a degenerate configuration; redraw."""


def _derived_rng(seed: int, label: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}|{label}".encode()).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


def _solve_affine(mat: np.ndarray, p: int):
    """Row reduce an augmented system over GF(p).  Returns (pivot columns,
    reduced matrix), or None when the rows are dependent."""
    m, cols = mat.shape
    r = 0
    pivots = []
    for col in range(cols - 1):
        piv = None
        for row in range(r, m):
            if mat[row, col]:
                piv = row
                break
        if piv is None:
            continue
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        inv = pow(int(mat[r, col]), -1, p)
        mat[r] = mat[r] * inv % p
        for row in range(m):
            if row != r and mat[row, col]:
                mat[row] = (mat[row] - mat[row, col] * mat[r]) % p
        pivots.append(col)
        r += 1
        if r == m:
            break
    if r < m:
        return None
    return pivots, mat


def _count_once(
    spans: list[Polynomial], n: int, i: int, rng: random.Random, ctx: GenericityContext
) -> int:
    """One draw of the i-th projective degree: random combinations and cuts,
    substitution onto the cut-out affine i-plane, Rabinowitsch excision of
    the base locus, then a staircase count."""
    p = ctx.prime
    k = n + 1
    ambient = spans[0].ring
    combos = []
    for _ in range(i + 1):
        combo = ambient.zero()
        for s in spans:
            c = rng.randrange(p)
            if c:
                combo = combo + s * c
        if combo.is_zero():
            raise _DegenerateDraw
        combos.append(combo)

    # n-i hyperplanes through the origin of the cone, one affine chart = 1
    m = n - i + 1
    mat = np.zeros((m, k + 1), dtype=np.int64)
    for row in range(m):
        for col in range(k):
            mat[row, col] = rng.randrange(p)
    mat[m - 1, k] = 1
    solved = _solve_affine(mat, p)
    if solved is None:
        raise _DegenerateDraw
    pivots, red = solved
    free = [c for c in range(k) if c not in pivots]

    names = tuple(f"u{j + 1}" for j in range(i)) + ("T",)
    target = PolyRing(names, prime=p)
    zero_exp = (0,) * (i + 1)
    pivot_row = {c: r for r, c in enumerate(pivots)}
    images = []
    for c in range(k):
        if c in pivot_row:
            r = pivot_row[c]
            terms = {zero_exp: int(red[r, k])}
            for idx, fc in enumerate(free):
                coeff = int(red[r, fc])
                if coeff:
                    e = [0] * (i + 1)
                    e[idx] = 1
                    terms[tuple(e)] = p - coeff
            images.append(target.from_exponent_dict(terms))
        else:
            images.append(target.gen(free.index(c)))

    system = [combos[j].substitute(images) for j in range(1, i + 1)]
    q0 = combos[0].substitute(images)
    rab = target.one() - target.gen(i) * q0
    system.append(rab)
    gb = groebner_basis(system, budget=ctx.budget)
    return quotient_dimension_count(gb)


def projective_degrees(
    ideal: IdealPresentation,
    ctx: GenericityContext,
    label: str = "",
    spanning_degree: int | None = None,
) -> ProjectiveDegrees:
    if ideal.contains_unit:
        raise InputError("the empty scheme has no projective degrees")
    n = ideal.ambient_dim
    d = ideal.max_degree if spanning_degree is None else spanning_degree
    if d < ideal.max_degree:
        raise InputError(
            f"spanning degree {d} is below the top generator degree {ideal.max_degree}"
        )
    if ctx.prime <= d + 1:
        raise InputError(f"prime {ctx.prime} is too small for degree {d + 1} systems")
    ambient = PolyRing(ideal.variables, prime=ctx.prime)
    spans = [ambient.convert(f.primitive_integer_form()) for f in graded_piece(ideal, d)]

    counts = []
    for i in range(n + 1):
        agreed = []
        for trial in range(ctx.trials):
            value = None
            for attempt in range(ctx.retries):
                rng = _derived_rng(
                    ctx.seed, f"{label}|deg{d}|i{i}|trial{trial}|try{attempt}"
                )
                try:
                    v = _count_once(spans, n, i, rng, ctx)
                except (_DegenerateDraw, NotZeroDimensionalError):
                    continue
                if i == 0 and v != 1:
                    continue
                value = v
                break
            if value is None:
                raise GenericityError(
                    f"no usable draw for projective degree {i} after "
                    f"{ctx.retries} attempts (label {label!r}); rerun with a "
                    f"different seed or more retries"
                )
            agreed.append(value)
        if len(set(agreed)) != 1:
            raise GenericityError(
                f"independent trials disagree on projective degree {i}: "
                f"{agreed} (label {label!r}); rerun with a different seed or "
                f"a larger prime"
            )
        v = agreed[0]
        if v > d**i:
            raise GenericityError(
                f"projective degree {i} came out {v}, above its bound {d**i}"
            )
        counts.append(v)
    return ProjectiveDegrees(tuple(counts), d)


def segre_class(
    ideal: IdealPresentation,
    ctx: GenericityContext,
    label: str = "",
    spanning_degree: int | None = None,
) -> ChowClass:
    """Segre class of the subscheme presented by the ideal, pushed to the
    ambient projective space and written in powers of the hyperplane class."""
    n = ideal.ambient_dim
    if ideal.contains_unit:
        return ChowClass.zero(n)
    pd = projective_degrees(ideal, ctx, label=label, spanning_degree=spanning_degree)
    d = pd.spanning_degree
    shadow = tensor_by(ChowClass(n, pd.degrees), d)
    s = ChowClass.unit(n) - truncated_mul(
        truncated_inverse(ChowClass.line_bundle(n, d)), shadow
    )
    assert s.coeffs[0] == 0
    return s
