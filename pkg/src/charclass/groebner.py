"""Buchberger's algorithm with Gebauer-Moeller pair elimination.

The engine serves two masters: bulk solution counting over GF(p), where the
same shapes of zero-dimensional systems are solved thousands of times and
speed matters, and occasional exact computations over QQ (ideal
intersection by elimination).  Both share the pair bookkeeping; only the
coefficient arithmetic differs.

All bases returned are reduced: minimal, monic, every tail irreducible.
Work is metered by the number of S-pairs actually reduced; exceeding the
budget raises instead of spinning.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush

import numpy as np

from .errors import BudgetExceededError, InputError, NotZeroDimensionalError
from .ideals import IdealPresentation
from .poly import Polynomial, PolyRing

DEFAULT_PAIR_BUDGET = 100_000

_STAIRCASE_CELL_CAP = 100_000_000


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, or the block order eliminating the first `block` variables."""

    kind: str = "grevlex"
    block: int = 0

    def apply_to(self, ring: PolyRing) -> PolyRing:
        elim = self.block if self.kind == "elim" else 0
        if self.kind not in ("grevlex", "elim"):
            raise InputError(f"unknown order {self.kind!r}")
        if ring.elim == elim:
            return ring
        return PolyRing(ring.variables, ring.prime, elim)


class _ReducerSet:
    """Parallel arrays over the current basis, tuned for the reduction loop.

    tails store (key_delta, coeff): adding the delta to the term being
    cancelled lands on the right product monomial, so no packing happens
    inside the loop.
    """

    __slots__ = ("prime", "unpack", "lmkeys", "lmexps", "lmdegs", "tails")

    def __init__(self, ring: PolyRing):
        self.prime = ring.prime
        self.unpack = ring.unpack
        self.lmkeys: list[int] = []
        self.lmexps: list[tuple[int, ...]] = []
        self.lmdegs: list[int] = []
        self.tails: list[list[tuple[int, object]]] = []

    def __len__(self):
        return len(self.lmkeys)

    def add(self, monic: dict):
        lm = max(monic)
        exps = self.unpack(lm)
        self.lmkeys.append(lm)
        self.lmexps.append(exps)
        self.lmdegs.append(sum(exps))
        self.tails.append([(k - lm, c) for k, c in monic.items() if k != lm])

    def reduce_full(self, f: dict) -> dict:
        if self.prime is not None:
            return self._reduce_modp(f)
        return self._reduce_q(f)

    def _reduce_modp(self, f: dict) -> dict:
        p = self.prime
        unpack = self.unpack
        lmexps = self.lmexps
        lmdegs = self.lmdegs
        tails = self.tails
        nred = len(self.lmkeys)
        work = dict(f)
        out: dict[int, int] = {}
        heap = [-k for k in work]
        heapify(heap)
        while heap:
            k = -heappop(heap)
            c = work.pop(k, 0)
            if not c:
                continue
            ke = unpack(k)
            kd = sum(ke)
            hit = -1
            for i in range(nred):
                if lmdegs[i] <= kd:
                    for a, b in zip(lmexps[i], ke):
                        if a > b:
                            break
                    else:
                        hit = i
                        break
            if hit < 0:
                out[k] = c
                continue
            for delta, tc in tails[hit]:
                nk = k + delta
                nc = (work.get(nk, 0) - c * tc) % p
                if nc:
                    if nk not in work:
                        heappush(heap, -nk)
                    work[nk] = nc
                elif nk in work:
                    del work[nk]
        return out

    def _reduce_q(self, f: dict) -> dict:
        unpack = self.unpack
        lmexps = self.lmexps
        lmdegs = self.lmdegs
        tails = self.tails
        nred = len(self.lmkeys)
        work = dict(f)
        out: dict[int, object] = {}
        heap = [-k for k in work]
        heapify(heap)
        while heap:
            k = -heappop(heap)
            c = work.pop(k, None)
            if not c:
                continue
            ke = unpack(k)
            kd = sum(ke)
            hit = -1
            for i in range(nred):
                if lmdegs[i] <= kd:
                    for a, b in zip(lmexps[i], ke):
                        if a > b:
                            break
                    else:
                        hit = i
                        break
            if hit < 0:
                out[k] = c
                continue
            for delta, tc in tails[hit]:
                nk = k + delta
                nc = work.get(nk, 0) - c * tc
                if nc:
                    if nk not in work:
                        heappush(heap, -nk)
                    work[nk] = nc
                elif nk in work:
                    del work[nk]
        return out


def _monic(d: dict, p: int | None) -> dict:
    lc = d[max(d)]
    if p is not None:
        if lc == 1:
            return d
        inv = pow(lc, -1, p)
        return {k: c * inv % p for k, c in d.items()}
    if lc == 1:
        return d
    return {k: c / lc for k, c in d.items()}


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, minimal, tails fully reduced.
    Elements are sorted by ascending leading monomial."""

    ring: PolyRing
    polys: tuple[Polynomial, ...]
    order: MonomialOrder
    pairs_processed: int = 0

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [self.ring.unpack(g.leading_key()) for g in self.polys]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_unit_ideal(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant() and bool(self.polys[0])

    def quotient_dimension_count(self) -> int:
        return quotient_dimension_count(self)


def _lcm_exps(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _coprime(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def groebner_basis(
    polys,
    order: MonomialOrder | None = None,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> GroebnerBasis:
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        raise InputError("no nonzero generators")
    ring = polys[0].ring
    for f in polys[1:]:
        if f.ring != ring:
            raise InputError("generators from different rings")
    if order is None:
        order = MonomialOrder("elim", ring.elim) if ring.elim else MonomialOrder()
    ring = order.apply_to(ring)
    polys = [ring.convert(f) for f in polys]
    p = ring.prime

    basis: list[dict] = []  # monic term dicts
    lmexps: list[tuple] = []
    reducers = _ReducerSet(ring)
    pairs: list[tuple[int, int, int, tuple]] = []  # (lcmkey, i, j, lcmexps)
    processed = 0

    def attach(h: dict):
        """Gebauer-Moeller update: fold element h into basis and pair set.

        New pairs (i, t) survive when coprimality shields them or when no
        other pending/kept pair's lcm divides theirs; coprime survivors are
        then discarded (their S-polynomials reduce to zero anyway) but do
        their share of dominating first.  Old pairs die under the chain
        criterion unless one of their halves reproduces the same lcm with h.
        """
        nonlocal pairs
        t = len(basis)
        he = ring.unpack(max(h))
        lcms = [_lcm_exps(e, he) for e in lmexps]
        kept: list[int] = []
        for i in range(t):
            li = lcms[i]
            if not _coprime(lmexps[i], he):
                dominated = any(_divides(lcms[j], li) for j in range(i + 1, t))
                if not dominated:
                    dominated = any(_divides(lcms[j], li) for j in kept)
                if dominated:
                    continue
            kept.append(i)
        new_pairs = [
            (ring.pack(lcms[i]), i, t, lcms[i])
            for i in kept
            if not _coprime(lmexps[i], he)
        ]
        survivors = []
        for key, i, j, lij in pairs:
            if (
                not _divides(he, lij)
                or _lcm_exps(lmexps[i], he) == lij
                or _lcm_exps(lmexps[j], he) == lij
            ):
                survivors.append((key, i, j, lij))
        survivors.extend(new_pairs)
        heapify(survivors)
        pairs = survivors
        basis.append(h)
        lmexps.append(he)
        reducers.add(h)

    def unit_basis() -> GroebnerBasis:
        return GroebnerBasis(ring, (ring.one(),), order, processed)

    for f in sorted(polys, key=lambda f: f.leading_key()):
        h = reducers.reduce_full(f.terms)
        if h:
            if max(h) == 0:
                return unit_basis()
            attach(_monic(h, p))

    while pairs:
        if processed >= budget:
            raise BudgetExceededError(
                f"pair budget {budget} exhausted: {processed} pairs reduced, "
                f"{len(pairs)} pending, basis size {len(basis)}"
            )
        lcmkey, i, j, lij = heappop(pairs)
        processed += 1
        fi, fj = basis[i], basis[j]
        si = lcmkey - max(fi)
        sj = lcmkey - max(fj)
        s: dict = {}
        for k, c in fi.items():
            s[k + si] = c
        for k, c in fj.items():
            nk = k + sj
            nc = s.get(nk, 0) - c
            if p is not None:
                nc %= p
            if nc:
                s[nk] = nc
            else:
                s.pop(nk, None)
        if not s:
            continue
        h = reducers.reduce_full(s)
        if h:
            if max(h) == 0:
                return unit_basis()
            attach(_monic(h, p))

    # minimal basis: drop anything whose leading monomial another divides
    order_idx = sorted(range(len(basis)), key=lambda i: max(basis[i]))
    minimal: list[int] = []
    for i in order_idx:
        if not any(_divides(lmexps[j], lmexps[i]) for j in minimal):
            minimal.append(i)

    # interreduce tails for the unique reduced basis
    final: list[dict] = [basis[i] for i in minimal]
    reduced: list[dict] = []
    for i in range(len(final)):
        others = _ReducerSet(ring)
        for j in range(len(final)):
            if j != i:
                others.add(reduced[j] if j < len(reduced) else final[j])
        h = others.reduce_full(final[i])
        reduced.append(_monic(h, p))

    out = tuple(
        Polynomial(ring, d) for d in sorted(reduced, key=lambda d: max(d))
    )
    return GroebnerBasis(ring, out, order, processed)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if f.ring != gb.ring:
        f = gb.ring.convert(f)
    reducers = _ReducerSet(gb.ring)
    for g in gb.polys:
        reducers.add(g.terms)
    return Polynomial(gb.ring, reducers.reduce_full(f.terms))


def quotient_dimension_count(gb: GroebnerBasis) -> int:
    """Number of standard monomials of a zero-dimensional ideal, counted on
    a boolean staircase grid.  Exact; raises if some axis is unbounded."""
    if not gb.polys:
        raise NotZeroDimensionalError("zero ideal")
    lms = gb.leading_exponents()
    k = gb.ring.nvars
    if any(sum(e) == 0 for e in lms):
        return 0
    bounds = [0] * k
    for e in lms:
        nz = [i for i, v in enumerate(e) if v]
        if len(nz) == 1:
            i = nz[0]
            if not bounds[i] or e[i] < bounds[i]:
                bounds[i] = e[i]
    if not all(bounds):
        missing = [gb.ring.variables[i] for i, b in enumerate(bounds) if not b]
        raise NotZeroDimensionalError(
            f"no pure power of {', '.join(missing)} among leading monomials"
        )
    cells = 1
    for b in bounds:
        cells *= b
    if cells > _STAIRCASE_CELL_CAP:
        raise BudgetExceededError(f"staircase box of {cells} cells is too large")
    grid = np.ones(bounds, dtype=bool)
    for e in lms:
        if all(v < b for v, b in zip(e, bounds)):
            grid[tuple(slice(v, None) for v in e)] = False
    return int(grid.sum())


def intersect_ideals(
    a: IdealPresentation,
    b: IdealPresentation,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> IdealPresentation:
    """Exact intersection over QQ by block elimination of an auxiliary
    variable t from t*a + (1-t)*b."""
    if a.ring != b.ring:
        raise InputError("intersection of ideals from different rings")
    base = a.ring
    tname = "t"
    while tname in base.variables:
        tname += "_"
    ering = PolyRing((tname,) + base.variables, None, elim=1)

    def lift(f: Polynomial) -> Polynomial:
        return ering.from_exponent_dict(
            {(0,) + f.ring.unpack(k): c for k, c in f.terms.items()}
        )

    t = ering.gen(0)
    gens = [t * lift(f) for f in a.generators]
    gens += [(ering.one() - t) * lift(g) for g in b.generators]
    gb = groebner_basis(gens, order=MonomialOrder("elim", 1), budget=budget)

    seen = set()
    keep = []
    for g in gb.polys:
        if ering.unpack(g.leading_key())[0] != 0:
            continue
        by_deg: dict[int, dict] = {}
        for k, c in g.terms.items():
            exps = ering.unpack(k)[1:]
            by_deg.setdefault(sum(exps), {})[exps] = c
        for d in sorted(by_deg):
            comp = base.from_exponent_dict(by_deg[d]).primitive_integer_form()
            ckey = comp.canonical()
            if ckey not in seen:
                seen.add(ckey)
                keep.append(comp)
    if not keep:
        raise InputError("intersection came out zero; inputs were not both nonzero")
    return IdealPresentation(base, tuple(keep))
