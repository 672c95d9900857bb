"""Sparse multivariate polynomials with order-encoded packed exponents.

A monomial is stored as a single integer key chosen so that

  * integer comparison of keys agrees with the monomial order, and
  * key(m1 * m2) = key(m1) + key(m2).

For degree-reverse-lexicographic order on k variables the key is

  deg * B^(k-1) - (e_2 + e_3*B + ... + e_k*B^(k-2)),   B = 2^16,

which is monotone for grevlex and additive as long as every exponent stays
below B.  An elimination order on the first m variables prepends the grevlex
key of the leading block scaled past the key range of the tail block.  Both
properties together make multiplication by a monomial a single integer
addition and leading-term lookup a max() over dict keys, which is what the
basis computation spends its time on.

Coefficients live in GF(p) (ints reduced mod p) or in QQ (Fraction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

FIELD_BITS = 16
FIELD = 1 << FIELD_BITS  # per-variable exponent bound


@dataclass(frozen=True)
class Monomial:
    """Exponent vector view of a packed key, for callers that want to look."""

    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __str__(self) -> str:
        return "*".join(f"e{i}^{e}" for i, e in enumerate(self.exponents) if e) or "1"


def _grev_pack(exps, k: int) -> int:
    # grevlex key for a block of k exponents
    deg = 0
    packrev = 0
    for j in range(k):
        e = exps[j]
        deg += e
        if j:
            packrev += e << (FIELD_BITS * (j - 1))
    return deg * (1 << (FIELD_BITS * (k - 1))) - packrev


def _grev_unpack(key: int, k: int) -> tuple[int, ...]:
    shift = FIELD_BITS * (k - 1)
    deg = -((-key) >> shift) if shift else key  # ceil(key / 2^shift)
    packrev = (deg << shift) - key
    exps = [0] * k
    rest = deg
    for j in range(1, k):
        e = packrev & (FIELD - 1)
        packrev >>= FIELD_BITS
        exps[j] = e
        rest -= e
    exps[0] = rest
    return tuple(exps)


class PolyRing:
    """Polynomial ring over GF(p) or QQ with a fixed monomial order.

    elim = m > 0 selects the block order eliminating the first m variables
    (grevlex within each block); elim = 0 is plain grevlex.
    """

    def __init__(self, variables, prime: int | None = None, elim: int = 0):
        variables = tuple(variables)
        if not variables:
            raise ValueError("ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        if not 0 <= elim < len(variables):
            raise ValueError("elimination block must leave at least one variable")
        self.variables = variables
        self.prime = prime
        self.elim = elim
        self.nvars = len(variables)
        k = self.nvars
        m = elim
        self._tail_shift = 1 << (FIELD_BITS * (k - m)) if m else 0
        # additive key weight of each variable
        self.var_keys = tuple(
            self.pack(tuple(1 if i == j else 0 for i in range(k))) for j in range(k)
        )

    def pack(self, exps) -> int:
        m = self.elim
        if not m:
            return _grev_pack(exps, self.nvars)
        head = _grev_pack(exps[:m], m)
        tail = _grev_pack(exps[m:], self.nvars - m)
        return head * self._tail_shift + tail

    def unpack(self, key: int) -> tuple[int, ...]:
        m = self.elim
        if not m:
            return _grev_unpack(key, self.nvars)
        head, tail = divmod(key, self._tail_shift)
        return _grev_unpack(head, m) + _grev_unpack(tail, self.nvars - m)

    def key_degree(self, key: int) -> int:
        return sum(self.unpack(key))

    def coeff(self, c):
        if self.prime is not None:
            if isinstance(c, Fraction):
                if c.denominator == 1:
                    return c.numerator % self.prime
                return c.numerator * pow(c.denominator, -1, self.prime) % self.prime
            return c % self.prime
        if isinstance(c, Fraction):
            return c
        return Fraction(c)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.coeff(c)
        return Polynomial(self, {0: c} if c else {})

    def gen(self, i: int) -> "Polynomial":
        return Polynomial(self, {self.var_keys[i]: self.coeff(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def from_exponent_dict(self, d) -> "Polynomial":
        out: dict[int, object] = {}
        for exps, c in d.items():
            c = self.coeff(c)
            if not c:
                continue
            key = self.pack(tuple(exps))
            prev = out.get(key)
            if prev is None:
                out[key] = c
            else:
                s = prev + c
                if self.prime is not None:
                    s %= self.prime
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial(self, out)

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Bring a polynomial from a ring with the same variables (possibly
        different order or coefficient field) into this ring."""
        if f.ring is self:
            return f
        if f.ring.variables != self.variables:
            raise ValueError("variable mismatch")
        return self.from_exponent_dict(
            {f.ring.unpack(k): c for k, c in f.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.prime == other.prime
            and self.elim == other.elim
        )

    def __hash__(self):
        return hash((self.variables, self.prime, self.elim))

    def __repr__(self):
        field = f"GF({self.prime})" if self.prime is not None else "QQ"
        order = f"elim{self.elim}" if self.elim else "grevlex"
        return f"PolyRing({field}[{', '.join(self.variables)}], {order})"


class Polynomial:
    """Immutable-by-convention sparse polynomial: dict of packed key -> coeff."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        kd = self.ring.key_degree
        return max(kd(k) for k in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        kd = self.ring.key_degree
        degs = {kd(k) for k in self.terms}
        return len(degs) == 1

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def leading_key(self) -> int:
        return max(self.terms)

    def leading_coeff(self):
        return self.terms[max(self.terms)]

    def leading_monomial(self) -> Monomial:
        return Monomial(self.ring.unpack(max(self.terms)))

    def constant_coeff(self):
        return self.terms.get(0, self.ring.coeff(0))

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + self.ring.const(other)
        self._check(other)
        p = self.ring.prime
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if p is not None:
                s %= p
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial(self.ring, out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        p = self.ring.prime
        if p is not None:
            return Polynomial(self.ring, {k: (-c) % p for k, c in self.terms.items()})
        return Polynomial(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return self - self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.coeff(other)
            if not c:
                return self.ring.zero()
            p = self.ring.prime
            if p is not None:
                return Polynomial(
                    self.ring, {k: v * c % p for k, v in self.terms.items()}
                )
            return Polynomial(self.ring, {k: v * c for k, v in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        p = self.ring.prime
        out: dict[int, object] = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                s = out.get(k, 0) + ca * cb
                if p is not None:
                    s %= p
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return not self.terms
            return self == self.ring.const(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def derivative(self, i: int) -> "Polynomial":
        ring = self.ring
        w = ring.var_keys[i]
        p = ring.prime
        out: dict[int, object] = {}
        for k, c in self.terms.items():
            e = ring.unpack(k)[i]
            if not e:
                continue
            nc = c * e
            if p is not None:
                nc %= p
            if nc:
                out[k - w] = nc
        return Polynomial(ring, out)

    def substitute(self, images: list["Polynomial"]) -> "Polynomial":
        """Evaluate at x_i -> images[i]; images live in a common target ring."""
        target = images[0].ring
        ring = self.ring
        powers: list[dict[int, Polynomial]] = [dict() for _ in range(ring.nvars)]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            got = cache.get(e)
            if got is None:
                got = images[i] ** e
                cache[e] = got
            return got

        total = target.zero()
        for k, c in self.terms.items():
            exps = ring.unpack(k)
            term = target.const(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def primitive_integer_form(self) -> "Polynomial":
        """Scale a rational polynomial to integer coefficients with content 1
        and positive leading coefficient.  Canonical up to nothing: scalar
        multiples all map to the same output."""
        if self.ring.prime is not None:
            raise ValueError("already over a finite field")
        if not self.terms:
            return self
        denom = 1
        for c in self.terms.values():
            denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = {k: c.numerator * (denom // c.denominator) for k, c in self.terms.items()}
        content = 0
        for v in ints.values():
            content = gcd(content, v)
        if ints[max(ints)] < 0:
            content = -content
        return Polynomial(
            self.ring, {k: Fraction(v // content) for k, v in ints.items()}
        )

    def canonical(self) -> tuple:
        """Hashable identity token; scalar multiples over QQ collapse."""
        f = self.primitive_integer_form() if self.ring.prime is None else self
        return (f.ring.variables, f.ring.prime, tuple(sorted(f.terms.items())))

    def iter_terms(self):
        """Yield (Monomial, coeff) in descending order."""
        for k in sorted(self.terms, reverse=True):
            yield Monomial(self.ring.unpack(k)), self.terms[k]

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        parts = []
        for mono, c in self.iter_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, mono.exponents)
                if e
            ]
            body = "*".join(factors)
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        s = parts[0]
        for part in parts[1:]:
            s += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return s

    def __repr__(self):
        return f"<{self}>"
