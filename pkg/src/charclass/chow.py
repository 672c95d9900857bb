"""Integer Chow classes of projective space: ZZ[H] / (H^(n+1)).

A class is a coefficient tuple indexed by codimension, c = sum c_p H^p.
Everything here is exact integer arithmetic; no polynomial rings involved.
The two display conventions, powers of the hyperplane class and dimension
brackets sum c_p [P^(n-p)], render the same tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class ChowClass:
    ambient_dim: int
    coeffs: tuple[int, ...]  # index = codimension, length ambient_dim + 1

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ValueError("negative ambient dimension")
        if len(self.coeffs) != self.ambient_dim + 1:
            raise ValueError("coefficient tuple has the wrong length")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError("coefficients must be integers")

    @staticmethod
    def zero(n: int) -> "ChowClass":
        return ChowClass(n, (0,) * (n + 1))

    @staticmethod
    def unit(n: int) -> "ChowClass":
        return ChowClass(n, (1,) + (0,) * n)

    @staticmethod
    def from_coeffs(n: int, coeffs) -> "ChowClass":
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) < n + 1:
            coeffs = coeffs + (0,) * (n + 1 - len(coeffs))
        return ChowClass(n, coeffs[: n + 1])

    @staticmethod
    def hyperplane(n: int, multiple: int = 1) -> "ChowClass":
        return ChowClass.from_coeffs(n, (0, multiple))

    @staticmethod
    def line_bundle(n: int, k: int) -> "ChowClass":
        """Total Chern class 1 + k*H of O(k)."""
        return ChowClass.from_coeffs(n, (1, k))

    def _match(self, other: "ChowClass"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("classes from different ambient spaces")

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._match(other)
        return ChowClass(
            self.ambient_dim,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        self._match(other)
        return ChowClass(
            self.ambient_dim,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ambient_dim, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass(self.ambient_dim, tuple(other * a for a in self.coeffs))
        return truncated_mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def format_h(self) -> str:
        parts = []
        for p, c in enumerate(self.coeffs):
            if not c:
                continue
            if p == 0:
                body = str(c)
            else:
                h = "H" if p == 1 else f"H^{p}"
                if c == 1:
                    body = h
                elif c == -1:
                    body = f"-{h}"
                else:
                    body = f"{c}*{h}"
            parts.append(body)
        if not parts:
            return "0"
        s = parts[0]
        for part in parts[1:]:
            s += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return s

    def format_brackets(self) -> str:
        n = self.ambient_dim
        parts = []
        for p, c in enumerate(self.coeffs):
            if not c:
                continue
            body = f"[P^{n - p}]"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c} {body}")
        if not parts:
            return "0"
        s = parts[0]
        for part in parts[1:]:
            s += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return s

    def __str__(self):
        return self.format_h()


def truncated_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    a._match(b)
    n = a.ambient_dim
    out = [0] * (n + 1)
    for p, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for q in range(n + 1 - p):
            cb = b.coeffs[q]
            if cb:
                out[p + q] += ca * cb
    return ChowClass(n, tuple(out))


def truncated_inverse(a: ChowClass) -> ChowClass:
    """Multiplicative inverse; demands constant term +1 or -1 so that the
    inverse stays integral."""
    if a.coeffs[0] not in (1, -1):
        raise ValueError(f"constant term {a.coeffs[0]} is not a unit over ZZ")
    n = a.ambient_dim
    u = a.coeffs[0]
    out = [0] * (n + 1)
    out[0] = u
    for p in range(1, n + 1):
        acc = 0
        for q in range(1, p + 1):
            acc += a.coeffs[q] * out[p - q]
        out[p] = -u * acc
    return ChowClass(n, tuple(out))


def dual(a: ChowClass) -> ChowClass:
    """Sign flip in odd codimension: the class of the dual bundle convention."""
    return ChowClass(
        a.ambient_dim,
        tuple((-c if p & 1 else c) for p, c in enumerate(a.coeffs)),
    )


def tensor_by(a: ChowClass, k: int) -> ChowClass:
    """Twist by O(k): each graded piece c_p H^p becomes c_p H^p (1+kH)^(-p).

    Composes additively in k and fixes codimension-0 terms.
    """
    n = a.ambient_dim
    inv = truncated_inverse(ChowClass.line_bundle(n, k))
    total = ChowClass.from_coeffs(n, (a.coeffs[0],))
    power = ChowClass.unit(n)
    for p in range(1, n + 1):
        power = truncated_mul(power, inv)
        if a.coeffs[p]:
            piece = [0] * (n + 1)
            for q in range(p, n + 1):
                piece[q] = a.coeffs[p] * power.coeffs[q - p]
            total = total + ChowClass(n, tuple(piece))
    return total


def chern_tangent(n: int) -> ChowClass:
    """Total Chern class of the tangent bundle of P^n: (1+H)^(n+1) truncated."""
    return ChowClass(n, tuple(comb(n + 1, p) for p in range(n + 1)))


def integral(a: ChowClass) -> int:
    """Degree of the zero-dimensional component."""
    return a.coeffs[a.ambient_dim]


def pushforward_linear_embedding(a: ChowClass, n_to: int) -> ChowClass:
    """Image of a class under a linear embedding P^n -> P^(n_to): dimension
    is preserved, so codimension shifts by the difference."""
    n = a.ambient_dim
    if n_to < n:
        raise ValueError("target space is smaller than the source")
    shift = n_to - n
    out = [0] * (n_to + 1)
    for p, c in enumerate(a.coeffs):
        out[p + shift] = c
    return ChowClass(n_to, tuple(out))


def ci_segre_oracle(degrees, n: int) -> ChowClass:
    """Segre class of a complete intersection of hypersurfaces of the given
    degrees: prod(d_i) H^k / prod(1 + d_i H).  Closed form, no randomness;
    the check standard for the projective-degree pipeline on regular
    sequences."""
    degrees = tuple(degrees)
    if not degrees:
        raise ValueError("empty degree list")
    k = len(degrees)
    total = 1
    for d in degrees:
        total *= d
    top = [0] * (n + 1)
    if k <= n:
        top[k] = total
    cls = ChowClass(n, tuple(top))
    for d in degrees:
        cls = truncated_mul(cls, truncated_inverse(ChowClass.line_bundle(n, d)))
    return cls
