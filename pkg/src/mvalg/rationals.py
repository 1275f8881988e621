"""Algebras of rational numbers: subalgebras of the rational unit interval.

A subalgebra of [0,1] n Q is determined by its set of admissible
denominators, which is closed under divisors and lcm; equivalently by a cap
on the exponent of each prime, where the cap may be infinite.  Finite caps
with finite support describe the finite chains; the everything-infinite
specification is the whole rational interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .algebras import AlgebraError

INF = float("inf")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    if n < 1:
        raise AlgebraError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class RationalAlgebra:
    """Denominator specification: (prime, exponent cap) pairs plus an
    all-primes-infinite flag.  p/q (lowest terms) is a member iff every prime
    power in q stays within its cap."""

    exponents: tuple[tuple[int, int | float], ...]
    all_infinite: bool = False

    def __init__(self, exponents: Mapping[int, int | float] | None = None, all_infinite: bool = False):
        if all_infinite:
            pairs: tuple[tuple[int, int | float], ...] = ()
        else:
            items = dict(exponents or {})
            for p, e in items.items():
                if not isinstance(p, int) or p < 2 or factorize(p) != {p: 1}:
                    raise AlgebraError(f"{p!r} is not prime")
                if e != INF and (not isinstance(e, int) or e < 0):
                    raise AlgebraError(f"bad exponent {e!r} for prime {p}")
            pairs = tuple(sorted((p, e) for p, e in items.items() if e != 0))
        object.__setattr__(self, "exponents", pairs)
        object.__setattr__(self, "all_infinite", bool(all_infinite))

    @staticmethod
    def chain(n: int) -> "RationalAlgebra":
        """The finite chain with denominator n (admissible denominators: divisors of n)."""
        if not isinstance(n, int) or n < 1:
            raise AlgebraError(f"chain order must be a positive integer, got {n!r}")
        return RationalAlgebra(factorize(n))

    @staticmethod
    def full() -> "RationalAlgebra":
        """The whole rational unit interval."""
        return RationalAlgebra(all_infinite=True)

    @staticmethod
    def supernatural(exponents: Mapping[int, int | float], all_infinite: bool = False) -> "RationalAlgebra":
        return RationalAlgebra(exponents, all_infinite)

    @property
    def is_finite(self) -> bool:
        return not self.all_infinite and all(e != INF for _, e in self.exponents)

    def chain_order(self) -> int | None:
        """The denominator n when this algebra is the finite chain of order n."""
        if not self.is_finite:
            return None
        n = 1
        for p, e in self.exponents:
            n *= p ** int(e)
        return n

    def exponent_of(self, p: int) -> int | float:
        if self.all_infinite:
            return INF
        return dict(self.exponents).get(p, 0)

    def contains(self, x: Fraction) -> bool:
        x = Fraction(x)
        if not 0 <= x <= 1:
            return False
        if self.all_infinite:
            return True
        caps = dict(self.exponents)
        return all(e <= caps.get(p, 0) for p, e in factorize(x.denominator).items())

    def check(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        if not self.contains(x):
            raise AlgebraError(f"{x} is not a member of {self}")
        return x

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def join(self, other: "RationalAlgebra") -> "RationalAlgebra":
        """Pointwise maximum of exponent caps; on finite chains this is lcm."""
        if self.all_infinite or other.all_infinite:
            return RationalAlgebra.full()
        caps = dict(self.exponents)
        for p, e in other.exponents:
            caps[p] = max(caps.get(p, 0), e)
        return RationalAlgebra(caps)

    def elements(self) -> Iterator[Fraction]:
        n = self.chain_order()
        if n is None:
            raise AlgebraError(f"{self} is infinite; cannot enumerate")
        return iter(Fraction(k, n) for k in range(n + 1))

    def __repr__(self) -> str:
        if self.all_infinite:
            return "RationalAlgebra(full)"
        n = self.chain_order()
        if n is not None:
            return f"RationalAlgebra(chain {n})"
        caps = ", ".join(f"{p}^{'inf' if e == INF else e}" for p, e in self.exponents)
        return f"RationalAlgebra({caps})"
