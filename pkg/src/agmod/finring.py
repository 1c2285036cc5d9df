"""Finite commutative rings Z_n1 x ... x Z_nk and their ideals.

Elements are residue tuples with componentwise arithmetic.  Ideals are stored
as divisor tuples, one divisor d_i | n_i per component, where d_i = n_i
encodes the zero component and d_i = 1 the full component; membership is a
componentwise divisibility test.  In this shape ideal products reduce to
gcd(d*d', n), radicals to squarefree kernels, and idempotents split
componentwise, so everything stays exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError, InternalCheckError, StructuralError


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def squarefree_kernel(n: int) -> int:
    """Product of the distinct primes dividing n (1 for n = 1)."""
    kernel, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            kernel *= p
            while m % p == 0:
                m //= p
        p += 1
    return kernel * m if m > 1 else kernel


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out, m, p = [], n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


class Ring:
    """The ring Z_n1 x ... x Z_nk with componentwise arithmetic."""

    def __init__(self, moduli):
        moduli = tuple(int(n) for n in moduli)
        if not moduli:
            raise StructuralError("a ring needs at least one component")
        bad = [n for n in moduli if n < 2]
        if bad:
            raise StructuralError(f"component moduli must be >= 2, got {bad}", bad)
        self.moduli = moduli
        self.cardinality = math.prod(moduli)
        self.zero = (0,) * len(moduli)
        self.one = (1,) * len(moduli)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __repr__(self):
        return "Z" + "xZ".join(str(n) for n in self.moduli)

    # -- element arithmetic -------------------------------------------------

    def _check(self, r):
        if len(r) != len(self.moduli):
            raise StructuralError(
                f"element {r} has {len(r)} components, ring {self!r} has {len(self.moduli)}"
            )

    def element(self, residues) -> tuple[int, ...]:
        """Canonicalise an iterable of residues into a ring element."""
        r = tuple(int(x) for x in residues)
        self._check(r)
        return tuple(x % n for x, n in zip(r, self.moduli))

    def elements(self):
        """All ring elements in lexicographic order."""
        return itertools.product(*(range(n) for n in self.moduli))

    def add(self, a, b):
        self._check(a), self._check(b)
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def sub(self, a, b):
        self._check(a), self._check(b)
        return tuple((x - y) % n for x, y, n in zip(a, b, self.moduli))

    def mul(self, a, b):
        self._check(a), self._check(b)
        return tuple((x * y) % n for x, y, n in zip(a, b, self.moduli))

    def neg(self, a):
        self._check(a)
        return tuple((-x) % n for x, n in zip(a, self.moduli))

    def unit_vector(self, comp: int, value: int = 1):
        """The element with ``value`` in one component and 0 elsewhere."""
        return tuple(value % n if c == comp else 0 for c, n in enumerate(self.moduli))

    # -- nilpotents and idempotents -----------------------------------------

    def is_nilpotent(self, r) -> bool:
        """True iff some power of r is zero.

        Repeated squaring: if r^m = 0 for any m <= |R| then r^(2^t) = 0 once
        2^t >= m, and bit_length(|R|) squarings reach that.
        """
        self._check(r)
        x = r
        for _ in range(self.cardinality.bit_length() + 1):
            if x == self.zero:
                return True
            x = self.mul(x, x)
        return x == self.zero

    def is_idempotent(self, r) -> bool:
        return self.mul(r, r) == r

    def idempotent_power(self, r):
        """The unique idempotent in {r, r^2, r^3, ...}.

        Powers of r in a finite commutative ring eventually cycle, and the
        cycle contains exactly one idempotent.
        """
        self._check(r)
        seen = {}
        x, k = r, 1
        while x not in seen:
            seen[x] = k
            x = self.mul(x, r)
            k += 1
        for y in seen:
            if self.mul(y, y) == y:
                return y
        raise InternalCheckError(f"no idempotent power found for {r} in {self!r}")

    def idempotents(self) -> list[tuple[int, ...]]:
        """All e with e*e = e, sorted; always contains 0 and 1."""
        per_comp = [
            [x for x in range(n) if (x * x) % n == x] for n in self.moduli
        ]
        return sorted(itertools.product(*per_comp))

    # -- ideals ---------------------------------------------------------------

    def ideal(self, divs) -> "Ideal":
        return Ideal(self, tuple(int(d) for d in divs))

    def zero_ideal(self) -> "Ideal":
        return Ideal(self, self.moduli)

    def unit_ideal(self) -> "Ideal":
        return Ideal(self, (1,) * len(self.moduli))

    def ideals(self) -> list["Ideal"]:
        """All ideals as divisor tuples; count = prod of divisor counts."""
        return [
            Ideal(self, divs)
            for divs in itertools.product(*(divisors(n) for n in self.moduli))
        ]

    def nilradical(self) -> "Ideal":
        return Ideal(self, tuple(squarefree_kernel(n) for n in self.moduli))

    def is_prime_ideal(self, ideal: "Ideal") -> bool:
        """Exhaustive primality test: I proper and rs in I => r in I or s in I."""
        if ideal.is_whole():
            return False
        for r in self.elements():
            if ideal.contains(r):
                continue
            for s in self.elements():
                if ideal.contains(s):
                    continue
                if ideal.contains(self.mul(r, s)):
                    return False
        return True

    def lift_idempotent(self, u, ideal: "Ideal"):
        """Lift an idempotent of R/I to an idempotent of R, for nil I.

        Requires u*u - u in I with I nil.  Iterates u <- 3u^2 - 2u^3, which
        fixes idempotents, stays inside uR, and squares the defect u^2 - u at
        every step; nil ideals here are nilpotent, so bit_length(|R|) + 4
        steps suffice.
        """
        self._check(u)
        if not ideal.is_nil():
            raise DomainError(f"{ideal} is not a nil ideal")
        if not ideal.contains(self.sub(self.mul(u, u), u)):
            raise DomainError(f"{u} is not idempotent modulo {ideal}")
        e = u
        three = self.element([3] * len(self.moduli))
        two = self.element([2] * len(self.moduli))
        for _ in range(self.cardinality.bit_length() + 4):
            e2 = self.mul(e, e)
            nxt = self.sub(self.mul(three, e2), self.mul(two, self.mul(e2, e)))
            if nxt == e:
                break
            e = nxt
        if self.mul(e, e) != e:
            raise InternalCheckError(f"idempotent lift did not converge for {u}")
        if not ideal.contains(self.sub(e, u)):
            raise InternalCheckError("lifted idempotent drifted outside u + I")
        return e


@dataclass(frozen=True)
class Ideal:
    """An ideal d_1 Z_n1 x ... x d_k Z_nk in divisor form."""

    ring: Ring
    divisors: tuple[int, ...]

    def __post_init__(self):
        if len(self.divisors) != len(self.ring.moduli):
            raise StructuralError(
                f"ideal {self.divisors} does not match ring {self.ring!r}"
            )
        bad = [
            (i, d)
            for i, (d, n) in enumerate(zip(self.divisors, self.ring.moduli))
            if d < 1 or n % d != 0
        ]
        if bad:
            raise StructuralError(f"divisors must divide the moduli: {bad}", bad)

    def __repr__(self):
        return "(" + ",".join(str(d) for d in self.divisors) + ")"

    def contains(self, r) -> bool:
        return all(x % d == 0 for x, d in zip(r, self.divisors))

    def elements(self):
        """The encoded element set (d = n contributes only 0)."""
        return itertools.product(
            *(range(0, n, d) for d, n in zip(self.divisors, self.ring.moduli))
        )

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements())

    def size(self) -> int:
        return math.prod(n // d for d, n in zip(self.divisors, self.ring.moduli))

    def gens(self) -> list[tuple[int, ...]]:
        """One generator per component: d_i in position i."""
        return [
            self.ring.unit_vector(i, d)
            for i, d in enumerate(self.divisors)
        ]

    def is_zero(self) -> bool:
        return self.divisors == self.ring.moduli

    def is_whole(self) -> bool:
        return all(d == 1 for d in self.divisors)

    def product(self, other: "Ideal") -> "Ideal":
        """Componentwise d*d' reduced by gcd with n; equals the set product."""
        if self.ring != other.ring:
            raise StructuralError("ideal product across different rings")
        return Ideal(
            self.ring,
            tuple(
                math.gcd(d * e, n)
                for d, e, n in zip(self.divisors, other.divisors, self.ring.moduli)
            ),
        )

    def radical(self) -> "Ideal":
        """{r : r^k in I for some k}: each divisor drops to its squarefree kernel."""
        return Ideal(
            self.ring, tuple(squarefree_kernel(d) for d in self.divisors)
        )

    def is_nil(self) -> bool:
        """True iff every element is nilpotent, i.e. I lies in the nilradical."""
        return all(
            d % squarefree_kernel(n) == 0
            for d, n in zip(self.divisors, self.ring.moduli)
        )

    def intersect(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise StructuralError("ideal intersection across different rings")
        return Ideal(
            self.ring,
            tuple(
                math.lcm(d, e) for d, e in zip(self.divisors, other.divisors)
            ),
        )
