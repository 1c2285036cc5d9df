"""Finite modules over product-of-Z_n rings: lattices, colons, products, primes.

A module is an ordered list of cyclic factors Z_d, each tagged with a ring
component; scalars act componentwise through their tags.  A localized image
e*M is the same machinery restricted to a scaled-down carrier, with the
idempotent e acting as the identity.  Because the idempotent subring e*R acts
on e*M exactly as the ambient ring does (r and e*r agree on the carrier), all
lattice, colon and product computations run unchanged on images; ideal-valued
results are reported as their full preimages in the ambient ring.

The workhorse predicates (colon, prime submodule, semiprime module, zero
divisors) are deliberate exhaustive scans: instances are desk-scale and the
scans double as the oracle for everything downstream.
"""

from __future__ import annotations

import itertools
import math

from .errors import DomainError, InternalCheckError, ResourceLimitError, StructuralError
from .finring import Ideal, Ring

ELEMENT_CAP = 512
LATTICE_CAP = 4096


class Module:
    """A finite module over a Ring, either structured or an embedded image e*M."""

    def __init__(self, ring: Ring, factors, _carrier=None, _unit=None):
        self.ring = ring
        self.factors = tuple((int(d), int(c)) for d, c in factors)
        bad = []
        for i, (d, c) in enumerate(self.factors):
            if not 0 <= c < len(ring.moduli):
                bad.append((i, d, c, "no such ring component"))
            elif d < 1 or ring.moduli[c] % d != 0:
                bad.append((i, d, c, f"d must divide {ring.moduli[c]}"))
        if bad:
            raise StructuralError(f"invalid module factors: {bad}", bad)

        self.zero = (0,) * len(self.factors)
        self.unit = ring.one if _unit is None else _unit
        if _carrier is None:
            elems = list(itertools.product(*(range(d) for d, _ in self.factors)))
        else:
            elems = sorted(_carrier)
        self.elements = tuple(sorted(elems))
        self.element_set = frozenset(elems)
        self.size = len(elems)

        self._lattice = None
        self._colon_cache: dict = {}
        self._act_cache: dict = {}
        self._span_cache: dict = {}
        self._primes = None
        self._cyclic = -1  # unset marker; None once known acyclic
        self._zdiv = None
        self._semiprime = None

        if _carrier is None and ring.cardinality * self.size <= 10**6:
            self._verify_action()

    # -- identity ------------------------------------------------------------

    @property
    def key(self):
        """Value identity: ring, shape and acting unit pin the carrier."""
        return (self.ring.moduli, self.factors, self.unit)

    @property
    def is_embedded(self) -> bool:
        return self.unit != self.ring.one

    def __repr__(self):
        shape = "x".join(f"Z{d}@{c}" for d, c in self.factors)
        if self.is_embedded:
            return f"{self.unit}*[{shape} over {self.ring!r}]"
        return f"[{shape} over {self.ring!r}]"

    # -- carrier arithmetic ----------------------------------------------------

    def add(self, x, y):
        return tuple(
            (a + b) % d for a, b, (d, _) in zip(x, y, self.factors)
        )

    def neg(self, x):
        return tuple((-a) % d for a, (d, _) in zip(x, self.factors))

    def smul(self, r, x):
        return tuple(
            (r[c] * a) % d for a, (d, c) in zip(x, self.factors)
        )

    def project(self, x, comp: int):
        """The action of the component unit e_comp on x."""
        return tuple(
            a if c == comp else 0 for a, (d, c) in zip(x, self.factors)
        )

    def gens(self) -> list:
        """A canonical generating set: unit-scaled coordinate vectors."""
        out, seen = [], set()
        for t, (d, _) in enumerate(self.factors):
            v = tuple(1 if s == t and d > 1 else 0 for s, (d2, _) in enumerate(self.factors))
            g = self.smul(self.unit, v)
            if g != self.zero and g not in seen:
                seen.add(g)
                out.append(g)
        return out

    def _verify_action(self):
        """Spot-check the scalar action laws over all (r, m) pairs."""
        elems = self.elements
        probe_m = elems[-1]
        for m in elems:
            if self.smul(self.ring.one, m) != m:
                raise InternalCheckError(f"1*{m} != {m}")
        for r in self.ring.elements():
            s = self.ring.mul(r, r)
            for m in elems:
                if self.smul(r, self.add(m, probe_m)) != self.add(
                    self.smul(r, m), self.smul(r, probe_m)
                ):
                    raise InternalCheckError("scalar action is not distributive")
                if self.smul(s, m) != self.smul(r, self.smul(r, m)):
                    raise InternalCheckError("scalar action is not associative")
            probe_m = elems[hash(r) % len(elems)]

    # -- spans and submodules --------------------------------------------------

    def cyclic_span(self, x) -> frozenset:
        """The orbit R*x: the additive span of the component projections of x."""
        cached = self._span_cache.get(x)
        if cached is not None:
            return cached
        span = {self.zero}
        for c in range(len(self.ring.moduli)):
            p = self.project(x, c)
            if p == self.zero:
                continue
            mults = [self.zero]
            q = p
            while q != self.zero:
                mults.append(q)
                q = self.add(q, p)
            span = {self.add(s, m) for s in span for m in mults}
        out = frozenset(span)
        self._span_cache[x] = out
        return out

    def span(self, gens) -> frozenset:
        """Least submodule carrier containing gens."""
        span = {self.zero}
        for g in gens:
            orbit = self.cyclic_span(g)
            span = {self.add(s, m) for s in span for m in orbit}
        return frozenset(span)

    def submodule(self, gens) -> "Submodule":
        for g in gens:
            if g not in self.element_set:
                raise DomainError(f"generator {g} is not a module element")
        return self.submodule_from_set(self.span(gens))

    def submodule_from_set(self, elems) -> "Submodule":
        return Submodule(self, frozenset(elems))

    def zero_submodule(self) -> "Submodule":
        return self.submodule_from_set({self.zero})

    def whole_submodule(self) -> "Submodule":
        return self.submodule_from_set(self.element_set)

    def lattice(self, element_cap: int | None = None, cap: int | None = None) -> "Lattice":
        """Enumerate every submodule by breadth-first closure from (0).

        Each known submodule is extended by one outside element (adding the
        whole coset family S + R*x, which is already closed) and deduplicated
        until fixpoint.
        """
        if self._lattice is not None:
            return self._lattice
        element_cap = ELEMENT_CAP if element_cap is None else element_cap
        cap = LATTICE_CAP if cap is None else cap
        if self.size > element_cap:
            raise ResourceLimitError(
                f"module has {self.size} elements, above the cap of {element_cap}",
                element_cap,
            )
        zero_fs = frozenset({self.zero})
        seen = {zero_fs}
        order = [zero_fs]
        i = 0
        while i < len(order):
            current = order[i]
            i += 1
            for x in self.elements:
                if x in current:
                    continue
                orbit = self.cyclic_span(x)
                bigger = frozenset(
                    self.add(s, m) for s in current for m in orbit
                )
                if bigger not in seen:
                    if len(seen) >= cap:
                        raise ResourceLimitError(
                            f"more than {cap} submodules (lattice cap)", cap
                        )
                    seen.add(bigger)
                    order.append(bigger)
        self._lattice = Lattice(self, seen)
        return self._lattice

    # -- colon ideals and products ----------------------------------------------

    def colon(self, sub: "Submodule") -> Ideal:
        """(N : M) = {r : r*M <= N} in divisor form, computed per ring component.

        r carries M into N iff every component part of r does, so each
        component divisor is the gcd of the residues that send all module
        generators into N.
        """
        cached = self._colon_cache.get(sub.encoding)
        if cached is not None:
            return cached
        gens = self.gens()
        divs = []
        for c, n_c in enumerate(self.ring.moduli):
            g = n_c
            for a in range(1, n_c):
                r = self.ring.unit_vector(c, a)
                if all(self.smul(r, gm) in sub.elements for gm in gens):
                    g = math.gcd(g, a)
                    if g == 1:
                        break
            divs.append(g)
        out = Ideal(self.ring, tuple(divs))
        self._colon_cache[sub.encoding] = out
        return out

    def annihilator(self) -> Ideal:
        return self.colon(self.zero_submodule())

    def ideal_act(self, ideal: Ideal, sub: "Submodule" = None) -> "Submodule":
        """I*N: the submodule generated by ideal generators times N's generators."""
        target_gens = self.gens() if sub is None else list(sub.gens)
        key = (ideal.divisors, None if sub is None else sub.encoding)
        cached = self._act_cache.get(key)
        if cached is not None:
            return cached
        prods = [
            self.smul(ig, mg) for ig in ideal.gens() for mg in target_gens
        ]
        out = self.submodule_from_set(self.span(prods))
        self._act_cache[key] = out
        return out

    def product(self, n: "Submodule", k: "Submodule") -> "Submodule":
        """The submodule product (N:M)(K:M)M."""
        return self.ideal_act(self.colon(n).product(self.colon(k)))

    # -- prime submodules ---------------------------------------------------------

    def is_prime_submodule(self, p: "Submodule") -> bool:
        """Exhaustive check of: r*m in P implies r in (P:M) or m in P."""
        if p.is_whole:
            return False
        colon = self.colon(p)
        pset = p.elements
        for r in self.ring.elements():
            if colon.contains(r):
                continue
            for m in self.elements:
                if m in pset:
                    continue
                if self.smul(r, m) in pset:
                    return False
        return True

    def primes(self) -> list["Submodule"]:
        if self._primes is None:
            self._primes = [
                s for s in self.lattice().all if self.is_prime_submodule(s)
            ]
        return self._primes

    def min_primes(self) -> list["Submodule"]:
        """Inclusion-minimal prime submodules."""
        ps = self.primes()
        return [
            p
            for p in ps
            if not any(q is not p and q.elements < p.elements for q in ps)
        ]

    def radical(self, sub: "Submodule") -> "Submodule":
        """Intersection of the primes containing N; M itself if there are none."""
        containing = [p for p in self.primes() if sub.elements <= p.elements]
        if not containing:
            return self.whole_submodule()
        inter = frozenset.intersection(*(p.elements for p in containing))
        return self.submodule_from_set(inter)

    def is_semiprime(self) -> bool:
        """Exhaustive: I^2 K = 0 implies I K = 0 for all ideals I, submodules K."""
        if self._semiprime is None:
            self._semiprime = self._semiprime_scan()
        return self._semiprime

    def _semiprime_scan(self) -> bool:
        lat = self.lattice()
        zero = self.zero_submodule()
        for ideal in self.ring.ideals():
            sq = ideal.product(ideal)
            for k in lat.all:
                if self.ideal_act(sq, k) == zero and self.ideal_act(ideal, k) != zero:
                    return False
        return True

    def zero_divisors(self) -> frozenset:
        """Z(M): scalars killing some nonzero element, by exhaustive scan."""
        if self._zdiv is not None:
            return self._zdiv
        out = set()
        for r in self.ring.elements():
            for m in self.elements:
                if m != self.zero and self.smul(r, m) == self.zero:
                    out.add(r)
                    break
        self._zdiv = frozenset(out)
        return self._zdiv

    # -- structure ------------------------------------------------------------------

    def minimal_submodules(self) -> list["Submodule"]:
        """Atoms of the lattice."""
        lat = self.lattice()
        nz = [s for s in lat.all if not s.is_zero]
        return [
            s
            for s in nz
            if not any(t is not s and not t.is_zero and t.elements < s.elements for t in nz)
        ]

    def cyclic_generator(self):
        """A generator m with R*m = M, or None; first in element order."""
        if self._cyclic != -1:
            return self._cyclic
        witness = None
        for m in self.elements:
            if len(self.cyclic_span(m)) == self.size:
                witness = m
                break
        self._cyclic = witness
        return witness

    def is_cyclic(self) -> bool:
        return self.cyclic_generator() is not None

    def classify(self) -> tuple[str, ...]:
        """Overlapping labels in fixed order; ('other',) when none apply."""
        lat = self.lattice()
        labels = []
        if len(lat.all) == 2:
            labels.append("simple")
        if len(lat.all) == 3:
            labels.append("unique_nontrivial_submodule")
        if self.size > 1 and self.is_prime_submodule(self.zero_submodule()):
            labels.append("prime_module")
        return tuple(labels) if labels else ("other",)

    # -- idempotent decompositions ------------------------------------------------

    def scaled(self, e) -> "Module":
        """The image e*M as a module with acting identity e (times our unit)."""
        eff = self.ring.mul(e, self.unit)
        carrier = {self.smul(eff, m) for m in self.elements}
        img = Module(self.ring, self.factors, _carrier=carrier, _unit=eff)
        for m in img.elements:
            if img.smul(eff, m) != m:
                raise InternalCheckError(f"{eff} is not an identity on its image")
        return img

    def decompose(self, e) -> tuple["Module", "Module"]:
        """Split M as e*M (+) (1-e)*M for a nontrivial idempotent e."""
        if self.ring.mul(e, e) != e:
            raise DomainError(f"{e} is not idempotent")
        if e == self.ring.zero or e == self.unit:
            raise DomainError(f"idempotent {e} gives a trivial decomposition")
        eff = self.ring.mul(e, self.unit)
        comp = self.ring.sub(self.unit, eff)
        left, right = self.scaled(eff), self.scaled(comp)
        if left.size * right.size != self.size:
            raise InternalCheckError("decomposition sizes do not multiply out")
        return left, right

    def nontrivial_decompositions(self):
        """(e, eM, (1-e)M) with both parts nonzero, one per unordered pair."""
        out = []
        for e in self.ring.idempotents():
            if e in (self.ring.zero, self.ring.one):
                continue
            comp = self.ring.sub(self.ring.one, e)
            if e > comp:
                continue
            left, right = self.scaled(e), self.scaled(comp)
            if left.size > 1 and right.size > 1:
                out.append((e, left, right))
        return out

    def detect_fxs(self):
        """An idempotent splitting M into a simple part and a part with a
        unique nontrivial submodule, or None."""
        for e, left, right in self.nontrivial_decompositions():
            cl, cr = left.classify(), right.classify()
            if "simple" in cl and "unique_nontrivial_submodule" in cr:
                return e
            if "simple" in cr and "unique_nontrivial_submodule" in cl:
                return self.ring.sub(self.ring.one, e)
        return None

    # -- minimal-prime clique construction ---------------------------------------

    def min_prime_clique_witness(self):
        """One nonzero submodule per minimal prime, pairwise products zero.

        Construction: localize away from each minimal-prime colon (the
        idempotent-power product over the complement), pull the component
        idempotents back onto the cyclic generator, and scale by a multiplier
        that kills every cross product.  The result is verified before it is
        returned.  Returns (witnesses, report).
        """
        gen = self.cyclic_generator()
        if gen is None:
            raise DomainError("clique witness construction needs a cyclic module")
        mins = self.min_primes()
        if not mins:
            return [], {"size": 0}
        ring = self.ring
        colons = [self.colon(p) for p in mins]
        union = set()
        for q in colons:
            union |= q.element_set
        s_set = [r for r in ring.elements() if r not in union]

        def idem_of(elems):
            e = ring.one
            for s in elems:
                e = ring.mul(e, ring.idempotent_power(s))
            return e

        e_total = idem_of(s_set)
        e_parts = []
        for q in colons:
            comp = [r for r in ring.elements() if not q.contains(r)]
            e_parts.append(ring.mul(e_total, idem_of(comp)))

        t = ring.one
        pair_multipliers = []
        for i in range(len(mins)):
            for j in range(i + 1, len(mins)):
                target = self.smul(ring.mul(e_parts[i], e_parts[j]), gen)
                t_ij = next(
                    (s for s in sorted(s_set) if self.smul(s, target) == self.zero),
                    None,
                )
                if t_ij is None:
                    raise InternalCheckError(
                        f"no multiplier kills the cross product for primes {i},{j}"
                    )
                pair_multipliers.append((i, j, t_ij))
                t = ring.mul(t, t_ij)

        witnesses = [
            self.submodule([self.smul(ring.mul(t, e_i), gen)]) for e_i in e_parts
        ]
        zero = self.zero_submodule()
        if len({w.encoding for w in witnesses}) != len(witnesses):
            raise InternalCheckError("clique witnesses are not distinct")
        for w in witnesses:
            if w == zero:
                raise InternalCheckError("clique witness is the zero submodule")
        for i in range(len(witnesses)):
            for j in range(i + 1, len(witnesses)):
                if self.product(witnesses[i], witnesses[j]) != zero:
                    raise InternalCheckError(
                        f"witness product {i},{j} is nonzero"
                    )
        report = {
            "size": len(witnesses),
            "localization_idempotent": list(e_total),
            "component_idempotents": [list(e) for e in e_parts],
            "multiplier": list(t),
            "pair_multipliers": [
                [i, j, list(s)] for i, j, s in pair_multipliers
            ],
        }
        return witnesses, report


class Submodule:
    """A submodule as a canonical closed element set with a minimal generator list."""

    __slots__ = ("module", "elements", "encoding", "gens", "id")

    def __init__(self, module: Module, elems: frozenset):
        self.module = module
        self.elements = elems
        self.encoding = tuple(sorted(elems))
        self.gens = _minimal_gens(module, elems)
        self.id = None

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.module.key == other.module.key
            and self.encoding == other.encoding
        )

    def __hash__(self):
        return hash(self.encoding)

    def __repr__(self):
        return f"<{self.label} #{self.size}>"

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    @property
    def is_whole(self) -> bool:
        return self.size == self.module.size

    @property
    def label(self) -> str:
        if not self.gens:
            return "⟨0⟩"
        return "⟨" + ", ".join(_fmt_elem(g) for g in self.gens) + "⟩"


def _fmt_elem(x) -> str:
    if len(x) == 1:
        return str(x[0])
    return "(" + ",".join(str(a) for a in x) + ")"


def _minimal_gens(module: Module, elems: frozenset) -> tuple:
    """Greedy lexicographically-least generators, then drop redundant ones."""
    if len(elems) == 1:
        return ()
    gens = []
    span = {module.zero}
    for x in sorted(elems):
        if x in span:
            continue
        gens.append(x)
        orbit = module.cyclic_span(x)
        span = {module.add(s, m) for s in span for m in orbit}
        if len(span) == len(elems):
            break
    changed = True
    while changed and len(gens) > 1:
        changed = False
        for g in list(gens):
            rest = [h for h in gens if h != g]
            if module.span(rest) == elems:
                gens.remove(g)
                changed = True
                break
    return tuple(gens)


class Lattice:
    """All submodules, sorted by (size, canonical encoding), with inclusion order."""

    def __init__(self, module: Module, subsets):
        self.module = module
        subs = [Submodule(module, fs) for fs in subsets]
        subs.sort(key=lambda s: (s.size, s.encoding))
        for i, s in enumerate(subs):
            s.id = i
        self.all = tuple(subs)
        self._by_encoding = {s.encoding: s for s in subs}

    def __len__(self):
        return len(self.all)

    @property
    def zero(self) -> Submodule:
        return self.all[0]

    @property
    def top(self) -> Submodule:
        return self.all[-1]

    def find(self, elems) -> Submodule:
        enc = tuple(sorted(elems))
        sub = self._by_encoding.get(enc)
        if sub is None:
            raise DomainError("element set is not a submodule of this lattice")
        return sub

    def intersect(self, a: Submodule, b: Submodule) -> Submodule:
        return self.find(a.elements & b.elements)

    def sum(self, a: Submodule, b: Submodule) -> Submodule:
        return self.find(self.module.span(list(a.gens) + list(b.gens)))

    def atoms(self) -> list[Submodule]:
        return self.module.minimal_submodules()
