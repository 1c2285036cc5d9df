"""Executable structural predicates over a generated corpus of instances.

Every predicate evaluates its hypotheses exactly as stated and then checks
the claimed conclusion; a hypothesis-satisfying instance that fails its
conclusion is reported as a violation, which in this code base always means
an implementation bug (the statements themselves are proven facts about
these graphs).  Instances whose hypotheses do not hold report
``hypotheses_not_met``; instances above a predicate's scale cap report
``skipped`` with the cap, never silently.

Hypotheses that are automatic for finite instances (finitely generated
module, Artinian quotient ring) are recorded as satisfied by construction
rather than re-checked.

Degenerate scope notes (see each predicate): statements that compare graph
invariants against the minimal-prime count are restricted to non-simple
modules, because a simple module has an empty graph (clique and chromatic
number 0) while still owning one minimal prime submodule; the clique-witness
construction likewise only produces an actual graph clique when there are at
least two minimal primes.
"""

from __future__ import annotations

import concurrent.futures
import itertools
from dataclasses import dataclass, field
from functools import cached_property

from . import aggraph
from .errors import InternalCheckError, ResourceLimitError
from .finmod import Module
from .finring import Ring, divisors
from .localization import (
    check_product_decomposition,
    image_submodule,
    localize,
    min_prime_complement,
    mult_closure,
    zero_divisor_complement,
)

PASS = "applicable_pass"
FAIL = "applicable_FAIL"
NOT_MET = "hypotheses_not_met"
SKIPPED = "skipped"


def instance_id(module: Module) -> str:
    ring = "x".join(f"Z{n}" for n in module.ring.moduli)
    mod = "x".join(f"Z{d}.{c}" for d, c in module.factors)
    return f"{ring}|{mod}"


# -- per-instance analysis cache ---------------------------------------------------


class InstanceAnalysis:
    """Lazily computed, cached views of one module instance."""

    def __init__(self, module: Module):
        self.module = module

    @cached_property
    def lattice(self):
        return self.module.lattice()

    @cached_property
    def ag(self) -> aggraph.AnnGraph:
        return aggraph.build_AG(self.module)

    @cached_property
    def ag_star(self) -> aggraph.AnnGraph:
        return aggraph.build_AG_star(self.module)

    @cached_property
    def inv(self) -> aggraph.InvariantReport:
        return aggraph.invariants(self.ag)

    @cached_property
    def inv_star(self) -> aggraph.InvariantReport:
        return aggraph.invariants(self.ag_star)

    @cached_property
    def ann(self):
        return self.module.annihilator()

    @cached_property
    def ann_nil(self) -> bool:
        return self.ann.is_nil()

    @cached_property
    def mins(self):
        return self.module.min_primes()

    @cached_property
    def rad0(self):
        return self.module.radical(self.module.zero_submodule())

    @cached_property
    def semiprime(self) -> bool:
        return self.module.is_semiprime()

    @cached_property
    def cyclic_gen(self):
        return self.module.cyclic_generator()

    @cached_property
    def classification(self):
        return self.module.classify()

    @property
    def simple(self) -> bool:
        return "simple" in self.classification

    @cached_property
    def decompositions(self):
        return self.module.nontrivial_decompositions()

    @cached_property
    def fxs(self):
        return self.module.detect_fxs()

    @cached_property
    def vertex_encodings(self):
        return {v.encoding for v in self.ag.vertices}

    @cached_property
    def loc_min(self):
        """Localization at the minimal-prime complement, plus its image analysis."""
        s = min_prime_complement(self.module)
        avoids_zdiv = not (s.closure & self.module.zero_divisors())
        loc = localize(self.module, s)
        return s, avoids_zdiv, loc, InstanceAnalysis(loc.image)

    @cached_property
    def loc_zdiv(self):
        """Localization at R minus Z(M)."""
        s = zero_divisor_complement(self.module)
        loc = localize(self.module, s)
        return s, loc, InstanceAnalysis(loc.image)


_ANALYSES: dict[Module, InstanceAnalysis] = {}


def get_analysis(module: Module) -> InstanceAnalysis:
    found = _ANALYSES.get(module)
    if found is None:
        found = _ANALYSES[module] = InstanceAnalysis(module)
    return found


def _sub_ref(sub) -> dict:
    ref = {"label": sub.label, "size": sub.size}
    if sub.id is not None:
        ref["id"] = sub.id
    return ref


# -- predicates -------------------------------------------------------------------


def _prop_2_5(a: InstanceAnalysis):
    """Every nonzero proper submodule is a graph vertex (finite instances
    always satisfy the finiteness/Artinian hypotheses by construction)."""
    missing = [
        _sub_ref(s)
        for s in a.lattice.all
        if not s.is_zero and not s.is_whole and s.encoding not in a.vertex_encodings
    ]
    if missing:
        return FAIL, {"non_vertices": missing}
    return PASS, {"proper_nonzero": max(len(a.lattice.all) - 2, 0)}


def _lemma_2_4(a: InstanceAnalysis):
    """With a nil annihilator, each minimal submodule squares to zero or is
    cut out by an idempotent."""
    if not a.ann_nil:
        return NOT_MET, {"reason": "annihilator is not nil"}
    m = a.module
    zero = m.zero_submodule()
    branches = []
    for n in m.minimal_submodules():
        if m.product(n, n) == zero:
            branches.append({"submodule": _sub_ref(n), "branch": "square_zero"})
            continue
        e = next(
            (
                e
                for e in m.ring.idempotents()
                if {m.smul(e, x) for x in m.elements} == n.elements
            ),
            None,
        )
        if e is None:
            return FAIL, {"submodule": _sub_ref(n)}
        branches.append(
            {"submodule": _sub_ref(n), "branch": "idempotent", "e": list(e)}
        )
    return PASS, {"minimal_submodules": branches}


def _part_labels(part: Module):
    labels = part.classify()
    return {
        "prime": "prime_module" in labels,
        "simple": "simple" in labels,
        "unique_nontrivial": "unique_nontrivial_submodule" in labels,
    }


def _lemma_2_6(a: InstanceAnalysis):
    """For decomposable M: triangle-free forces each split into two prime
    parts or a prime part plus a unique-nontrivial part; and the graph is
    acyclic iff some split pairs a simple part with a prime or
    unique-nontrivial part.

    The converse direction is only asserted for splits into (simple, simple)
    or (simple, unique-nontrivial): a simple part next to a prime part with
    several independent minimal submodules does admit triangles.
    """
    if not a.decompositions:
        return NOT_MET, {"reason": "no nontrivial idempotent decomposition"}
    details = []
    for e, left, right in a.decompositions:
        lhs, rhs = _part_labels(left), _part_labels(right)
        details.append({"e": list(e), "left": lhs, "right": rhs})
        if a.inv.triangle_free:
            ok = (lhs["prime"] and rhs["prime"]) or (
                (lhs["prime"] and rhs["unique_nontrivial"])
                or (rhs["prime"] and lhs["unique_nontrivial"])
            )
            if not ok:
                return FAIL, {"violating_split": details[-1], "part": "triangle_free"}
    acyclic = a.inv.girth is None
    fd_like = any(
        (d["left"]["simple"] and (d["right"]["prime"] or d["right"]["unique_nontrivial"]))
        or (d["right"]["simple"] and (d["left"]["prime"] or d["left"]["unique_nontrivial"]))
        for d in details
    )
    strong_fd = any(
        (d["left"]["simple"] and (d["right"]["simple"] or d["right"]["unique_nontrivial"]))
        or (d["right"]["simple"] and (d["left"]["simple"] or d["left"]["unique_nontrivial"]))
        for d in details
    )
    if acyclic and not fd_like:
        return FAIL, {"part": "acyclic_forward", "splits": details}
    if strong_fd and not acyclic:
        return FAIL, {"part": "acyclic_converse", "girth": a.inv.girth}
    return PASS, {"splits": details, "acyclic": acyclic}


def _p4_fxs_structure(a: InstanceAnalysis, e):
    """Check AG is the four-vertex path (0)xS - Fx(0) - (0)xN - FxN."""
    m = a.module
    left, right = m.decompose(e)
    if "simple" in left.classify():
        f_part, s_part = left, right
    else:
        f_part, s_part = right, left
    s_lat = s_part.lattice()
    if len(s_lat.all) != 3:
        return False, {"reason": "second part lacks a unique nontrivial submodule"}
    n_mid = s_lat.all[1]
    f_set = frozenset(f_part.element_set)
    s_set = frozenset(s_part.element_set)
    n_set = frozenset(n_mid.elements)
    fn_set = m.span(list(f_part.gens()) + list(n_mid.gens))
    expected = [s_set, f_set, n_set, fn_set]
    if len(set(expected)) != 4:
        return False, {"reason": "expected vertices are not distinct"}
    actual = {v.elements for v in a.ag.vertices}
    if set(expected) != actual:
        return False, {"reason": "vertex sets differ"}
    index = {v.elements: i for i, v in enumerate(a.ag.vertices)}
    path = [index[x] for x in expected]
    for i in range(4):
        for j in range(i + 1, 4):
            adjacent = a.ag.has_edge(path[i], path[j])
            if adjacent != (j == i + 1):
                return False, {"reason": "edges do not trace the expected path"}
    labels = [a.ag.vertices[i].label for i in path]
    return True, {"path": labels}


def _tree_shape_conclusion(a: InstanceAnalysis):
    """Shared conclusion: star or P4, with both directions of the P4 <-> FxS
    correspondence (including the exact four-vertex structure)."""
    star = a.inv.is_star
    p4 = a.inv.is_path4
    if not (star or p4):
        return FAIL, {"shape": sorted(a.inv.shape)}
    if p4 and a.fxs is None:
        return FAIL, {"reason": "P4 graph without an FxS decomposition"}
    if a.fxs is not None:
        if not p4:
            return FAIL, {"reason": "FxS decomposition without a P4 graph",
                          "shape": sorted(a.inv.shape)}
        ok, detail = _p4_fxs_structure(a, a.fxs)
        if not ok:
            return FAIL, detail
        return PASS, {"shape": "path_4", "fxs_idempotent": list(a.fxs), **detail}
    return PASS, {"shape": "star"}


def _thm_2_7(a: InstanceAnalysis):
    """A tree graph is a star or the four-vertex path; the path case happens
    exactly for modules splitting as simple x unique-nontrivial."""
    if not a.inv.is_tree:
        return NOT_MET, {"reason": "graph is not a tree"}
    return _tree_shape_conclusion(a)


def _thm_2_8(a: InstanceAnalysis):
    """Bipartite graphs (Artinian scalars are automatic here) are stars or
    the four-vertex path.  Empty graphs are out of scope: they are vacuously
    bipartite yet have no star centre."""
    if a.ag.n == 0:
        return NOT_MET, {"reason": "empty graph"}
    if not a.inv.bipartite:
        return NOT_MET, {"reason": "graph is not bipartite"}
    return _tree_shape_conclusion(a)


def _prop_2_9a(a: InstanceAnalysis):
    """Nil annihilator + finite bipartite graph: star or four-vertex path."""
    if not a.ann_nil:
        return NOT_MET, {"reason": "annihilator is not nil"}
    if a.ag.n == 0:
        return NOT_MET, {"reason": "empty graph"}
    if not a.inv.bipartite:
        return NOT_MET, {"reason": "graph is not bipartite"}
    star = a.inv.is_star
    p4 = a.inv.is_path4
    if star or p4:
        return PASS, {"shape": "star" if star else "path_4"}
    return FAIL, {"shape": sorted(a.inv.shape)}


def _prop_2_9b(a: InstanceAnalysis):
    """Nil annihilator + regular graph of finite degree: complete graph."""
    if not a.ann_nil:
        return NOT_MET, {"reason": "annihilator is not nil"}
    if a.ag.n == 0:
        return NOT_MET, {"reason": "empty graph"}
    if "regular" not in a.inv.shape:
        return NOT_MET, {"reason": "graph is not regular"}
    if "complete" in a.inv.shape:
        return PASS, {"order": a.ag.n}
    return FAIL, {"degree_sequence": list(a.inv.degree_sequence)}


def _saturate(module: Module, s_set, seed, fact):
    """Least saturated S-closed superset of the seed, or None.

    Saturation demands that every factorization r*m = x of a member has
    r in S (and pulls m in); S-closure multiplies members by S.  Both are
    monotone, so a worklist either stabilises or hits an unfixable
    factorization and reports failure.
    """
    members = set(seed)
    queue = list(seed)
    while queue:
        x = queue.pop()
        for r, m in fact[x]:
            if r not in s_set:
                return None
            if m not in members:
                members.add(m)
                queue.append(m)
        for s in s_set:
            y = module.smul(s, x)
            if y not in members:
                members.add(y)
                queue.append(y)
    return frozenset(members)


_THM_2_10_CAP = 64


def _thm_2_10(a: InstanceAnalysis):
    """For cyclic M and saturated S-closed S*, submodules maximal in the
    complement of S* are prime.  Run over single-generator multiplicative
    sets with S* the least saturated S-closed superset of an orbit S*m."""
    if a.cyclic_gen is None:
        return NOT_MET, {"reason": "not cyclic"}
    m = a.module
    ring = m.ring
    if m.size > _THM_2_10_CAP or ring.cardinality > _THM_2_10_CAP:
        return SKIPPED, {
            "reason": f"predicate scale cap: |M| <= {_THM_2_10_CAP} and |R| <= {_THM_2_10_CAP}",
            "cap": _THM_2_10_CAP,
        }
    fact = {x: [] for x in m.elements}
    for r in ring.elements():
        for x in m.elements:
            fact[m.smul(r, x)].append((r, x))
    lattice = a.lattice
    pairs = 0
    seen_s = set()
    for z in ring.elements():
        s_clo = mult_closure(ring, [z]).closure
        if s_clo in seen_s:
            continue
        seen_s.add(s_clo)
        seen_orbits = set()
        for seed_elem in m.elements:
            orbit = frozenset(m.smul(s, seed_elem) for s in s_clo)
            if orbit in seen_orbits:
                continue
            seen_orbits.add(orbit)
            sat = _saturate(m, s_clo, orbit, fact)
            if sat is None or m.zero in sat:
                continue
            cands = [s for s in lattice.all if not (s.elements & sat)]
            maximal = [
                s
                for s in cands
                if not any(t is not s and s.elements < t.elements for t in cands)
            ]
            if not maximal:
                continue
            pairs += 1
            for n in maximal:
                if not m.is_prime_submodule(n):
                    return FAIL, {
                        "z": list(z),
                        "saturated_size": len(sat),
                        "non_prime_maximal": _sub_ref(n),
                    }
    if pairs == 0:
        return NOT_MET, {"reason": "no saturated S-closed subsets arise"}
    return PASS, {"pairs_checked": pairs}


def _thm_2_11(a: InstanceAnalysis):
    """Cyclic, nil annihilator, at least three minimal primes: the graph has
    a cycle."""
    if a.cyclic_gen is None or not a.ann_nil or len(a.mins) < 3:
        return NOT_MET, {"reason": "needs cyclic, nil annihilator, |Min| >= 3"}
    if a.inv.girth is not None:
        return PASS, {"girth": a.inv.girth}
    return FAIL, {"shape": sorted(a.inv.shape)}


def _thm_2_12(a: InstanceAnalysis):
    """Cyclic, nonzero prime radical of 0, nil annihilator, exactly two
    minimal primes: a cycle or the four-vertex path."""
    if (
        a.cyclic_gen is None
        or a.rad0.is_zero
        or not a.ann_nil
        or len(a.mins) != 2
    ):
        return NOT_MET, {
            "reason": "needs cyclic, rad(0) != 0, nil annihilator, |Min| = 2"
        }
    if a.inv.girth is not None or a.inv.is_path4:
        return PASS, {"girth": a.inv.girth, "shape": sorted(a.inv.shape)}
    return FAIL, {"shape": sorted(a.inv.shape)}


def _localization_setup(a: InstanceAnalysis):
    s, avoids, loc, image_analysis = a.loc_min
    if not avoids:
        return None, (NOT_MET, {"reason": "S meets the zero divisors on M"})
    return (s, loc, image_analysis), None


def _thm_2_13(a: InstanceAnalysis):
    """Localizing at the minimal-prime complement (no zero divisors on M)
    cannot raise the clique number; it preserves it for semiprime modules.
    Also checks the vertex map: products vanish before iff after."""
    setup, miss = _localization_setup(a)
    if miss:
        return miss
    _, loc, img = setup
    before, after = a.inv.clique_number, img.inv.clique_number
    if after > before:
        return FAIL, {"clique_before": before, "clique_after": after}
    if a.semiprime and after != before:
        return FAIL, {
            "semiprime": True,
            "clique_before": before,
            "clique_after": after,
        }
    zero = a.module.zero_submodule()
    img_zero = loc.image.zero_submodule()
    for n, k in itertools.combinations_with_replacement(
        [s for s in a.lattice.all if not s.is_zero], 2
    ):
        pre = a.module.product(n, k) == zero
        post = loc.image.product(
            image_submodule(loc, n), image_submodule(loc, k)
        ) == img_zero
        if pre != post:
            return FAIL, {
                "pair": [_sub_ref(n), _sub_ref(k)],
                "product_zero_before": pre,
                "product_zero_after": post,
            }
    return PASS, {
        "clique_before": before,
        "clique_after": after,
        "semiprime": a.semiprime,
    }


def _cor_2_15(a: InstanceAnalysis):
    """Same localization: chromatic number does not increase; equality for
    semiprime modules."""
    setup, miss = _localization_setup(a)
    if miss:
        return miss
    _, _, img = setup
    before, after = a.inv.chromatic_number, img.inv.chromatic_number
    if after > before or (a.semiprime and after != before):
        return FAIL, {"chromatic_before": before, "chromatic_after": after,
                      "semiprime": a.semiprime}
    return PASS, {"chromatic_before": before, "chromatic_after": after,
                  "semiprime": a.semiprime}


def _cor_2_14(a: InstanceAnalysis):
    """Semiprime modules: localizing at R minus Z(M) preserves the clique
    number."""
    if not a.semiprime:
        return NOT_MET, {"reason": "module is not semiprime"}
    _, _, img = a.loc_zdiv
    before, after = a.inv.clique_number, img.inv.clique_number
    if before != after:
        return FAIL, {"clique_before": before, "clique_after": after}
    return PASS, {"clique_number": before}


def _cor_2_16(a: InstanceAnalysis):
    """Semiprime modules: localizing at R minus Z(M) preserves the chromatic
    number."""
    if not a.semiprime:
        return NOT_MET, {"reason": "module is not semiprime"}
    _, _, img = a.loc_zdiv
    before, after = a.inv.chromatic_number, img.inv.chromatic_number
    if before != after:
        return FAIL, {"chromatic_before": before, "chromatic_after": after}
    return PASS, {"chromatic_number": before}


def _thm_2_17(a: InstanceAnalysis):
    """Cyclic modules split under localization at the minimal-prime
    complement into one component per minimal prime, cut out by orthogonal
    idempotents summing to the localization idempotent."""
    if a.cyclic_gen is None:
        return NOT_MET, {"reason": "not cyclic"}
    try:
        rep = check_product_decomposition(a.module)
    except InternalCheckError as exc:
        return FAIL, {"check": str(exc)}
    return PASS, {
        "idempotent": list(rep.idem),
        "component_idempotents": [list(e) for e in rep.component_idempotents],
        "component_sizes": rep.sizes(),
    }


def _thm_2_18(a: InstanceAnalysis):
    """The constructed witnesses form a clique of size |Min| in the graph.

    Scoped to |Min| >= 2: with a single minimal prime the construction
    degenerates to the improper submodule, which is not a vertex."""
    if a.cyclic_gen is None:
        return NOT_MET, {"reason": "not cyclic"}
    if len(a.mins) < 2:
        return NOT_MET, {"reason": "needs |Min| >= 2"}
    try:
        witnesses, report = a.module.min_prime_clique_witness()
    except InternalCheckError as exc:
        return FAIL, {"construction": str(exc)}
    index = {v.encoding: i for i, v in enumerate(a.ag.vertices)}
    ids = []
    for w in witnesses:
        if w.encoding not in index:
            return FAIL, {"witness_not_vertex": _sub_ref(w)}
        ids.append(index[w.encoding])
    for i, j in itertools.combinations(ids, 2):
        if not a.ag.has_edge(i, j):
            return FAIL, {"non_adjacent_pair": [i, j]}
    return PASS, {
        "witness": [_sub_ref(w) for w in witnesses],
        **report,
    }


def _cor_2_19(a: InstanceAnalysis):
    """Cyclic modules: the clique number is at least the number of minimal
    primes, and three or more minimal primes force girth 3.

    Scoped to non-simple modules: a simple module has an empty graph but one
    minimal prime, so the inequality has no graph to live in."""
    if a.cyclic_gen is None:
        return NOT_MET, {"reason": "not cyclic"}
    if a.simple:
        return NOT_MET, {"reason": "simple module (empty graph)"}
    n = len(a.mins)
    if a.inv.clique_number < n:
        return FAIL, {"clique_number": a.inv.clique_number, "min_primes": n}
    if n >= 3 and a.inv.girth != 3:
        return FAIL, {"girth": a.inv.girth, "min_primes": n}
    return PASS, {
        "clique_number": a.inv.clique_number,
        "min_primes": n,
        "girth": a.inv.girth,
    }


def _thm_2_20(a: InstanceAnalysis):
    """Cyclic with zero prime radical: chromatic = clique = |Min|.

    Scoped to non-simple modules, as for the clique bound."""
    if a.cyclic_gen is None or not a.rad0.is_zero:
        return NOT_MET, {"reason": "needs cyclic with rad(0) = 0"}
    if a.simple:
        return NOT_MET, {"reason": "simple module (empty graph)"}
    n = len(a.mins)
    if a.inv.chromatic_number == a.inv.clique_number == n:
        return PASS, {"value": n}
    return FAIL, {
        "chromatic_number": a.inv.chromatic_number,
        "clique_number": a.inv.clique_number,
        "min_primes": n,
    }


def _thm_2_21(a: InstanceAnalysis):
    """Clique number 2 exactly when chromatic number 2, on every instance."""
    cl, ch = a.inv.clique_number, a.inv.chromatic_number
    if (cl == 2) == (ch == 2):
        return PASS, {"clique_number": cl, "chromatic_number": ch}
    return FAIL, {"clique_number": cl, "chromatic_number": ch}


def _star_conclusion(a: InstanceAnalysis):
    if a.inv.is_star:
        return PASS, {"order": a.ag.n}
    return FAIL, {"shape": sorted(a.inv.shape)}


def _thm_2_22(a: InstanceAnalysis):
    """Nil annihilator, one minimal prime, triangle-free graph: a star.
    Empty graphs are out of scope (a star needs a centre)."""
    if not a.ann_nil or len(a.mins) != 1:
        return NOT_MET, {"reason": "needs nil annihilator and |Min| = 1"}
    if a.ag.n == 0:
        return NOT_MET, {"reason": "empty graph"}
    if not a.inv.triangle_free:
        return NOT_MET, {"reason": "graph has a triangle"}
    return _star_conclusion(a)


def _cor_2_23(a: InstanceAnalysis):
    """Nil annihilator, one minimal prime, bipartite graph: a star."""
    if not a.ann_nil or len(a.mins) != 1:
        return NOT_MET, {"reason": "needs nil annihilator and |Min| = 1"}
    if a.ag.n == 0:
        return NOT_MET, {"reason": "empty graph"}
    if not a.inv.bipartite:
        return NOT_MET, {"reason": "graph is not bipartite"}
    return _star_conclusion(a)


PREDICATES = {
    "prop_2_5": _prop_2_5,
    "lemma_2_4": _lemma_2_4,
    "lemma_2_6": _lemma_2_6,
    "thm_2_7": _thm_2_7,
    "thm_2_8": _thm_2_8,
    "prop_2_9a": _prop_2_9a,
    "prop_2_9b": _prop_2_9b,
    "thm_2_10": _thm_2_10,
    "thm_2_11": _thm_2_11,
    "thm_2_12": _thm_2_12,
    "thm_2_13": _thm_2_13,
    "cor_2_14": _cor_2_14,
    "cor_2_15": _cor_2_15,
    "cor_2_16": _cor_2_16,
    "thm_2_17": _thm_2_17,
    "thm_2_18": _thm_2_18,
    "cor_2_19": _cor_2_19,
    "thm_2_20": _thm_2_20,
    "thm_2_21": _thm_2_21,
    "thm_2_22": _thm_2_22,
    "cor_2_23": _cor_2_23,
}

THEOREM_IDS = tuple(PREDICATES)


@dataclass(frozen=True)
class PredicateResult:
    theorem_id: str
    instance_id: str
    status: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "instance": self.instance_id,
            "status": self.status,
            "witness": self.witness,
        }


def run_predicate(theorem_id: str, module: Module) -> PredicateResult:
    if theorem_id not in PREDICATES:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    a = get_analysis(module)
    iid = instance_id(module)
    try:
        status, witness = PREDICATES[theorem_id](a)
    except ResourceLimitError as exc:
        return PredicateResult(theorem_id, iid, SKIPPED,
                               {"reason": str(exc), "cap": exc.limit})
    except InternalCheckError as exc:
        return PredicateResult(theorem_id, iid, FAIL, {"internal_error": str(exc)})
    return PredicateResult(theorem_id, iid, status, witness)


# -- corpus generation ----------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    """Instance families and size caps for the generated corpus."""

    max_ring_card: int = 36
    max_module_card: int = 128
    cyclic: bool = True
    products: bool = True
    fxs_fxd: bool = True
    prime_power_towers: bool = True

    def to_dict(self) -> dict:
        return {
            "max_ring_card": self.max_ring_card,
            "max_module_card": self.max_module_card,
            "families": {
                "cyclic": self.cyclic,
                "products": self.products,
                "fxs_fxd": self.fxs_fxd,
                "prime_power_towers": self.prime_power_towers,
            },
        }


_SMALL_PRIMES = (2, 3, 5, 7)


def generate_corpus(spec: CorpusSpec) -> list[Module]:
    """Deterministic instance enumeration: cyclic Z_m over Z_n, product rings
    with product modules, explicit FxS / FxD shapes, prime-power towers.
    Duplicates across families keep their first position."""
    out: dict[str, Module] = {}

    def add(moduli, factors):
        ring = Ring(moduli)
        if ring.cardinality > spec.max_ring_card:
            return
        module = Module(ring, factors)
        if not 2 <= module.size <= spec.max_module_card:
            return
        out.setdefault(instance_id(module), module)

    if spec.cyclic:
        for n in range(2, spec.max_ring_card + 1):
            for m in divisors(n):
                if m > 1:
                    add([n], [(m, 0)])
    if spec.products:
        for a in range(2, 17):
            for b in range(a, 17):
                if a * b > spec.max_ring_card:
                    continue
                for d1 in divisors(a):
                    for d2 in divisors(b):
                        if (d1, d2) != (1, 1):
                            add([a, b], [(d1, 0), (d2, 1)])
    if spec.fxs_fxd:
        for p in _SMALL_PRIMES:
            for q in _SMALL_PRIMES:
                add([p, q * q], [(p, 0), (q * q, 1)])
        for p in _SMALL_PRIMES:
            for q in _SMALL_PRIMES:
                if p < q:
                    add([p, q], [(p, 0), (q, 1)])
    if spec.prime_power_towers:
        for p in (2, 3, 5):
            b = 1
            while p ** (b + 1) <= spec.max_ring_card:
                b += 1
            for height in range(1, b + 1):
                for a in range(1, height + 1):
                    add([p**height], [(p**a, 0)])
    return list(out.values())


# -- suite runner ------------------------------------------------------------------


@dataclass
class SuiteReport:
    corpus_spec: CorpusSpec | None
    theorem_ids: tuple[str, ...]
    results: list[PredicateResult] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, dict[str, int]]:
        table = {
            tid: {PASS: 0, FAIL: 0, NOT_MET: 0, SKIPPED: 0}
            for tid in self.theorem_ids
        }
        for r in self.results:
            table[r.theorem_id][r.status] += 1
        return table

    @property
    def violations(self) -> list[PredicateResult]:
        return [r for r in self.results if r.status == FAIL]

    @property
    def skips(self) -> list[PredicateResult]:
        return [r for r in self.results if r.status == SKIPPED]

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "corpus": None if self.corpus_spec is None else self.corpus_spec.to_dict(),
            "theorems": self.counts,
            "results": [r.to_dict() for r in self.results],
            "violations": bool(self.violations),
            "skips": bool(self.skips),
        }


def _evaluate_module(module: Module, theorem_ids) -> list[PredicateResult]:
    iid = instance_id(module)
    try:
        get_analysis(module).lattice
    except ResourceLimitError as exc:
        return [
            PredicateResult(tid, iid, SKIPPED, {"reason": str(exc), "cap": exc.limit})
            for tid in theorem_ids
        ]
    return [run_predicate(tid, module) for tid in theorem_ids]


def _evaluate_spec(args) -> list[tuple]:
    moduli, factors, theorem_ids = args
    module = Module(Ring(moduli), factors)
    return [
        (r.theorem_id, r.instance_id, r.status, r.witness)
        for r in _evaluate_module(module, theorem_ids)
    ]


def run_suite(
    modules,
    theorem_ids=None,
    corpus_spec: CorpusSpec | None = None,
    jobs: int = 1,
) -> SuiteReport:
    """Evaluate the predicates over the corpus, in deterministic corpus order.

    Instances are independent; with jobs > 1 they are evaluated in a process
    pool, and the report is assembled in corpus order either way.
    """
    if theorem_ids is None:
        ids = THEOREM_IDS
    else:
        ids = tuple(theorem_ids)
        unknown = [t for t in ids if t not in PREDICATES]
        if unknown:
            raise KeyError(f"unknown theorem ids: {unknown}")
    report = SuiteReport(corpus_spec, ids)
    if jobs <= 1:
        for module in modules:
            report.results.extend(_evaluate_module(module, ids))
        return report
    payload = [(m.ring.moduli, m.factors, ids) for m in modules]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        for rows in pool.map(_evaluate_spec, payload):
            report.results.extend(
                PredicateResult(tid, iid, status, witness)
                for tid, iid, status, witness in rows
            )
    return report
