"""Statement-by-statement verification over concrete instances.

Each registered statement is checked on each instance and classified as
verified, falsified (with the first counterexample in scan order),
hypothesis-not-met, or not-applicable.  Serialization omits timing so
repeated runs are byte-identical.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from . import natural_map as nmap
from . import spectra
from .errors import EmptySpectrum
from .instances import InstanceDescriptor, build_instance, catalog
from .le_modules import (
    LeModuleInstance,
    colon,
    colon_set,
    ideal_action,
    is_prime_submodule_element,
    spectrum,
    submodule_elements,
    sum_submodule_elements,
)
from .rings import Ideal, all_ideals, is_prime_ideal, spec_ring

VERIFIED = "verified"
FALSIFIED = "falsified"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"
NOT_APPLICABLE = "not-applicable"

Outcome = tuple[str, str | None, str | None]


class InstanceContext:
    """Shared lazily-computed artifacts for one instance."""

    def __init__(self, mod: LeModuleInstance):
        self.mod = mod

    @cached_property
    def submods(self) -> tuple[int, ...]:
        return submodule_elements(self.mod)

    @cached_property
    def points(self) -> tuple[int, ...]:
        return spectrum(self.mod)

    @cached_property
    def ideals(self) -> tuple[Ideal, ...]:
        return all_ideals(self.mod.ring)

    @cached_property
    def topologies(self) -> spectra.Topologies:
        return spectra.build_topologies(self.mod)

    @cached_property
    def nm(self) -> nmap.NaturalMap:
        return nmap.build_natural_map(self.mod)

    def label(self, n: int) -> str:
        return self.mod.label(n)

    def point_subsets(self, cap: int = 12) -> Iterable[tuple[int, ...]]:
        pts = self.points
        if len(pts) > cap:
            sizes: Iterable[int] = (1, 2, 3, len(pts))
        else:
            sizes = range(1, len(pts) + 1)
        for k in sizes:
            yield from itertools.combinations(pts, k)

    def submod_families(self, cap: int = 10) -> Iterable[tuple[int, ...]]:
        subs = self.submods
        if len(subs) > cap:
            sizes: Iterable[int] = (1, 2, 3, len(subs))
        else:
            sizes = range(1, len(subs) + 1)
        for k in sizes:
            yield from itertools.combinations(subs, k)


def _fmt_clauses(report: nmap.EquivalenceReport) -> str:
    return " ".join(
        f"{name}={value}" for name, value in zip(report.names, report.values)
    )


def _check_adjunction(ctx: InstanceContext) -> Outcome:
    mod = ctx.mod
    from .le_modules import galois_adjunction_check

    for i in ctx.ideals:
        for n in ctx.submods:
            if not galois_adjunction_check(mod, i, n):
                return (
                    FALSIFIED,
                    f"I={i.sorted_members()}, n={ctx.label(n)}",
                    None,
                )
    for p in ctx.points:
        if not is_prime_ideal(mod.ring, colon(mod, p)):
            return FALSIFIED, f"p={ctx.label(p)}", None
    return VERIFIED, None, f"ideals={len(ctx.ideals)} submods={len(ctx.submods)}"


def _check_variety_identities(ctx: InstanceContext) -> Outcome:
    mod = ctx.mod
    pts = frozenset(ctx.points)
    v, vs = spectra.variety, spectra.variety_star
    if not (vs(mod, mod.zero_m) == pts == v(mod, mod.zero_m)):
        return FALSIFIED, "n=0_M", None
    top = mod.lattice.top
    if not (vs(mod, top) == frozenset() == v(mod, top)):
        return FALSIFIED, "n=e", None
    for fam in ctx.submod_families():
        inter_star = pts
        inter_plain = pts
        for n in fam:
            inter_star &= vs(mod, n)
            inter_plain &= v(mod, n)
        colon_sum = sum_submodule_elements(
            mod, [ideal_action(mod, colon(mod, n)) for n in fam]
        )
        if inter_star != vs(mod, colon_sum):
            return FALSIFIED, f"family={[ctx.label(n) for n in fam]}", "colon-sum"
        if inter_plain != v(mod, sum_submodule_elements(mod, fam)):
            return FALSIFIED, f"family={[ctx.label(n) for n in fam]}", "plain-sum"
    meet = mod.lattice.meet_table
    for n, l in itertools.combinations_with_replacement(ctx.submods, 2):
        if vs(mod, n) | vs(mod, l) != vs(mod, meet[n][l]):
            return FALSIFIED, f"n={ctx.label(n)}, l={ctx.label(l)}", "star-union"
        if not (v(mod, n) | v(mod, l)) <= v(mod, meet[n][l]):
            return FALSIFIED, f"n={ctx.label(n)}, l={ctx.label(l)}", "plain-union"
        same_colon = colon_set(mod, n) == colon_set(mod, l)
        if same_colon and vs(mod, n) != vs(mod, l):
            return FALSIFIED, f"n={ctx.label(n)}, l={ctx.label(l)}", "colon-transfer"
        both_prime = is_prime_submodule_element(mod, n) and is_prime_submodule_element(
            mod, l
        )
        if both_prime and vs(mod, n) == vs(mod, l) and not same_colon:
            return FALSIFIED, f"n={ctx.label(n)}, l={ctx.label(l)}", "prime-converse"
    for n in ctx.submods:
        if not spectra.vstar_decomposition_check(mod, n):
            return FALSIFIED, f"n={ctx.label(n)}", "decomposition"
    for i in ctx.ideals:
        ie = ideal_action(mod, i)
        if v(mod, ie) != vs(mod, ie):
            return FALSIFIED, f"I={i.sorted_members()}", "ideal-action-variety"
    for r in range(mod.ring.order):
        re = mod.action[r][top]
        if v(mod, re) != vs(mod, re):
            return FALSIFIED, f"r={r}", "scalar-action-variety"
    return VERIFIED, None, None


def _check_families_identical(ctx: InstanceContext) -> Outcome:
    mod = ctx.mod
    if spectra.star_family(mod) != spectra.prime_family(mod):
        return FALSIFIED, "closed-set families differ", None
    for i, j in itertools.combinations_with_replacement(ctx.ideals, 2):
        if not spectra.union_intersection_check(mod, i, j):
            return (
                FALSIFIED,
                f"I={i.sorted_members()}, J={j.sorted_members()}",
                None,
            )
    top = mod.lattice.top
    vs = spectra.variety_star
    for r, s in itertools.combinations_with_replacement(range(mod.ring.order), 2):
        re, se = mod.action[r][top], mod.action[s][top]
        rse = mod.action[mod.ring.mul[r][s]][top]
        if vs(mod, re) | vs(mod, se) != vs(mod, rse):
            return FALSIFIED, f"r={r}, s={s}", "scalar-union"
    is_top = spectra.is_top_le_module(mod)
    if is_top:
        if not set(spectra.star_family(mod)) <= set(spectra.quasi_family(mod)):
            return FALSIFIED, "star family not inside quasi family", None
        return VERIFIED, None, "top instance: finer-topology clause checked"
    return VERIFIED, None, "not a top instance: finer-topology clause vacuous"


def _check_continuity(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    if nmap.continuity_check(ctx.nm):
        return VERIFIED, None, None
    return FALSIFIED, "preimage identity failed", None


def _check_injectivity(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    rep = nmap.injectivity_battery(ctx.nm)
    if rep.equivalent:
        return VERIFIED, None, _fmt_clauses(rep)
    return FALSIFIED, _fmt_clauses(rep), None


def _check_openclosed(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    if not nmap.homeomorphism_check(ctx.nm):
        return FALSIFIED, "bijective but not a homeomorphism", None
    rep = nmap.surjectivity_and_openclosed(ctx.nm)
    if not rep.surjective:
        return (
            HYPOTHESIS_NOT_MET,
            None,
            "psi not surjective; bijective<->homeomorphism clause checked",
        )
    if rep.ok:
        return VERIFIED, None, None
    return (
        FALSIFIED,
        f"closed_image_ok={rep.closed_image_ok} open_image_ok={rep.open_image_ok}",
        None,
    )


def _check_connectedness(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    rep = nmap.connectedness_equivalence(ctx.nm)
    if not rep.hypothesis_met:
        return HYPOTHESIS_NOT_MET, None, "psi not surjective"
    if rep.ok:
        return VERIFIED, None, _fmt_clauses(rep.clauses)
    return FALSIFIED, _fmt_clauses(rep.clauses), None


def _check_dr(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    for r in range(ctx.mod.ring.order):
        if not nmap.dr_preimage_check(ctx.nm, r):
            return FALSIFIED, f"r={r}", None
    return VERIFIED, None, None


def _check_basis(ctx: InstanceContext) -> Outcome:
    rep = spectra.basis_checks(ctx.mod)
    if rep.ok:
        return VERIFIED, None, None
    witness = rep.pair_witness or rep.ideal_witness or rep.cover_witness
    return FALSIFIED, str(witness), None


def _check_quasi_compact_base(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    if not ctx.nm.is_surjective():
        return HYPOTHESIS_NOT_MET, None, "psi not surjective"
    mod = ctx.mod
    top = ctx.topologies.star
    for r in range(mod.ring.order):
        if not spectra.is_quasi_compact_subset(top, spectra.basic_open(mod, r)):
            return FALSIFIED, f"r={r}", None
    if not spectra.is_quasi_compact_subset(top, top.point_set()):
        return FALSIFIED, "whole space", None
    opens = set(spectra.open_sets(top))
    for a, b in itertools.combinations_with_replacement(sorted(opens, key=sorted), 2):
        if a & b not in opens:
            return FALSIFIED, "intersection not open", None
    if not spectra.basis_checks(mod).covers_ok:
        return FALSIFIED, "basic opens do not cover", None
    return VERIFIED, None, spectra.QUASI_COMPACT_NOTE


def _check_closure_formula(ctx: InstanceContext) -> Outcome:
    mod = ctx.mod
    top = ctx.topologies.star
    closed = set(top.closed_sets)
    for ys in ctx.point_subsets():
        y = frozenset(ys)
        vs = spectra.variety_star(mod, spectra.im_meet(mod, ys))
        if vs != spectra.closure(top, y):
            return FALSIFIED, f"Y={[ctx.label(p) for p in ys]}", None
        if (y in closed) != (vs == y):
            return FALSIFIED, f"Y={[ctx.label(p) for p in ys]}", "closed-iff"
    return VERIFIED, None, None


def _check_point_closures(ctx: InstanceContext) -> Outcome:
    mod = ctx.mod
    top = ctx.topologies.star
    family = set(top.closed_sets)
    colons = {p: colon_set(mod, p) for p in ctx.points}
    phi = set(colons.values())
    for p in ctx.points:
        if spectra.closure(top, [p]) != spectra.variety_star(mod, p):
            return FALSIFIED, f"p={ctx.label(p)}", "closure-formula"
        for q in ctx.points:
            in_closure = q in spectra.closure(top, [p])
            colon_incl = colons[p] <= colons[q]
            vs_incl = spectra.variety_star(mod, q) <= spectra.variety_star(mod, p)
            if not (in_closure == colon_incl == vs_incl):
                return FALSIFIED, f"p={ctx.label(p)}, q={ctx.label(q)}", "specialization"
        singleton_closed = frozenset([p]) in family
        maximal = not any(colons[p] < c for c in phi)
        fiber_one = sum(1 for q in ctx.points if colons[q] == colons[p]) == 1
        if singleton_closed != (maximal and fiber_one):
            return FALSIFIED, f"p={ctx.label(p)}", "closed-point-criterion"
    if not spectra.phi_and_t1_check(mod):
        return FALSIFIED, "T1 criterion", None
    return VERIFIED, None, None


def _check_vstar_irreducible(ctx: InstanceContext) -> Outcome:
    mod = ctx.mod
    top = ctx.topologies.star
    for p in ctx.points:
        vp = spectra.variety_star(mod, p)
        if not spectra.is_closed(top, vp):
            return FALSIFIED, f"p={ctx.label(p)}", "not closed"
        if not spectra.is_irreducible(top, vp):
            return FALSIFIED, f"p={ctx.label(p)}", "not irreducible"
    return VERIFIED, None, None


def _criteria_outcome(ctx: InstanceContext, wanted: tuple[str, ...]) -> Outcome:
    mod = ctx.mod
    for ys in ctx.point_subsets():
        for check in spectra.irreducibility_criteria(mod, ys):
            if check.name in wanted and not check.holds:
                return (
                    FALSIFIED,
                    f"Y={[ctx.label(p) for p in ys]}",
                    check.name,
                )
    return VERIFIED, None, None


def _check_irreducible_prime(ctx: InstanceContext) -> Outcome:
    return _criteria_outcome(
        ctx,
        ("meet-prime-implies-irreducible", "irreducible-implies-colon-of-meet-prime"),
    )


def _check_irreducible_families(ctx: InstanceContext) -> Outcome:
    return _criteria_outcome(
        ctx,
        (
            "chain-implies-irreducible",
            "colon-fiber-implies-irreducible",
            "colon-fiber-of-maximal-ideal-closed-irreducible",
            "prime-colon-meet-with-nonempty-fiber-implies-irreducible",
        ),
    )


def _check_generic_points(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    if not ctx.nm.is_surjective():
        return HYPOTHESIS_NOT_MET, None, "psi not surjective"
    if nmap.component_minimal_prime_bijection(ctx.nm):
        comps = spectra.irreducible_components(ctx.topologies.star)
        return VERIFIED, None, f"components={len(comps)}"
    return FALSIFIED, "component/minimal-prime correspondence", None


def _check_spectral_battery(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    if not ctx.nm.is_surjective():
        return HYPOTHESIS_NOT_MET, None, "psi not surjective"
    rep = nmap.spectral_battery(ctx.nm)
    if rep.equivalent:
        return VERIFIED, None, _fmt_clauses(rep)
    return FALSIFIED, _fmt_clauses(rep), None


def _check_multiplication_spectral(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    mult = nmap.is_multiplication_le_module(ctx.mod)
    surj = ctx.nm.is_surjective()
    if not (mult and surj):
        return (
            HYPOTHESIS_NOT_MET,
            None,
            f"multiplication={mult} surjective={surj}",
        )
    if nmap.multiplication_spectral_check(ctx.nm):
        return VERIFIED, None, None
    return FALSIFIED, "spectrum not spectral", None


def _check_image_closed(ctx: InstanceContext) -> Outcome:
    if ctx.nm.degenerate:
        return NOT_APPLICABLE, None, "degenerate: no reduced ring"
    rep = nmap.image_closed_criterion(ctx.nm)
    if not rep.image_closed:
        return HYPOTHESIS_NOT_MET, None, "image not closed"
    if rep.ok:
        return VERIFIED, None, f"spectral={rep.spectral} injective={rep.injective}"
    return FALSIFIED, f"spectral={rep.spectral} injective={rep.injective}", None


def _check_finite_spec(ctx: InstanceContext) -> Outcome:
    try:
        ok = nmap.finite_spec_criterion(ctx.mod)
    except EmptySpectrum:
        return HYPOTHESIS_NOT_MET, None, "empty spectrum"
    if ok:
        return VERIFIED, None, None
    return FALSIFIED, "spectral<->small-fibers failed", None


@dataclass(frozen=True)
class Statement:
    sid: str
    title: str
    claim: str
    check: Callable[[InstanceContext], Outcome]


STATEMENTS: tuple[Statement, ...] = (
    Statement(
        "L2.1",
        "ideal-action adjunction",
        "Ie <= n iff I inside (n:e); (p:e) is prime for every spectrum point p",
        _check_adjunction,
    ),
    Statement(
        "P3.1",
        "variety identities",
        "V*(0)=X=V(0); V*(e)=0=V(e); intersections via sums; unions via meets; "
        "colon-equality transfer; V*(n)=V*((n:e)e)=V((n:e)e); V(Ie)=V*(Ie)",
        _check_variety_identities,
    ),
    Statement(
        "T3.5",
        "closed-set families coincide",
        "colon-variety family equals ideal-action family; both union/intersection "
        "stable; plain family finer when union-closed",
        _check_families_identical,
    ),
    Statement(
        "P4.1",
        "natural map continuity",
        "preimage of ring variety of I-bar equals variety of Ie for I containing Ann",
        _check_continuity,
    ),
    Statement(
        "P4.2",
        "injectivity battery",
        "psi injective iff colon varieties separate points iff colon fibers small",
        _check_injectivity,
    ),
    Statement(
        "T4.3",
        "open and closed images",
        "onto psi maps colon varieties onto ring varieties and complements onto "
        "complements; bijective iff homeomorphism",
        _check_openclosed,
    ),
    Statement(
        "T4.5",
        "connectedness equivalence",
        "onto psi: module spectrum connected iff ring spectrum connected iff "
        "idempotents trivial; quasi-local or prime annihilator forces connected",
        _check_connectedness,
    ),
    Statement(
        "P5.1",
        "basic-open preimages",
        "preimage of D_rbar equals X_r; image of X_r inside D_rbar, equal when onto",
        _check_dr,
    ),
    Statement(
        "T5.3",
        "basic opens form a base",
        "X_rs = X_r n X_s; V*(Ie) equals the intersection of V*(ae); every open "
        "set is a union of basic opens",
        _check_basis,
    ),
    Statement(
        "T5.4",
        "quasi-compact base",
        "onto psi: each X_r and the whole space quasi-compact; quasi-compact opens "
        "intersection-stable and a base",
        _check_quasi_compact_base,
    ),
    Statement(
        "P6.1",
        "closure formula",
        "closure of Y is V*(meet of Y); Y closed iff V*(meet of Y) = Y",
        _check_closure_formula,
    ),
    Statement(
        "P6.2",
        "point closures and T1",
        "closure{p}=V*(p); specialization via colon inclusion; closed points and "
        "T1 via maximal colon plus singleton fibers",
        _check_point_closures,
    ),
    Statement(
        "C6.3",
        "point varieties irreducible",
        "V*(p) is an irreducible closed set for every point p",
        _check_vstar_irreducible,
    ),
    Statement(
        "P6.4",
        "irreducibility vs primality",
        "prime meet forces irreducible; irreducible forces prime colon of meet",
        _check_irreducible_prime,
    ),
    Statement(
        "P6.5",
        "irreducible families",
        "chains irreducible; colon fibers irreducible, closed for maximal ideals; "
        "prime colon of meet with nonempty fiber forces irreducible",
        _check_irreducible_families,
    ),
    Statement(
        "T6.6",
        "generic points and components",
        "onto psi: irreducible closed sets are point varieties with generic "
        "points; components match minimal primes bijectively",
        _check_generic_points,
    ),
    Statement(
        "T7.1",
        "spectrality battery",
        "onto psi: spectral iff T0 iff separated iff small fibers iff injective "
        "iff homeomorphic",
        _check_spectral_battery,
    ),
    Statement(
        "T7.2",
        "multiplication instances spectral",
        "multiplication instance with onto psi has a spectral spectrum",
        _check_multiplication_spectral,
    ),
    Statement(
        "T7.3",
        "closed-image criterion",
        "closed image: spectral iff injective",
        _check_image_closed,
    ),
    Statement(
        "T7.4",
        "finite-spectrum criterion",
        "nonempty finite spectrum: spectral iff every colon fiber has at most one point",
        _check_finite_spec,
    ),
)


@dataclass(frozen=True)
class StatementResult:
    statement: str
    instance: str
    verdict: str
    witness: str | None
    detail: str | None
    seconds: float


@dataclass(frozen=True)
class VerificationReport:
    results: tuple[StatementResult, ...]

    def counts(self) -> dict[str, int]:
        out = {VERIFIED: 0, FALSIFIED: 0, HYPOTHESIS_NOT_MET: 0, NOT_APPLICABLE: 0}
        for r in self.results:
            out[r.verdict] += 1
        return out

    def falsified(self) -> tuple[StatementResult, ...]:
        return tuple(r for r in self.results if r.verdict == FALSIFIED)

    def for_statement(self, sid: str) -> tuple[StatementResult, ...]:
        return tuple(r for r in self.results if r.statement == sid)


def run_all(descriptors: Sequence[InstanceDescriptor] | None = None) -> VerificationReport:
    """Check every statement on every instance, catalog by default."""
    if descriptors is None:
        descriptors = catalog()
    results = []
    for desc in descriptors:
        ctx = InstanceContext(build_instance(desc))
        for stmt in STATEMENTS:
            started = time.perf_counter()
            verdict, witness, detail = stmt.check(ctx)
            elapsed = time.perf_counter() - started
            results.append(
                StatementResult(stmt.sid, desc.name, verdict, witness, detail, elapsed)
            )
    return VerificationReport(tuple(results))


def serialize_report(report: VerificationReport) -> str:
    """Deterministic JSON; timing is deliberately omitted."""
    payload = {
        "statements": [
            {"id": s.sid, "title": s.title, "claim": s.claim} for s in STATEMENTS
        ],
        "results": [
            {
                "statement": r.statement,
                "instance": r.instance,
                "verdict": r.verdict,
                "witness": r.witness,
                "detail": r.detail,
            }
            for r in report.results
        ],
        "summary": report.counts(),
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def render_text(report: VerificationReport) -> str:
    lines = []
    width = max((len(r.instance) for r in report.results), default=0)
    for r in report.results:
        line = f"{r.instance:<{width}}  {r.statement:<5} {r.verdict}"
        if r.witness:
            line += f"  witness: {r.witness}"
        if r.detail:
            line += f"  [{r.detail}]"
        lines.append(line)
    counts = report.counts()
    lines.append("")
    lines.append(
        "summary: "
        + " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    )
    return "\n".join(lines) + "\n"
