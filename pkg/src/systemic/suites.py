"""Named verification suites. Each sweeps a family of instances and returns a
VerificationReport whose records aggregate the per-configuration outcomes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .core import FiniteSystem, check_system
from .instances import (FINITE_NAMES, SYSTEM_NAMES, FormulaSystem, check_hyperfield,
                        get_instance, krasner_hyperfield, sign_hyperfield)
from .matrices import (all_matrices, column_space, column_space_projectivity,
                       idempotent_family, is_preceq_idempotent_matrix, is_preceq_vnr,
                       matrix_mul)
from .modules import (MapTable, SizeBoundExceeded, SystemicModule, all_maps, classify_map,
                      direct_sum, enumerate_maps, free_module, generates, is_homomorphism,
                      is_null_monic, is_onto, is_preceq_onto, is_quasi_isomorphism, one_minus,
                      system_module)
from .projective import (HypothesisError, Scope, characterizations, dual_basis,
                         is_projective, module_catalog, verify_sch2)
from .report import VerificationReport
from .schanuel import (onto_pairs, projectivity, verify_sch29, verify_trSh, verify_trSh11,
                       verify_trSh118, verify_trSh119)
from .search import BudgetExceeded
from .splitting import (SplitVerificationError, decompose_split, enumerate_splittings,
                        find_splitting, is_preceq_idempotent_map, is_T_idempotent_map)

SUITE_NAMES = ("axioms", "lemma-3.14", "splitdir", "free-projective", "epicspl", "epicspl-h",
               "epicspl-succ", "proj-direct-sum", "projspl", "retractlift", "sch2",
               "vnr-matrix", "dual-basis", "dual-basis-succ", "hyp7", "trsh", "trsh118",
               "trsh11", "trsh119", "sch29")


class UnknownSuite(KeyError):
    pass


# --- aggregation -------------------------------------------------------------------------

@dataclass
class _Tally:
    counts: Counter = field(default_factory=Counter)
    tags: Counter = field(default_factory=Counter)
    witness: object = None
    note: str = ""

    def add(self, verdict, witness=None, note=""):
        self.counts[verdict] += 1
        if verdict == "skipped":
            self.tags[note.split(";")[0]] += 1
        elif verdict in ("fail", "inconclusive") and (
                self.witness is None or (verdict == "fail" and self.counts["fail"] == 1)):
            self.witness, self.note = witness, note


class Collector:
    """Per-clause tallies, emitted in first-seen order."""

    def __init__(self):
        self.tallies: dict[tuple[str, str], _Tally] = {}

    def add(self, clause, anchor, verdict, witness=None, note=""):
        self.tallies.setdefault((clause, anchor), _Tally()).add(verdict, witness, note)

    def check(self, clause, anchor, ok, witness=None, note=""):
        self.add(clause, anchor, "pass" if ok else "fail", None if ok else witness, note)

    def absorb(self, prefix, sub: VerificationReport, config):
        for r in sub.records:
            w = {"config": config, "witness": r.witness} if r.verdict in ("fail", "inconclusive") \
                else None
            self.add(prefix + r.clause, r.anchor, r.verdict, w, r.note)

    def emit(self, rep: VerificationReport):
        for (clause, anchor), t in self.tallies.items():
            c = t.counts
            verdict = next(v for v in ("fail", "inconclusive", "pass", "skipped") if c[v])
            parts = [f"{v}={c[v]}" for v in ("pass", "fail", "skipped", "inconclusive") if c[v]]
            if t.tags:
                parts.append("tags: " + ", ".join(f"{k} x{n}" for k, n in sorted(t.tags.items())))
            note = " ".join(parts)
            if verdict == "skipped":
                rep.add(clause, anchor, "skipped", None, note)
            elif verdict == "pass":
                rep.add(clause, anchor, "pass", None, note)
            else:
                rep.add(clause, anchor, verdict, t.witness,
                        note + (f"; first: {t.note}" if t.note else ""))


def _config(*maps) -> list[str]:
    return [f"{f.source.name}->{f.target.name}: {f!r}" for f in maps]


# --- instance selection -------------------------------------------------------------------

@dataclass
class SuiteScope:
    max_size: int | None = None
    instance: object = None  # a registry name, a FiniteSystem or a SystemicModule
    budget: int | None = None

    def systems(self, default) -> list:
        inst = self.instance
        if inst is None:
            return [get_instance(n) for n in default]
        if isinstance(inst, str):
            inst = get_instance(inst)
        if isinstance(inst, SystemicModule):
            return [inst.scalars]
        return [inst]

    def modules(self, default, k) -> list[tuple[str, list[SystemicModule]]]:
        inst = self.instance
        if isinstance(inst, SystemicModule):
            return [(inst.scalars.name, [inst])]
        out = []
        for S in self.systems(default):
            if isinstance(S, FiniteSystem):
                out.append((S.name, list(module_catalog(S, k))))
        return out

    def size(self, default) -> int:
        return default if self.max_size is None else self.max_size

    def as_dict(self, k=None, default=None) -> dict:
        d = {}
        if k is not None:
            d["max-size"] = k
        inst = self.instance
        if inst is not None:
            d["instance"] = inst if isinstance(inst, str) else inst.name
        elif default is not None:
            d["instances"] = list(default)
        if self.budget is not None:
            d["budget"] = self.budget
        return d


# --- suites ------------------------------------------------------------------------------

def suite_axioms(sc: SuiteScope) -> VerificationReport:
    names = FINITE_NAMES + ("maxplus-st",)
    rep = VerificationReport("axioms", sc.as_dict(default=names))
    for S in sc.systems(names):
        if isinstance(S, FormulaSystem):
            r = S.check_window(-8, 8)
            bad = [c.name for c in r.failed]
            rep.check(f"{S.name}.window-laws", "axioms-window", not bad, bad,
                      note="values in [-8, 8]")
            continue
        if isinstance(S, SystemicModule):
            continue
        r = check_system(S)
        bad = [c.name for c in r.failed]
        rep.check(f"{S.name}.classification", "systemic-axioms", r.is_system,
                  {"failed": bad, "witnesses": {c.name: c.witness for c in r.failed}},
                  note=r.classification)
    if sc.instance is None:
        for H in (krasner_hyperfield(), sign_hyperfield()):
            r = check_hyperfield(H)
            bad = [c.name for c in r.failed]
            rep.check(f"{H.name}.hyperfield", "hyperfield-axioms", not bad, bad)
    return rep


def _splits_of(pi, kind, budget):
    return [c.nu for c in enumerate_splittings(pi, kind, budget, check=False)]


def suite_lemma_3_14(sc: SuiteScope) -> VerificationReport:
    """The four consequences of a one-sided splitting, over all module pairs."""
    default = ("supertrop-B", "sym-bool")
    k = sc.size(5)
    rep = VerificationReport("lemma-3.14", sc.as_dict(k, default))
    col = Collector()
    anchor = "split-consequences"
    for sys_name, mods in sc.modules(default, k):
        for M, N in product(mods, mods):
            tag = f"{sys_name}"
            try:
                pre = all_maps(M, N, "preceq", budget=sc.budget)
                sup = all_maps(M, N, "succeq", budget=sc.budget)
            except BudgetExceeded as e:
                col.add(f"{tag}.enumeration", anchor, "inconclusive", _config(), str(e))
                continue
            for pi in pre:
                hom = classify_map(pi).is_homomorphism
                try:
                    nus = _splits_of(pi, "preceq-split", sc.budget)
                except BudgetExceeded as e:
                    col.add(f"{tag}.i", anchor, "inconclusive", _config(pi), str(e))
                    continue
                for nu in nus:
                    nupi = pi.then(nu)
                    col.check(f"{tag}.i.preceq-onto", anchor, is_preceq_onto(pi), _config(pi, nu))
                    col.check(f"{tag}.i.idempotent", anchor, is_preceq_idempotent_map(nupi),
                              _config(pi, nu))
                    if hom:
                        col.check(f"{tag}.ii.complement-idempotent", anchor,
                                  is_preceq_idempotent_map(one_minus(nupi)), _config(pi, nu))
                if hom:
                    allowed = [sorted(y for y in range(M.size) if pi.table[y] == b)
                               if b in N.tangibles else None for b in range(N.size)]
                    try:
                        nus4 = list(enumerate_maps(N, M, "preceq", allowed, sc.budget))
                    except BudgetExceeded as e:
                        col.add(f"{tag}.iv", anchor, "inconclusive", _config(pi), str(e))
                        continue
                    for nu in nus4:
                        col.check(f"{tag}.iv.onto", anchor, is_onto(pi), _config(pi, nu))
                        col.check(f"{tag}.iv.T-idempotent", anchor,
                                  is_T_idempotent_map(pi.then(nu)), _config(pi, nu))
            for pi in sup:
                try:
                    nus = _splits_of(pi, "succeq-split", sc.budget)
                except BudgetExceeded as e:
                    col.add(f"{tag}.iii", anchor, "inconclusive", _config(pi), str(e))
                    continue
                for nu in nus:
                    col.check(f"{tag}.iii.null-monic", anchor, is_null_monic(nu), _config(pi, nu))
                    col.check(f"{tag}.iii.complement-idempotent", anchor,
                              is_preceq_idempotent_map(one_minus(pi.then(nu))), _config(pi, nu))
    col.emit(rep)
    return rep


def suite_splitdir(sc: SuiteScope) -> VerificationReport:
    """Both split decompositions for every split homomorphism between catalog modules."""
    k = sc.size(4)
    rep = VerificationReport("splitdir", sc.as_dict(k, SYSTEM_NAMES))
    col = Collector()
    anchor = "split-direct-sum"
    for sys_name, mods in sc.modules(SYSTEM_NAMES, k):
        for M, N in product(mods, mods):
            for pi in all_maps(M, N, "homomorphism", budget=sc.budget):
                for kind in ("preceq-split", "h-split"):
                    try:
                        cert = find_splitting(pi, kind, sc.budget)
                    except BudgetExceeded as e:
                        col.add(f"{sys_name}.{kind}", anchor, "inconclusive", _config(pi), str(e))
                        continue
                    if cert is None:
                        continue
                    try:
                        decompose_split(pi, cert)
                        col.add(f"{sys_name}.{kind}", anchor, "pass")
                    except SplitVerificationError as e:
                        col.add(f"{sys_name}.{kind}", anchor, "fail", _config(pi, cert.nu), str(e))
    col.emit(rep)
    return rep


FREE_KINDS = ("plain", "preceq-h", "h", "succeq")


def suite_free_projective(sc: SuiteScope) -> VerificationReport:
    rep = VerificationReport("free-projective", sc.as_dict(default=FINITE_NAMES) |
                             {"ranks": [1, 2]})
    anchor = "free-projective"
    for S in sc.systems(FINITE_NAMES):
        if not isinstance(S, FiniteSystem):
            continue
        for n in (1, 2):
            try:
                F = free_module(S, n)
            except SizeBoundExceeded:
                rep.skip(f"{S.name}.rank{n}", anchor, "size-bound")
                continue
            for kind in FREE_KINDS:
                v = is_projective(F, kind, budget=sc.budget)
                clause = f"{S.name}.rank{n}.{kind}"
                if v.status == "inconclusive":
                    rep.add(clause, anchor, "inconclusive", note=v.note or str(v))
                    continue
                cert_ok = v.certificate is not None if kind != "plain" else True
                rep.check(clause, anchor, v.status == "true" and cert_ok,
                          v.counterexample or str(v), note=str(v))
    return rep


def _equivalence(name, version, anchor):
    def run(sc: SuiteScope) -> VerificationReport:
        k = sc.size(6)
        rep = VerificationReport(name, sc.as_dict(k, FINITE_NAMES) | {"version": version})
        for sys_name, mods in sc.modules(FINITE_NAMES, k):
            for P in mods:
                vs = characterizations(P, version, budget=sc.budget)
                statuses = {r: v.status for r, v in vs.items()}
                clause = f"{sys_name}.{P.name}"
                definite = {s for s in statuses.values() if s != "inconclusive"}
                note = " ".join(f"{r}={s}" for r, s in statuses.items())
                if len(definite) > 1:
                    wit = {r: (v.counterexample if v.status == "false" else str(v))
                           for r, v in vs.items()}
                    rep.add(clause, anchor, "fail", wit, note)
                elif "inconclusive" in statuses.values():
                    rep.add(clause, anchor, "inconclusive", None,
                            note + "; " + "; ".join(v.note for v in vs.values() if v.note))
                else:
                    rep.add(clause, anchor, "pass", None, note)
        return rep
    return run


PDS_KINDS = ("plain", "preceq-h", "h", "succeq")


def suite_proj_direct_sum(sc: SuiteScope) -> VerificationReport:
    """A direct sum is projective of a kind iff both summands are."""
    k = sc.size(3)
    rep = VerificationReport("proj-direct-sum", sc.as_dict(k, FINITE_NAMES) |
                             {"kinds": list(PDS_KINDS)})
    col = Collector()
    anchor = "projective-direct-sum"
    for sys_name, mods in sc.modules(FINITE_NAMES, k):
        mods = [M for M in mods if M.size > 1]
        status = {}
        for i, P1 in enumerate(mods):
            for P2 in mods[i:]:
                try:
                    D = direct_sum([P1, P2])
                except SizeBoundExceeded:
                    continue
                for kind in PDS_KINDS:
                    for X in (P1, P2):
                        if (X, kind) not in status:
                            status[X, kind] = is_projective(X, kind, budget=sc.budget).status
                    vd = is_projective(D, kind, budget=sc.budget).status
                    parts = (status[P1, kind], status[P2, kind])
                    clause = f"{sys_name}.{kind}"
                    if "inconclusive" in parts + (vd,):
                        col.add(clause, anchor, "inconclusive", [P1.name, P2.name],
                                f"sum={vd} parts={parts}")
                        continue
                    col.check(clause, anchor, (vd == "true") == (parts == ("true", "true")),
                              {"parts": [P1.name, P2.name], "sum": vd, "part-verdicts": parts})
    col.emit(rep)
    return rep


def suite_projspl(sc: SuiteScope) -> VerificationReport:
    """A split map from a projective module passes projectivity to its target."""
    k = sc.size(4)
    rep = VerificationReport("projspl", sc.as_dict(k, SYSTEM_NAMES))
    col = Collector()
    anchor = "split-image-projective"
    for sys_name, mods in sc.modules(SYSTEM_NAMES, k):
        for Q, P in product(mods, mods):
            for cls, skind, pkind in (("preceq", "preceq-split", "preceq"),
                                      ("homomorphism", "h-split", "h")):
                clause = f"{sys_name}.{pkind}"
                if projectivity(Q, pkind, k) != "true":
                    continue
                for pi in all_maps(Q, P, cls, budget=sc.budget):
                    cert = find_splitting(pi, skind, sc.budget)
                    if cert is None:
                        continue
                    st = projectivity(P, pkind, k)
                    if st == "inconclusive":
                        col.add(clause, anchor, "inconclusive", _config(pi), f"{P.name}")
                    else:
                        col.check(clause, anchor, st == "true", _config(pi, cert.nu))
                    break
    col.emit(rep)
    return rep


def suite_retractlift(sc: SuiteScope) -> VerificationReport:
    """⪯-quasi-isomorphic modules of a (⪯,h)-projective module are (⪯,h)-projective."""
    k = sc.size(4)
    rep = VerificationReport("retractlift", sc.as_dict(k, SYSTEM_NAMES))
    col = Collector()
    anchor = "quasi-isomorphic-projective"
    for sys_name, mods in sc.modules(SYSTEM_NAMES, k):
        for Q, P1 in product(mods, mods):
            if projectivity(P1, "preceq-h", k) != "true":
                continue
            for pi in all_maps(Q, P1, "preceq", budget=sc.budget):
                if not is_quasi_isomorphism(pi, "preceq"):
                    continue
                cert = find_splitting(pi, "preceq-split", sc.budget)
                col.check(f"{sys_name}.retract", anchor, cert is not None, _config(pi),
                          "lift of the identity of P1 through π")
                st = projectivity(Q, "preceq-h", k)
                col.check(f"{sys_name}.conclusion", anchor, st == "true", _config(pi), st)
                break
    col.emit(rep)
    return rep


def suite_sch2(sc: SuiteScope) -> VerificationReport:
    k = sc.size(3)
    rep = VerificationReport("sch2", sc.as_dict(k, SYSTEM_NAMES))
    col = Collector()
    for sys_name, mods in sc.modules(SYSTEM_NAMES, k):
        for P, P1 in product(mods, mods):
            for pi in all_maps(P, P1, "homomorphism", budget=sc.budget):
                if not is_preceq_onto(pi):
                    continue
                try:
                    sub = verify_sch2(P, P1, pi, Scope(k), sc.budget, max_pairs=200)
                except HypothesisError as e:
                    col.add(f"{sys_name}.all", "projective-extension", "skipped", None,
                            str(e).split(" ")[0] + "-hypothesis")
                    continue
                col.absorb(f"{sys_name}.", _drop_numbered(sub), _config(pi))
    col.emit(rep)
    return rep


def _drop_numbered(sub: VerificationReport) -> VerificationReport:
    """Fold per-pair lift failures into one clause."""
    out = VerificationReport(sub.suite, sub.scope)
    for r in sub.records:
        clause = "component-lifts" if r.clause.startswith("lift-") else r.clause
        out.add(clause, r.anchor, r.verdict, r.witness, r.note)
    return out


def _square_matrices(S, n):
    return list(all_matrices(S, n, n))


def suite_vnr_matrix(sc: SuiteScope) -> VerificationReport:
    rep = VerificationReport("vnr-matrix", {"system": "sym-bool", "shapes": "up to 2x2",
                                            "maxplus-window": [-4, 4]})
    S = get_instance("sym-bool")
    col = Collector()
    for n in (1, 2):
        for A in _square_matrices(S, n):
            if not is_preceq_idempotent_matrix(A):
                continue
            try:
                column_space_projectivity(A)
                col.add(f"idempotent-colspace.{n}x{n}", "colspace-projective", "pass")
            except (AssertionError, ValueError) as e:
                col.add(f"idempotent-colspace.{n}x{n}", "colspace-projective", "fail", str(A),
                        str(e))
    # the column-space work depends only on the matrices involved, and few distinct
    # products AB occur among the pairs
    colspace_error = {}
    members = {}

    def certify(M):
        if M not in colspace_error:
            try:
                column_space_projectivity(M)
                colspace_error[M] = None
            except (AssertionError, ValueError) as e:
                colspace_error[M] = str(e)
        return colspace_error[M]

    def span(M):
        if M not in members:
            members[M] = frozenset(column_space(M).embedding)
        return members[M]

    equal = compared = 0
    for m, n in product((1, 2), (1, 2)):
        As = list(all_matrices(S, m, n))
        Bs = list(all_matrices(S, n, m))
        for A in As:
            for B in Bs:
                if not is_preceq_vnr(A, B):
                    continue
                AB = matrix_mul(A, B)
                ok = is_preceq_idempotent_matrix(AB)
                col.check(f"vnr-product-idempotent.{m}x{n}", "vnr-idempotent", ok, [str(A), str(B)])
                if ok:
                    err = certify(AB)
                    if err is None:
                        col.add(f"vnr-colspace.{m}x{n}", "vnr-colspace", "pass")
                    else:
                        col.add(f"vnr-colspace.{m}x{n}", "vnr-colspace", "fail",
                                [str(A), str(B)], err)
                    compared += 1
                    equal += span(A) == span(AB)
    F = get_instance("maxplus-st")
    for Ap, A in idempotent_family(F, -4, 4, 2):
        col.check("idempotent-family", "idempotent-family", is_preceq_idempotent_matrix(A),
                  [str(Ap), str(A)])
    col.emit(rep)
    rep.scope["colspace-equal"] = f"{equal} of {compared} vnr pairs have AB·F = A·F"
    return rep


def _dual(name, pairs, needs_generation):
    def run(sc: SuiteScope) -> VerificationReport:
        k = sc.size(6)
        rep = VerificationReport(name, sc.as_dict(k, FINITE_NAMES))
        for sys_name, mods in sc.modules(FINITE_NAMES, k):
            for P in mods:
                for dkind, pkind in pairs:
                    clause = f"{sys_name}.{P.name}.{dkind}"
                    anchor = "dual-basis"
                    gens = sorted(P.tangibles)
                    if needs_generation and not generates(gens, P):
                        rep.skip(clause, anchor, "tangibles-do-not-generate")
                        continue
                    try:
                        d = dual_basis(P, gens, dkind, sc.budget)
                    except HypothesisError as e:
                        rep.skip(clause, anchor, "tangibles-do-not-preceq-generate")
                        continue
                    v = is_projective(P, pkind, budget=sc.budget)
                    if "inconclusive" in (d.status, v.status):
                        rep.add(clause, anchor, "inconclusive", None,
                                f"dual={d.status} projective={v.status}")
                        continue
                    if d.status == "true" and not d.certificate.verify():
                        rep.add(clause, anchor, "fail", str(d.certificate.maps),
                                "certificate does not verify")
                        continue
                    rep.check(clause, anchor, d.status == v.status,
                              {"dual": d.status, "projective": v.status},
                              note=f"{d.status}")
        return rep
    return run


def suite_hyp7(sc: SuiteScope) -> VerificationReport:
    default = ("krasner-hs", "sign-hs")
    rep = VerificationReport("hyp7", sc.as_dict(default=default))
    for S in sc.systems(default):
        if not isinstance(S, FiniteSystem):
            continue
        bad = [(S.elements[a], S.elements[b]) for a in sorted(S.tangibles)
               for b in range(S.size)
               if S.le[S.zero][S.add[a][b]] and not S.le[S.neg[a]][b]]
        rep.check(f"{S.name}.negation-below", "hypersystem-negation", not bad, bad[:3],
                  note="a tangible, 0 ⪯ a + b implies (−)a ⪯ b")
    return rep


def _schanuel(name, fn, cls, onto, first_onto, default_size=4):
    def run(sc: SuiteScope) -> VerificationReport:
        k = sc.size(default_size)
        rep = VerificationReport(name, sc.as_dict(k, SYSTEM_NAMES))
        col = Collector()
        for sys_name, mods in sc.modules(SYSTEM_NAMES, k):
            for f1, f2 in onto_pairs(mods, cls, onto, first_onto):
                col.absorb(f"{sys_name}.", fn(f1, f2, sc.budget), _config(f1, f2))
        col.emit(rep)
        return rep
    return run


def configurations_119(mods):
    """(f, f', μ) with P, P' ⪯-projective, f and μ ⪯-onto ⪯-morphisms, f' a homomorphism."""
    proj = [P for P in mods if projectivity(P, "preceq") == "true"]
    for P in proj:
        for M in mods:
            fs = [f for f in all_maps(P, M, "preceq") if is_preceq_onto(f)]
            if not fs:
                continue
            for Mp in mods:
                mus = [m for m in all_maps(M, Mp, "preceq") if is_preceq_onto(m)]
                for Pp in proj:
                    for fp in all_maps(Pp, Mp, "homomorphism"):
                        for f in fs:
                            for mu in mus:
                                yield f, fp, mu


def _config_suite(name, fn):
    def run(sc: SuiteScope) -> VerificationReport:
        k = sc.size(3)
        rep = VerificationReport(name, sc.as_dict(k, SYSTEM_NAMES))
        col = Collector()
        for sys_name, mods in sc.modules(SYSTEM_NAMES, k):
            for f, fp, mu in configurations_119(mods):
                col.absorb(f"{sys_name}.", fn(f, fp, mu, sc.budget), _config(f, fp, mu))
        col.emit(rep)
        return rep
    return run


SUITES: dict[str, Callable[[SuiteScope], VerificationReport]] = {
    "axioms": suite_axioms,
    "lemma-3.14": suite_lemma_3_14,
    "splitdir": suite_splitdir,
    "free-projective": suite_free_projective,
    "epicspl": _equivalence("epicspl", "preceq", "preceq-h-equivalence"),
    "epicspl-h": _equivalence("epicspl-h", "h", "h-equivalence"),
    "epicspl-succ": _equivalence("epicspl-succ", "succeq", "succeq-equivalence"),
    "proj-direct-sum": suite_proj_direct_sum,
    "projspl": suite_projspl,
    "retractlift": suite_retractlift,
    "sch2": suite_sch2,
    "vnr-matrix": suite_vnr_matrix,
    "dual-basis": _dual("dual-basis", (("preceq-h", "preceq-h"), ("h", "h")), False),
    "dual-basis-succ": _dual("dual-basis-succ", (("succeq-h", "succeq"),), True),
    "hyp7": suite_hyp7,
    "trsh": _schanuel("trsh", verify_trSh, "preceq", is_onto, None),
    "trsh118": _schanuel("trsh118", verify_trSh118, "homomorphism", is_onto, lambda f: True),
    "trsh11": _schanuel("trsh11", verify_trSh11, "homomorphism", is_preceq_onto,
                        lambda f: True),
    "trsh119": _config_suite("trsh119", verify_trSh119),
    "sch29": _config_suite("sch29", verify_sch29),
}
assert tuple(SUITES) == SUITE_NAMES


def run_suite(name: str, scope: int | None = None, instance=None,
              budget: int | None = None) -> VerificationReport:
    """Run a named suite. ``scope`` bounds module sizes; ``instance`` narrows the sweep
    to one system (registry name or object) or one module."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    return SUITES[name](SuiteScope(scope, instance, budget))
