"""Pullbacks and replays of the Schanuel-type constructions for systemic modules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .modules import (MapTable, SystemicModule, _ker_mod, all_maps, classify_map,
                      direct_sum, enumerate_maps, is_closed, is_null_monic, is_onto,
                      is_preceq_onto, ker_mod_module, submodule)
from .projective import Scope, is_projective, lift_search
from .report import VerificationReport
from .search import BudgetExceeded
from .splitting import decompose_split, find_splitting, SplitVerificationError

MODES = ("strict", "preceq")


class PullbackNotClosed(ValueError):
    """The pullback carrier is not a submodule; ``witness`` names the offending operation."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def pullback_carrier(f1: MapTable, f2: MapTable, mode: str = "strict") -> frozenset[int]:
    """Indices in P1 ⊕ P2 of the pairs with f1(b1) = f2(b2) (or ⪯ in preceq mode)."""
    if f1.target != f2.target:
        raise ValueError("f1 and f2 need a common target")
    if mode not in MODES:
        raise ValueError(f"unknown pullback mode {mode!r}")
    L = f1.target.le
    n2 = f2.source.size
    same = (lambda x, y: x == y) if mode == "strict" else (lambda x, y: L[x][y])
    return frozenset(a * n2 + b for a in range(f1.source.size) for b in range(n2)
                     if same(f1.table[a], f2.table[b]))


def _closure_witness(D: SystemicModule, members):
    """First operation leaving ``members``, or None."""
    T = sorted(D.scalars.tangibles)
    E = D.elements
    for x in sorted(members):
        if D.neg[x] not in members:
            return ("neg", E[x], E[D.neg[x]])
        for t in T:
            if D.act[t][x] not in members:
                return ("act", D.scalars.elements[t], E[x], E[D.act[t][x]])
        for y in sorted(members):
            if D.add[x][y] not in members:
                return ("add", E[x], E[y], E[D.add[x][y]])
    return None


@dataclass(frozen=True)
class Pullback:
    P: SystemicModule
    pi1_res: MapTable
    pi2_res: MapTable
    mode: str
    f1: MapTable
    f2: MapTable


def pullback(f1: MapTable, f2: MapTable, mode: str = "strict") -> Pullback:
    """The pullback of f1 and f2 as a submodule of P1 ⊕ P2 with restricted projections.

    Raises PullbackNotClosed when the carrier is not operation-closed.
    """
    if mode == "preceq" and not (classify_map(f1).is_homomorphism and
                                 classify_map(f2).is_homomorphism):
        raise ValueError("the preceq pullback needs f1 and f2 to be homomorphisms")
    P1, P2 = f1.source, f2.source
    D = direct_sum([P1, P2], name=f"{P1.name}+{P2.name}")
    members = pullback_carrier(f1, f2, mode)
    w = _closure_witness(D, members)
    if w is not None:
        raise PullbackNotClosed("pullback carrier is not a submodule", w)
    P = submodule(D, members, name=f"pb({f1.name},{f2.name})")
    coords = D.coords or tuple((a,) for a in range(D.size))
    pi1 = MapTable(P, P1, tuple(coords[x][0] for x in P.embedding), "pi1")
    pi2 = MapTable(P, P2, tuple(coords[x][1] for x in P.embedding), "pi2")
    return Pullback(P, pi1, pi2, mode, f1, f2)


# --- pair sets -------------------------------------------------------------------------

def _square(M: SystemicModule) -> SystemicModule:
    return _square_named(M, M.name)


@lru_cache(maxsize=64)
def _square_named(M: SystemicModule, name: str) -> SystemicModule:
    return direct_sum([M, M], name=f"{name}^2")


def _pairs_module(M: SystemicModule, pairs) -> SystemicModule | None:
    """The pair set as a submodule of M ⊕ M, or None if it is not closed."""
    Q = _square(M)
    members = {a * M.size + b for a, b in pairs}
    return submodule(Q, members, name=f"pairs({M.name})") if is_closed(Q, members) else None


def _pair_components(Kmod: SystemicModule, M: SystemicModule):
    return [(x // M.size, x % M.size) for x in Kmod.embedding]


@dataclass
class _PairMap:
    """A map out of a module of pairs, with its values recorded in an ambient target."""
    table: MapTable  # into the ambient
    members: frozenset[int]  # intended image set in the ambient

    @property
    def well_defined(self) -> bool:
        return self.table.image <= self.members

    @property
    def onto(self) -> bool:
        return self.table.image == self.members

    @property
    def preceq_onto(self) -> bool:
        N = self.table.target
        return all(any(N.le[t][v] for v in self.table.image) for t in self.members)

    def null_monic(self) -> bool:
        return _ker_mod(self.table) <= self.table.source.null


def _ker_projection(src_pairs: SystemicModule, P: SystemicModule, pb: Pullback,
                    target_pairs) -> _PairMap:
    """((b1,b2),(b1',b2')) ↦ (b2, b2') from a module of pairs in P ⊕ P to P2 ⊕ P2."""
    P2 = pb.f2.source
    Q2 = _square(P2)
    p2 = pb.pi2_res.table
    table = tuple(p2[x] * P2.size + p2[y] for x, y in _pair_components(src_pairs, P))
    members = frozenset(a * P2.size + b for a, b in target_pairs)
    return _PairMap(MapTable(src_pairs, Q2, table, "pi_N"), members)


def _difference_map(src_pairs: SystemicModule, P: SystemicModule, pb: Pullback) -> MapTable:
    """((b1,b2),(b1,b2')) ↦ b2 (−) b2' into P2."""
    P2 = pb.f2.source
    p2 = pb.pi2_res.table
    return MapTable(src_pairs, P2, tuple(P2.minus(p2[x], p2[y])
                                         for x, y in _pair_components(src_pairs, P)), "diff")


def _ker_N(f: MapTable):
    t, r = f.table, range(f.source.size)
    return frozenset((a, b) for a in r for b in r if t[a] == t[b])


def _ker_N_preceq(f: MapTable):
    t, null, r = f.table, f.target.null, range(f.source.size)
    return frozenset((a, b) for a in r for b in r if t[a] == t[b] and t[a] in null)


@lru_cache(maxsize=4096)
def projectivity(P: SystemicModule, kind: str, max_size: int = 4) -> str:
    """Cached projectivity status used for hypothesis tests."""
    return is_projective(P, kind, Scope(max_size)).status


def _hypothesis(rep, clause, anchor, P, kind):
    status = projectivity(P, kind)
    if status == "true":
        return True
    rep.skip(clause, anchor, f"{P.name} not {kind}-projective" if status == "false"
             else f"{kind}-projectivity of {P.name} inconclusive")
    return False


def _first_names(M, idxs, k=1):
    return [M.elements[i] for i in sorted(idxs)[:k]]


# --- onto pullback of ⪯-morphisms ------------------------------------------------------

def verify_trSh(f1: MapTable, f2: MapTable, budget=None) -> VerificationReport:
    """Replay the strict-pullback statements for onto ⪯-morphisms f1, f2."""
    rep = VerificationReport("trsh", {"f1": f1.name, "f2": f2.name,
                                      "P1": f1.source.name, "P2": f2.source.name,
                                      "M": f1.target.name})
    anchor = "semi-schanuel"
    for f, label in ((f1, "f1"), (f2, "f2")):
        if not (classify_map(f).is_preceq_morphism and is_onto(f)):
            rep.skip("all", anchor, f"{label}-not-onto-preceq-morphism")
            return rep
    try:
        pb = pullback(f1, f2, "strict")
    except PullbackNotClosed as e:
        rep.add("pullback-submodule", anchor, "fail", e.witness,
                note="pullback carrier not closed")
        for c in ("i", "ii", "iii", "iv", "v", "vi"):
            rep.skip(c, anchor, "pullback-not-closed")
        return rep
    rep.add("pullback-submodule", anchor, "pass")
    P, pi1, pi2 = pb.P, pb.pi1_res, pb.pi2_res

    c1 = classify_map(pi1)
    rep.check("i.pi1-onto-homomorphism", anchor, c1.is_homomorphism and is_onto(pi1),
              {"onto": is_onto(pi1), "homomorphism": c1.is_homomorphism})
    kN = _ker_N(pi1)
    bad = [(P.elements[x], P.elements[y]) for x, y in kN
           if pb.pi1_res.table[x] != pb.pi1_res.table[y]]
    rep.check("i.kernel-diagonal-first", anchor, not bad, bad[:1])
    Kmod = _pairs_module(P, kN)
    kf2 = _ker_N(f2)
    if Kmod is None:
        rep.add("i.kernel-map", anchor, "fail", None, note="ker_N of pi1 is not a submodule")
    else:
        m = _ker_projection(Kmod, P, pb, kf2)
        ok = m.well_defined and m.onto and classify_map(m.table).is_homomorphism
        rep.check("i.kernel-map", anchor, ok, {"well-defined": m.well_defined,
                                               "onto": m.onto})

    bad = [P.elements[x] for x in range(P.size)
           if f1.table[pi1.table[x]] != f2.table[pi2.table[x]]]
    rep.check("ii.square-commutes", anchor, not bad, bad[:1])

    kNp = _ker_N_preceq(pi1)
    Kp = _pairs_module(P, kNp)
    if Kp is None:
        rep.add("iii.quasi-isomorphism", anchor, "fail", None,
                note="ker_N,preceq of pi1 is not a submodule")
    else:
        m = _ker_projection(Kp, P, pb, _ker_N_preceq(f2))
        ok = (m.well_defined and m.preceq_onto and m.null_monic() and
              classify_map(m.table).is_preceq_morphism)
        rep.check("iii.quasi-isomorphism", anchor, ok,
                  {"well-defined": m.well_defined, "preceq-onto": m.preceq_onto,
                   "null-monic": m.null_monic()})

    comp = pi1.then(f1)
    Kc = _pairs_module(P, _ker_N_preceq(comp))
    result = None
    if Kc is not None:
        m = _ker_projection(Kc, P, pb, _ker_N_preceq(f2))
        result = (m.well_defined and m.preceq_onto and m.null_monic() and
                  classify_map(m.table).is_preceq_morphism)
    if is_null_monic(f1):
        rep.check("iv.quasi-isomorphism", anchor, bool(result),
                  {"kernel-closed": Kc is not None})
    else:
        rep.skip("iv.quasi-isomorphism", anchor,
                 f"f1-not-null-monic; holds-anyway={bool(result)}")

    if _hypothesis(rep, "v.retract", anchor, f1.source, "plain"):
        try:
            cert = find_splitting(pi1, "split", budget)
            rep.check("v.retract", anchor, cert is not None, {"pi1": pi1})
        except BudgetExceeded as e:
            rep.add("v.retract", anchor, "inconclusive", note=str(e))

    if _hypothesis(rep, "vi.retract", anchor, f1.source, "preceq"):
        _split_and_decompose(rep, "vi", anchor, pi1, "preceq-split", budget)
    return rep


def _split_and_decompose(rep, prefix, anchor, pi, kind, budget):
    try:
        cert = find_splitting(pi, kind, budget)
    except BudgetExceeded as e:
        rep.add(f"{prefix}.retract", anchor, "inconclusive", note=str(e))
        return
    rep.check(f"{prefix}.retract", anchor, cert is not None, {"pi1": pi})
    if cert is None:
        return
    try:
        first, _ = decompose_split(pi, cert)
        rep.add(f"{prefix}.direct-sum", anchor, "pass",
                note=f"complement {sorted(first.parts[1].names())}")
    except SplitVerificationError as e:
        rep.add(f"{prefix}.direct-sum", anchor, "fail", {"nu": cert.nu}, note=str(e))


# --- homomorphism versions ---------------------------------------------------------------

def _kernel_description(rep, clause, anchor, pb: Pullback):
    """ker_mod π1 against {(b1,b2) in P : b1 ⪰ 0, b2 ∈ ker_mod f2}."""
    P, P1 = pb.P, pb.f1.source
    k2 = _ker_mod(pb.f2)
    want = frozenset(x for x in range(P.size)
                     if pb.pi1_res.table[x] in P1.null and pb.pi2_res.table[x] in k2)
    got = _ker_mod(pb.pi1_res)
    diff = got ^ want
    rep.check(clause, anchor, not diff, _first_names(P, diff))


def verify_trSh118(f1: MapTable, f2: MapTable, budget=None) -> VerificationReport:
    """Replay the strict-pullback statements for homomorphisms with f2 onto."""
    rep = VerificationReport("trsh118", {"f1": f1.name, "f2": f2.name,
                                         "P1": f1.source.name, "P2": f2.source.name,
                                         "M": f1.target.name})
    anchor = "semi-schanuel-onto"
    if not (classify_map(f1).is_homomorphism and classify_map(f2).is_homomorphism):
        rep.skip("all", anchor, "maps-not-homomorphisms")
        return rep
    if not is_onto(f2):
        rep.skip("all", anchor, "f2-not-onto")
        return rep
    try:
        pb = pullback(f1, f2, "strict")
    except PullbackNotClosed as e:
        rep.add("i.pullback-submodule", anchor, "fail", e.witness)
        return rep
    P, pi1, pi2 = pb.P, pb.pi1_res, pb.pi2_res
    rep.check("i.pi1-onto", anchor, is_onto(pi1), {"image": len(pi1.image)})

    Kmod = _pairs_module(P, _ker_N(pi1))
    if Kmod is None:
        rep.add("ii.difference-map", anchor, "fail", None, note="ker_N of pi1 not closed")
    else:
        d = _difference_map(Kmod, P, pb)
        k2 = _ker_mod(f2)
        hom = classify_map(d).is_homomorphism
        inside = d.image <= k2
        rep.check("ii.difference-map", anchor, hom and inside,
                  {"homomorphism": hom, "lands-in-kernel": inside})
    _kernel_description(rep, "iii.kernel", anchor, pb)
    bad = [P.elements[x] for x in range(P.size)
           if f1.table[pi1.table[x]] != f2.table[pi2.table[x]]]
    rep.check("iv.square-commutes", anchor, not bad, bad[:1])
    if _hypothesis(rep, "v.retract", anchor, f1.source, "h"):
        _split_and_decompose(rep, "v", anchor, pi1, "h-split", budget)
    return rep


def uses_null_surpass(M: SystemicModule) -> bool:
    """Is ⪯ on M exactly b ⪯ b' ⟺ b' = b + c for some c ⪰ 0?"""
    N = M.null
    return all(M.le[b][c] == any(M.add[b][n] == c for n in N)
               for b in range(M.size) for c in range(M.size))


def verify_trSh11(f1: MapTable, f2: MapTable, budget=None) -> VerificationReport:
    """Replay the ⪯-pullback statements for homomorphisms with f2 ⪯-onto."""
    rep = VerificationReport("trsh11", {"f1": f1.name, "f2": f2.name,
                                        "P1": f1.source.name, "P2": f2.source.name,
                                        "M": f1.target.name})
    anchor = "semi-schanuel-preceq-onto"
    if not (classify_map(f1).is_homomorphism and classify_map(f2).is_homomorphism):
        rep.skip("all", anchor, "maps-not-homomorphisms")
        return rep
    if not is_preceq_onto(f2):
        rep.skip("all", anchor, "f2-not-preceq-onto")
        return rep
    mods = (f1.source, f2.source, f1.target)
    if not all(uses_null_surpass(X) for X in mods):
        rep.skip("all", anchor, "surpass-not-null-type")
        return rep
    try:
        pb = pullback(f1, f2, "preceq")
    except PullbackNotClosed as e:
        rep.add("i.pullback-submodule", anchor, "fail", e.witness)
        return rep
    P, pi1, pi2 = pb.P, pb.pi1_res, pb.pi2_res
    M, P2 = f1.target, f2.source
    rep.check("i.pi1-onto", anchor, is_onto(pi1), {"image": len(pi1.image)})

    kN = _ker_N(pi1)
    Kmod = _pairs_module(P, kN)
    if Kmod is None:
        rep.add("ii.difference-map", anchor, "fail", None, note="ker_N of pi1 not closed")
    else:
        d = _difference_map(Kmod, P, pb)
        rep.check("ii.difference-map", anchor, classify_map(d).is_homomorphism,
                  {"map": d})
    Kp = _pairs_module(P, _ker_N_preceq(pi1))
    X = frozenset(P2.minus(b, c) for b in range(P2.size) for c in range(P2.size)
                  if M.minus(f2.table[b], f2.table[c]) in M.quasi_zeros)
    # what the argument actually shows: the differences surpass 0
    X_null = frozenset(P2.minus(b, c) for b in range(P2.size) for c in range(P2.size)
                       if M.minus(f2.table[b], f2.table[c]) in M.null)
    k2 = _ker_mod(f2)
    if Kp is None:
        rep.add("ii.restricted-image", anchor, "fail", None,
                note="ker_N,preceq of pi1 not closed")
    else:
        d = _difference_map(Kp, P, pb)
        rep.check("ii.restricted-image", anchor, d.image <= X,
                  _first_names(P2, d.image - X))
        rep.check("ii.restricted-image-null-reading", anchor, d.image <= X_null,
                  _first_names(P2, d.image - X_null), note="exploratory")
    rep.check("ii.image-set-in-kernel", anchor, X <= k2, _first_names(P2, X - k2))
    _kernel_description(rep, "iii.kernel", anchor, pb)
    L = M.le
    bad = [P.elements[x] for x in range(P.size)
           if not L[f1.table[pi1.table[x]]][f2.table[pi2.table[x]]]]
    rep.check("iv.square-surpassed", anchor, not bad, bad[:1])
    return rep


# --- the kernel comparison and its corollary -------------------------------------------------

@dataclass
class Sch119Config:
    f: MapTable  # P -> M, ⪯-onto ⪯-morphism
    fp: MapTable  # P' -> M', homomorphism
    mu: MapTable  # M -> M', ⪯-onto ⪯-morphism


def _hyp119(rep, anchor, cfg: Sch119Config) -> bool:
    f, fp, mu = cfg.f, cfg.fp, cfg.mu
    checks = [
        (classify_map(f).is_preceq_morphism and is_preceq_onto(f), "f-not-preceq-onto-morphism"),
        (classify_map(fp).is_homomorphism, "f'-not-homomorphism"),
        (classify_map(mu).is_preceq_morphism and is_preceq_onto(mu),
         "mu-not-preceq-onto-morphism"),
        (f.target == mu.source and mu.target == fp.target, "maps-not-composable"),
    ]
    for ok, tag in checks:
        if not ok:
            rep.skip("all", anchor, tag)
            return False
    for X, label in ((f.source, "P"), (fp.source, "P'")):
        status = projectivity(X, "preceq")
        if status != "true":
            rep.skip("all", anchor, f"{label}-not-preceq-projective" if status == "false"
                     else f"{label}-projectivity-inconclusive")
            return False
    return True


@dataclass
class Sch119Replay:
    h: MapTable
    K: SystemicModule
    Kp: SystemicModule
    D: SystemicModule
    g: MapTable
    kerg: SystemicModule
    Phi: MapTable | None


def replay_trSh119(rep, anchor, cfg: Sch119Config, budget=None) -> Sch119Replay | None:
    f, fp, mu = cfg.f, cfg.fp, cfg.mu
    P, Pp = f.source, fp.source
    muf = f.then(mu)
    if not is_preceq_onto(fp):
        rep.skip("lift", anchor, "f'-not-preceq-onto")
        return None
    try:
        h = lift_search(muf, fp, "preceq", budget)
    except BudgetExceeded as e:
        rep.add("lift", anchor, "inconclusive", note=str(e))
        return None
    if h is None:
        rep.add("lift", anchor, "fail", {"mu f": muf}, note="no ⪯-lift along f'")
        return None
    rep.add("lift", anchor, "pass", note=f"h={h}")
    K, Kp = ker_mod_module(f), ker_mod_module(fp)
    kp_set = set(Kp.embedding)
    Lm = fp.target.le
    bad, unreached = [], []
    for bp in range(Pp.size):
        above = [b for b in range(P.size) if Lm[fp.table[bp]][muf.table[b]]]
        if not above:
            unreached.append(Pp.elements[bp])
        bad += [(Pp.elements[bp], P.elements[b]) for b in above
                if Pp.minus(h.table[b], bp) not in kp_set]
    rep.check("dominating-preimage", anchor, not unreached, unreached[:1],
              note="every f'(b') ⪯ μf(b) for some b")
    rep.check("difference-in-K'", anchor, not bad, bad[:1],
              note="h(b)(−)b' ∈ K' whenever f'(b') ⪯ μf(b)")
    D = direct_sum([Kp, P], name=f"{Kp.name}+{P.name}")
    coords = D.coords or tuple((a,) for a in range(D.size))
    emb = Kp.embedding
    g = MapTable(D, Pp, tuple(Pp.minus(h.table[b], emb[k]) for k, b in coords), "g")
    cg = classify_map(g)
    rep.check("g-preceq-morphism", anchor, cg.is_preceq_morphism, {"g": g})
    rep.check("g-preceq-onto", anchor, is_preceq_onto(g), {"g": g})
    try:
        cert = find_splitting(g, "preceq-split", budget, check=False)
        rep.check("g-preceq-splits", anchor, cert is not None, {"g": g})
    except BudgetExceeded as e:
        rep.add("g-preceq-splits", anchor, "inconclusive", note=str(e))
    kerg = ker_mod_module(g)
    kg_pos = {x: i for i, x in enumerate(kerg.embedding)}
    kpos = {x: i for i, x in enumerate(emb)}
    targets = []
    for b in K.embedding:
        hb = h.table[b]
        x = kpos[hb] * P.size + b if hb in kpos else None
        targets.append(kg_pos.get(x) if x is not None else None)
    if any(t is None for t in targets):
        miss = [P.elements[b] for b, t in zip(K.embedding, targets) if t is None]
        rep.add("Phi-well-defined", anchor, "fail", miss[:1],
                note="(h(b), b) outside ker g")
        return Sch119Replay(h, K, Kp, D, g, kerg, None)
    rep.add("Phi-well-defined", anchor, "pass")
    Phi = MapTable(K, kerg, tuple(targets), "Phi")
    rep.check("Phi-preceq-morphism", anchor, classify_map(Phi).is_preceq_morphism,
              {"Phi": Phi})
    rep.check("Phi-injective", anchor, len(Phi.image) == K.size, {"Phi": Phi})
    return Sch119Replay(h, K, Kp, D, g, kerg, Phi)


def verify_trSh119(f: MapTable, fp: MapTable, mu: MapTable, budget=None) -> VerificationReport:
    """Replay the construction g(b', b) = h(b) (−) b' and the embedding Φ(b) = (h(b), b)."""
    cfg = Sch119Config(f, fp, mu)
    rep = VerificationReport("trsh119", {"f": f.name, "f'": fp.name, "mu": mu.name,
                                         "P": f.source.name, "P'": fp.source.name})
    anchor = "kernel-comparison"
    if _hyp119(rep, anchor, cfg):
        replay_trSh119(rep, anchor, cfg, budget)
    return rep


def phi_retraction(Phi: MapTable, budget=None) -> MapTable | None:
    """A ⪯-morphism ρ: ker g → K with b ⪯ ρΦ(b) for every b, first in canonical order."""
    K, kerg = Phi.source, Phi.target
    allowed = [None] * kerg.size
    for b in range(K.size):
        want = frozenset(y for y in range(K.size) if K.le[b][y])
        x = Phi.table[b]
        allowed[x] = sorted(want if allowed[x] is None else set(allowed[x]) & want)
    if any(a is not None and not a for a in allowed):
        return None
    for rho in enumerate_maps(kerg, K, "preceq", allowed, budget, limit=1):
        return rho
    return None


def verify_sch29(f: MapTable, fp: MapTable, mu: MapTable, budget=None) -> VerificationReport:
    """Replay the corollary: with K ⪯-projective and Φ a ⪯-retract, K' is ⪯-projective."""
    cfg = Sch119Config(f, fp, mu)
    rep = VerificationReport("sch29", {"f": f.name, "f'": fp.name, "mu": mu.name,
                                       "P": f.source.name, "P'": fp.source.name})
    anchor = "kernel-projective"
    if not _hyp119(rep, anchor, cfg):
        return rep
    sub = VerificationReport("trsh119")
    r = replay_trSh119(sub, anchor, cfg, budget)
    if r is None or r.Phi is None or not sub.ok:
        rep.skip("all", anchor, "configuration-replay-incomplete")
        return rep
    if projectivity(r.K, "preceq") != "true":
        rep.skip("all", anchor, "K-not-preceq-projective")
        return rep
    try:
        rho = phi_retraction(r.Phi, budget)
    except BudgetExceeded as e:
        rep.add("retraction", anchor, "inconclusive", note=str(e))
        return rep
    if rho is None:
        rep.skip("all", anchor, "Phi-not-a-preceq-retract")
        return rep
    rep.add("retraction", anchor, "pass", note=f"rho={rho}")
    for clause, X in (("ker-g-projective", r.kerg), ("sum-projective", r.D),
                      ("K'-projective", r.Kp)):
        status = projectivity(X, "preceq")
        rep.add(clause, anchor, {"true": "pass", "false": "fail"}.get(status, "inconclusive"),
                None if status == "true" else X.name, note=f"{X.name}: {status}")
    return rep


# --- sweeps --------------------------------------------------------------------------------

def onto_pairs(mods, cls: str, onto, first_onto=None):
    """All (f1, f2) with common target among ``mods`` satisfying the class and onto tests."""
    first_onto = first_onto or onto
    for M in mods:
        maps = {P: all_maps(P, M, cls) for P in mods}
        for P1 in mods:
            for f1 in maps[P1]:
                if not first_onto(f1):
                    continue
                for P2 in mods:
                    for f2 in maps[P2]:
                        if onto(f2):
                            yield f1, f2
