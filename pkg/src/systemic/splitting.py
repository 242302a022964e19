"""Splittings of morphisms, idempotent maps and the split direct-sum decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from .modules import (MapTable, SystemicModule, classify_map, enumerate_maps, identity,
                      is_closed, one_minus, pointwise_sum, submodule, _ker_mod)

# kind -> (class of the splitting map, comparison of b against πν(b))
SPLIT_KINDS = {
    "split": ("homomorphism", "eq"),
    "preceq-split": ("preceq", "le"),
    "h-split": ("homomorphism", "le"),
    "succeq-split": ("succeq", "ge"),
    "succeq-h-split": ("homomorphism", "ge"),
}

_REQUIRED = {"split": "homomorphism", "h-split": "preceq-morphism",
             "preceq-split": "preceq-morphism", "succeq-split": "succeq-morphism",
             "succeq-h-split": "succeq-morphism"}


class SplitVerificationError(AssertionError):
    """A certificate that should hold by construction failed to verify."""


@dataclass(frozen=True)
class SplitCertificate:
    pi: MapTable
    nu: MapTable
    kind: str

    @property
    def evidence(self) -> tuple[tuple[str, str], ...]:
        """Each b of the target of π next to πν(b)."""
        N = self.pi.target
        pn = self.nu.then(self.pi).table
        return tuple((N.elements[b], N.elements[pn[b]]) for b in range(N.size))

    def verify(self) -> bool:
        nu_class, rel = SPLIT_KINDS[self.kind]
        c = classify_map(self.nu)
        ok = c.is_homomorphism if nu_class == "homomorphism" else \
            (c.is_preceq_morphism if nu_class == "preceq" else c.is_succeq_morphism)
        N = self.pi.target
        pn = self.nu.then(self.pi).table
        return ok and all(_compare(N, rel, b, pn[b]) for b in range(N.size))


def _compare(N, rel, b, v) -> bool:
    if rel == "eq":
        return b == v
    if rel == "le":
        return N.le[b][v]
    return N.le[v][b]


def splitting_problem_mask(pi: MapTable, rel: str, only=None):
    """Allowed values of ν at each b: those y with b REL π(y) (b in ``only`` if given)."""
    M, N = pi.source, pi.target
    pre = [[] for _ in range(N.size)]
    for y in range(M.size):
        for b in range(N.size):
            if _compare(N, rel, b, pi.table[y]):
                pre[b].append(y)
    if only is not None:
        return [pre[b] if b in only else None for b in range(N.size)]
    return pre


def enumerate_splittings(pi: MapTable, kind: str, budget=None, limit=None, check=True):
    """Splittings ν of π of the given kind in canonical order.

    ``check=False`` drops the usual requirement on the class of π, for callers that
    split maps outside it on purpose.
    """
    nu_class, rel = SPLIT_KINDS[kind]
    need = _REQUIRED[kind]
    if check and need not in classify_map(pi).labels:
        raise ValueError(f"{kind} needs π to be a {need}")
    allowed = splitting_problem_mask(pi, rel)
    for nu in enumerate_maps(pi.target, pi.source, nu_class, allowed, budget, limit):
        yield SplitCertificate(pi, nu, kind)


def find_splitting(pi: MapTable, kind: str = "preceq-split", budget=None, check=True):
    """First splitting in canonical order, or None when none exists.

    Raises BudgetExceeded when the search could not be completed.
    """
    for cert in enumerate_splittings(pi, kind, budget, limit=1, check=check):
        return cert
    return None


def is_preceq_idempotent_map(f: MapTable) -> bool:
    """f∘f ⪰ f pointwise."""
    t, L = f.table, f.source.le
    return all(L[t[b]][t[t[b]]] for b in range(f.source.size))


def is_T_idempotent_map(f: MapTable) -> bool:
    t = f.table
    return all(t[t[a]] == t[a] for a in f.source.tangibles)


# --- direct sums -----------------------------------------------------------------------

@dataclass(frozen=True)
class Part:
    """A summand carried by a subset of an ambient module."""
    ambient: SystemicModule
    members: frozenset[int]

    @property
    def closed(self) -> bool:
        return is_closed(self.ambient, self.members)

    def module(self) -> SystemicModule:
        return submodule(self.ambient, self.members)

    def names(self) -> frozenset[str]:
        return self.ambient.names(self.members)


@dataclass(frozen=True)
class DirectSumCertificate:
    module: SystemicModule
    parts: tuple[Part, ...]
    pis: tuple[MapTable, ...]  # M -> ambient of part i, image inside the part
    nus: tuple[MapTable, ...]  # ambient of part i -> M, used on the part
    kind: str  # "preceq", "h" or "succeq"

    def failures(self) -> list[str]:
        M, out = self.module, []
        want = {"preceq": "preceq-morphism", "h": "homomorphism",
                "succeq": "succeq-morphism"}[self.kind]
        up = self.kind != "succeq"

        def cmp(L, a, b):
            return L[a][b] if up else L[b][a]

        for i, (part, pi, nu) in enumerate(zip(self.parts, self.pis, self.nus)):
            if want not in classify_map(pi).labels:
                out.append(f"pi{i + 1} is not a {want}")
            if want not in classify_map(nu).labels:
                out.append(f"nu{i + 1} is not a {want}")
            if not pi.image <= part.members:
                out.append(f"pi{i + 1} leaves part {i + 1}")
            L = part.ambient.le
            for b in sorted(part.members):
                if not cmp(L, b, pi.table[nu.table[b]]):
                    out.append(f"1 vs pi{i + 1} nu{i + 1} fails at {part.ambient.elements[b]}")
                    break
            for j, (pj, qj) in enumerate(zip(self.pis, self.parts)):
                if j == i:
                    continue
                Lj, zj = qj.ambient.le, qj.ambient.zero
                for b in sorted(part.members):
                    if not cmp(Lj, zj, pj.table[nu.table[b]]):
                        out.append(f"0 vs pi{j + 1} nu{i + 1} fails at "
                                   f"{part.ambient.elements[b]}")
                        break
        total = MapTable(M, M, (M.zero,) * M.size)
        for pi, nu in zip(self.pis, self.nus):
            total = pointwise_sum(total, pi.then(nu))
        bad = [b for b in range(M.size) if not cmp(M.le, b, total.table[b])]
        if bad:
            out.append(f"1 vs sum nu_i pi_i fails at {M.elements[bad[0]]}")
        return out

    def verify(self) -> bool:
        return not self.failures()


def decompose_split(pi: MapTable, cert: SplitCertificate):
    """Both decompositions of M attached to a homomorphism π split by ν.

    Returns (variant_i, variant_ii). Raises SplitVerificationError when a
    certificate fails, which the construction rules out.
    """
    if not classify_map(pi).is_homomorphism:
        raise ValueError("decomposition needs π to be a homomorphism")
    if cert.kind not in ("preceq-split", "h-split", "split"):
        raise ValueError(f"cannot decompose along a {cert.kind}")
    kind = "preceq" if cert.kind == "preceq-split" else "h"
    M, N, nu = pi.source, pi.target, cert.nu
    nupi = pi.then(nu)
    pi2 = one_minus(nupi)
    ident = identity(M)
    first = DirectSumCertificate(
        M, (Part(N, pi.image), Part(M, pi2.image)), (pi, pi2), (nu, ident), kind)
    second = DirectSumCertificate(
        M, (Part(M, nupi.image), Part(M, _ker_mod(pi))), (nupi, pi2), (ident, ident), kind)
    for label, c in (("(i)", first), ("(ii)", second)):
        bad = c.failures()
        if bad:
            raise SplitVerificationError(f"variant {label}: {'; '.join(bad)}")
    return first, second
