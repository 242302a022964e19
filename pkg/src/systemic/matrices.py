"""Matrices over a system, ⪯-idempotence, ⪯-von Neumann regularity and column spaces."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import FiniteSystem
from .instances import FormulaSystem
from .modules import MapTable, SystemicModule, corestrict, free_module, inclusion, submodule
from .splitting import SplitCertificate


class ShapeError(ValueError):
    pass


class _Ops:
    """Uniform arithmetic over a finite table system or the formula system."""

    def __init__(self, system):
        self.system = system
        if isinstance(system, FiniteSystem):
            S = system
            self.zero, self.one = S.zero, S.one
            self.add = lambda x, y: S.add[x][y]
            self.mul = lambda x, y: S.mul[x][y]
            self.le = lambda x, y: S.le[x][y]
            self.neg = lambda x: S.neg[x]
            self.parse = S.idx
            self.show = lambda x: S.elements[x]
        elif isinstance(system, FormulaSystem):
            F = system
            self.zero, self.one = F.zero, F.one
            self.add, self.mul, self.le, self.neg = F.add, F.mul, F.le, F.neg
            self.parse = lambda x: x if not isinstance(x, str) else F.parse(x)
            self.show = str
        else:
            raise TypeError(f"not a system: {system!r}")


@dataclass(frozen=True)
class Matrix:
    system: object
    entries: tuple[tuple, ...]

    def __post_init__(self):
        if len({len(r) for r in self.entries}) > 1:
            raise ShapeError("rows of different lengths")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    @property
    def ops(self) -> _Ops:
        return _Ops(self.system)

    def names(self) -> tuple[tuple[str, ...], ...]:
        show = self.ops.show
        return tuple(tuple(show(x) for x in r) for r in self.entries)

    def __str__(self):
        return "[" + "; ".join(" ".join(r) for r in self.names()) + "]"


def matrix(system, rows) -> Matrix:
    ops = _Ops(system)
    return Matrix(system, tuple(tuple(ops.parse(x) for x in r) for r in rows))


def identity_matrix(system, n: int) -> Matrix:
    ops = _Ops(system)
    return Matrix(system, tuple(tuple(ops.one if i == j else ops.zero for j in range(n))
                                for i in range(n)))


def matrix_add(A: Matrix, B: Matrix) -> Matrix:
    if A.shape != B.shape:
        raise ShapeError(f"cannot add {A.shape} and {B.shape}")
    add = A.ops.add
    return Matrix(A.system, tuple(tuple(add(x, y) for x, y in zip(r, s))
                                  for r, s in zip(A.entries, B.entries)))


def matrix_mul(A: Matrix, B: Matrix) -> Matrix:
    (m, n), (n2, p) = A.shape, B.shape
    if n != n2:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    o = A.ops
    rows = []
    for i in range(m):
        row = []
        for j in range(p):
            v = o.zero
            for k in range(n):
                v = o.add(v, o.mul(A.entries[i][k], B.entries[k][j]))
            row.append(v)
        rows.append(tuple(row))
    return Matrix(A.system, tuple(rows))


def quasi_zero_matrix(A: Matrix) -> Matrix:
    o = A.ops
    return Matrix(A.system, tuple(tuple(o.add(x, o.neg(x)) for x in r) for r in A.entries))


def matrix_preceq(A: Matrix, B: Matrix) -> bool:
    if A.shape != B.shape:
        raise ShapeError(f"cannot compare {A.shape} with {B.shape}")
    le = A.ops.le
    return all(le(x, y) for r, s in zip(A.entries, B.entries) for x, y in zip(r, s))


def is_preceq_idempotent_matrix(A: Matrix) -> bool:
    m, n = A.shape
    if m != n:
        raise ShapeError("⪯-idempotence needs a square matrix")
    return matrix_preceq(A, matrix_mul(A, A))


def is_preceq_vnr(A: Matrix, B: Matrix) -> bool:
    """A ⪯ ABA."""
    return matrix_preceq(A, matrix_mul(matrix_mul(A, B), A))


def all_matrices(S: FiniteSystem, rows: int, cols: int):
    for vals in product(range(S.size), repeat=rows * cols):
        yield Matrix(S, tuple(tuple(vals[i * cols:(i + 1) * cols]) for i in range(rows)))


def find_vnr_partner(A: Matrix) -> Matrix | None:
    """First B in canonical order with A ⪯ ABA (finite systems only)."""
    m, n = A.shape
    for B in all_matrices(A.system, n, m):
        if is_preceq_vnr(A, B):
            return B
    return None


# --- column spaces ---------------------------------------------------------------------

def column_module(S: FiniteSystem, n: int) -> SystemicModule:
    return free_module(S, n)


def _vector(F: SystemicModule, b: int) -> tuple[int, ...]:
    return F.coords[b] if F.coords is not None else (b,)


def _index(F: SystemicModule, vec) -> int:
    if F.coords is None:
        return vec[0]
    w, out = 1, 0
    for a in reversed(vec):
        out += a * w
        w *= F.scalars.size
    return out


def apply_matrix(A: Matrix, F: SystemicModule, G: SystemicModule) -> MapTable:
    """v ↦ Av from the free module of columns F to the free module G."""
    S = A.system
    m, n = A.shape
    table = []
    for b in range(F.size):
        v = _vector(F, b)
        out = []
        for i in range(m):
            x = S.zero
            for k in range(n):
                x = S.add[x][S.mul[A.entries[i][k]][v[k]]]
            out.append(x)
        table.append(_index(G, out))
    return MapTable(F, G, tuple(table), "A")


def column_space(A: Matrix) -> SystemicModule:
    """A·F as a submodule of the free module of columns."""
    if not isinstance(A.system, FiniteSystem):
        raise TypeError("column spaces need a finite system")
    m, n = A.shape
    F, G = column_module(A.system, n), column_module(A.system, m)
    f = apply_matrix(A, F, G)
    return submodule(G, f.image, name=f"colspace{A}")


def column_space_projectivity(A: Matrix) -> tuple[SystemicModule, SplitCertificate]:
    """π(v) = Av onto A·F split by the inclusion; 1 ⪯ πν on A·F."""
    if not is_preceq_idempotent_matrix(A):
        raise ValueError("matrix is not ⪯-idempotent")
    n = A.shape[0]
    F = column_module(A.system, n)
    C = column_space(A)
    pi = corestrict(apply_matrix(A, F, F), C)
    nu = inclusion(C, F)
    cert = SplitCertificate(pi, nu, "preceq-split")
    if not cert.verify():
        raise AssertionError("column-space splitting failed to verify")
    return C, cert


def compare_vnr_column_spaces(A: Matrix, B: Matrix) -> dict:
    """Report AB·F against A·F for a pair with A ⪯ ABA."""
    AB = matrix_mul(A, B)
    CA, CAB = column_space(A), column_space(AB)
    a, ab = set(CA.embedding), set(CAB.embedding)
    return {"A": str(A), "B": str(B), "AF-size": len(a), "ABF-size": len(ab),
            "ABF-inside-AF": ab <= a, "equal": a == ab}


def idempotent_family(system: FormulaSystem, lo: int = -4, hi: int = 4, n: int = 2):
    """Pairs (A′, I + A′) with A′ idempotent and entries in the window."""
    W = system.window(lo, hi)
    I = identity_matrix(system, n)
    for vals in product(W, repeat=n * n):
        Ap = Matrix(system, tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(n)))
        if matrix_mul(Ap, Ap) == Ap:
            yield Ap, matrix_add(I, Ap)
