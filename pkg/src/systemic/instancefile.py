"""Line-oriented instance files for systems, modules, maps and matrices.

A file is a sequence of directives, one per line, with ``#`` comments::

    kind system
    name supertrop-B
    elem 0 1 nu
    zero 0
    one 1
    tangible 1
    neg 0 -> 0
    add 0 1 -> 1
    mul 1 1 -> 1
    surpass: circ                  # or `surpass: null a b`, or `surpass a <= b` lines

Module files use ``kind module``, name their scalars with ``scalars <ref>`` and
give the action as ``act s b -> c``; ``free <ref> <n>`` declares a free module
instead. Map files use ``kind map`` with ``source``/``target`` references and
``map a -> b`` lines. Matrix files use ``kind matrix``, ``system <ref>`` and
``row x y ...`` lines. A reference is a registry name, ``free <ref> <n>`` or
``file <path>`` (relative to the referring file).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core import FiniteSystem, build_surpass_circ, build_surpass_null
from .instances import REGISTRY, FormulaSystem, get_instance
from .matrices import Matrix, matrix
from .modules import MapTable, SystemicModule, free_module, system_module

KINDS = ("system", "module", "map", "matrix")
ARROW, LE = "->", "<="
DATA_DIR = Path(__file__).parent / "data"


class InstanceError(ValueError):
    """A syntax or semantic error, tagged with its position when known."""

    def __init__(self, message, line: int | None = None, col: int | None = None,
                 source: str = "<text>"):
        self.message, self.line, self.col, self.source = message, line, col, source
        where = source if line is None else f"{source}:{line}:{col or 1}"
        super().__init__(f"{where}: {message}")


@dataclass
class _Line:
    no: int
    col: int
    word: str
    args: list[str]
    text: str


def _lex(text: str, source: str) -> list[_Line]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1
        toks = body.split()
        word = toks[0]
        if word == "surpass:":
            word, toks = "surpass:", toks
        out.append(_Line(no, col, word, toks[1:], raw))
    return out


def _split_arrow(ln: _Line, source, left: int) -> tuple[list[str], str]:
    a = ln.args
    if len(a) != left + 2 or a[left] != ARROW:
        raise InstanceError(f"expected `{ln.word} {' '.join(['x'] * left)} -> y`",
                            ln.no, ln.col, source)
    return a[:left], a[left + 1]


class _Reader:
    def __init__(self, text: str, source: str, base: Path | None):
        self.lines = _lex(text, source)
        self.source = source
        self.base = base
        self.kind = "system"
        self.body = []
        seen_kind = False
        for ln in self.lines:
            if ln.word == "kind":
                if seen_kind or len(ln.args) != 1 or ln.args[0] not in KINDS:
                    raise InstanceError(f"`kind` takes one of {', '.join(KINDS)} once",
                                        ln.no, ln.col, source)
                self.kind, seen_kind = ln.args[0], True
            else:
                self.body.append(ln)

    def err(self, msg, ln: _Line | None = None):
        return InstanceError(msg, ln.no if ln else None, ln.col if ln else None, self.source)

    def single(self, word, default=None, required=True):
        hits = [ln for ln in self.body if ln.word == word]
        if len(hits) > 1:
            raise self.err(f"`{word}` given twice", hits[1])
        if not hits:
            if required and default is None:
                raise self.err(f"missing `{word}` line")
            return default, None
        return hits[0].args, hits[0]

    def all(self, word):
        return [ln for ln in self.body if ln.word == word]

    def check_words(self, allowed):
        for ln in self.body:
            if ln.word not in allowed:
                raise self.err(f"unknown directive `{ln.word}` in a {self.kind} file", ln)

    # --- references ---

    def reference(self, args, ln):
        if not args:
            raise self.err("empty reference", ln)
        if args[0] == "free":
            if len(args) != 3 or not args[2].isdigit():
                raise self.err("expected `free <ref> <n>`", ln)
            S = self.system_ref([args[1]], ln)
            return free_module(S, int(args[2]))
        if args[0] == "file":
            if len(args) != 2:
                raise self.err("expected `file <path>`", ln)
            path = Path(args[1])
            if not path.is_absolute():
                path = (self.base or Path.cwd()) / path
            try:
                return load_instance(path)
            except OSError as e:
                raise self.err(f"cannot read {path}: {e.strerror}", ln) from None
        if len(args) != 1:
            raise self.err("expected a registry name, `free ...` or `file ...`", ln)
        if args[0] in REGISTRY:
            return get_instance(args[0])
        raise self.err(f"unknown instance {args[0]!r}", ln)

    def system_ref(self, args, ln):
        obj = self.reference(args, ln)
        if isinstance(obj, SystemicModule):
            raise self.err("expected a system, got a module", ln)
        return obj

    def module_ref(self, args, ln):
        obj = self.reference(args, ln)
        if isinstance(obj, FiniteSystem):
            return system_module(obj)
        if not isinstance(obj, SystemicModule):
            raise self.err("expected a module", ln)
        return obj

    # --- carriers and tables ---

    def carrier(self):
        elems = [e for ln in self.all("elem") for e in ln.args]
        if not elems:
            raise self.err("missing `elem` line")
        for tok in elems:
            if tok in (ARROW, LE):
                raise self.err(f"reserved token {tok!r} used as an element")
        if len(set(elems)) != len(elems):
            dup = next(e for e in elems if elems.count(e) > 1)
            raise self.err(f"element {dup!r} declared twice")
        return elems

    def element(self, ix, name, ln, what="element"):
        if name not in ix:
            raise self.err(f"undeclared {what} {name!r}", ln)
        return ix[name]

    def binary(self, word, rows, cols, ix, out_ix):
        table = {}
        for ln in self.all(word):
            (a, b), c = _split_arrow(ln, self.source, 2)
            key = (self.element(rows, a, ln), self.element(cols, b, ln))
            val = self.element(out_ix, c, ln)
            if key in table and table[key] != val:
                raise self.err(f"conflicting `{word}` entries for ({a}, {b})", ln)
            table[key] = val
        rnames, cnames = list(rows), list(cols)
        for i, a in enumerate(rnames):
            for j, b in enumerate(cnames):
                if (i, j) not in table:
                    raise self.err(f"non-total table: `{word}` has no entry for ({a}, {b})")
        return tuple(tuple(table[i, j] for j in range(len(cnames))) for i in range(len(rnames)))

    def unary(self, word, ix):
        table = {}
        for ln in self.all(word):
            (a,), b = _split_arrow(ln, self.source, 1)
            i, v = self.element(ix, a, ln), self.element(ix, b, ln)
            if i in table and table[i] != v:
                raise self.err(f"conflicting `{word}` entries for {a}", ln)
            table[i] = v
        names = list(ix)
        for i, a in enumerate(names):
            if i not in table:
                raise self.err(f"non-total table: `{word}` has no entry for {a}")
        return tuple(table[i] for i in range(len(names)))

    def surpass(self, ix):
        """('circ', None), ('null', names) or ('explicit', pairs)."""
        directives = self.all("surpass:")
        pairs = self.all("surpass")
        if directives and pairs:
            raise self.err("use either a `surpass:` directive or `surpass a <= b` lines",
                           pairs[0])
        if len(directives) > 1:
            raise self.err("`surpass:` given twice", directives[1])
        if directives:
            ln = directives[0]
            if ln.args == ["circ"]:
                return "circ", None
            if ln.args and ln.args[0] == "null":
                return "null", [self.element(ix, x, ln) for x in ln.args[1:]]
            raise self.err("expected `surpass: circ` or `surpass: null <elements>`", ln)
        out = set()
        for ln in pairs:
            if len(ln.args) != 3 or ln.args[1] != LE:
                raise self.err("expected `surpass a <= b`", ln)
            out.add((self.element(ix, ln.args[0], ln), self.element(ix, ln.args[2], ln)))
        return "explicit", out


def _relation(n, pairs):
    rel = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        rel[a][b] = True
    return tuple(tuple(r) for r in rel)


def _system(r: _Reader) -> FiniteSystem:
    r.check_words({"name", "elem", "zero", "one", "tangible", "neg", "add", "mul",
                   "surpass", "surpass:"})
    name, _ = r.single("name", default=["system"])
    elems = r.carrier()
    ix = {e: i for i, e in enumerate(elems)}
    (z,), zl = _one_arg(r, "zero")
    (o,), ol = _one_arg(r, "one")
    zero, one = r.element(ix, z, zl), r.element(ix, o, ol)
    tang = frozenset(r.element(ix, t, ln) for ln in r.all("tangible") for t in ln.args)
    add = r.binary("add", ix, ix, ix, ix)
    mul = r.binary("mul", ix, ix, ix, ix)
    neg = r.unary("neg", ix)
    rule, data = r.surpass(ix)
    n = len(elems)
    S = FiniteSystem(tuple(elems), zero, one, add, mul, tang, neg, _relation(n, ()),
                     " ".join(name))
    if rule == "circ":
        pairs, label = build_surpass_circ(S), "circ"
    elif rule == "null":
        pairs = build_surpass_null(S, [elems[i] for i in data])
        label = "null " + " ".join(elems[i] for i in sorted(data))
    else:
        pairs, label = None, "explicit"
    if pairs is not None:
        data = {(S.idx(a), S.idx(b)) for a, b in pairs}
    return FiniteSystem(S.elements, zero, one, add, mul, tang, neg, _relation(n, data),
                        S.name, label)


def _one_arg(r, word):
    args, ln = r.single(word)
    if len(args) != 1:
        raise r.err(f"`{word}` takes one element", ln)
    return args, ln


def _module(r: _Reader) -> SystemicModule:
    free = r.all("free")
    if free:
        r.check_words({"name", "free"})
        if len(free) > 1:
            raise r.err("`free` given twice", free[1])
        ln = free[0]
        M = r.reference(["free"] + ln.args, ln)
        name, _ = r.single("name", required=False)
        if name:
            M = _renamed(M, " ".join(name))
        return M
    r.check_words({"name", "scalars", "elem", "zero", "tangible", "neg", "add", "act",
                   "surpass", "surpass:"})
    sargs, sl = r.single("scalars")
    S = r.system_ref(sargs, sl)
    name, _ = r.single("name", default=["module"])
    elems = r.carrier()
    ix = {e: i for i, e in enumerate(elems)}
    (z,), zl = _one_arg(r, "zero")
    zero = r.element(ix, z, zl)
    tang = frozenset(r.element(ix, t, ln) for ln in r.all("tangible") for t in ln.args)
    add = r.binary("add", ix, ix, ix, ix)
    sx = {e: i for i, e in enumerate(S.elements)}
    act = r.binary("act", sx, ix, ix, ix)
    neg = r.unary("neg", ix)
    rule, data = r.surpass(ix)
    n = len(elems)
    if rule == "circ":
        data = {(a, add[a][add[c][neg[c]]]) for a in range(n) for c in range(n)}
    elif rule == "null":
        nul = set(data)
        data = {(a, add[a][c]) for a in range(n) for c in nul}
    return SystemicModule(S, tuple(elems), zero, add, act, tang, neg, _relation(n, data),
                          " ".join(name))


def _renamed(M: SystemicModule, name: str) -> SystemicModule:
    return SystemicModule(M.scalars, M.elements, M.zero, M.add, M.act, M.tangibles, M.neg,
                          M.le, name, parts=M.parts, coords=M.coords)


def _map(r: _Reader) -> MapTable:
    r.check_words({"name", "source", "target", "map"})
    sargs, sl = r.single("source")
    targs, tl = r.single("target")
    M, N = r.module_ref(sargs, sl), r.module_ref(targs, tl)
    name, _ = r.single("name", default=["f"])
    mx = {e: i for i, e in enumerate(M.elements)}
    nx = {e: i for i, e in enumerate(N.elements)}
    table = {}
    for ln in r.all("map"):
        (a,), b = _split_arrow(ln, r.source, 1)
        i, v = r.element(mx, a, ln, "source element"), r.element(nx, b, ln, "target element")
        if i in table and table[i] != v:
            raise r.err(f"conflicting `map` entries for {a}", ln)
        table[i] = v
    for i, a in enumerate(M.elements):
        if i not in table:
            raise r.err(f"non-total table: `map` has no entry for {a}")
    return MapTable(M, N, tuple(table[i] for i in range(M.size)), " ".join(name))


def _matrix(r: _Reader) -> Matrix:
    r.check_words({"system", "row"})
    sargs, sl = r.single("system")
    S = r.system_ref(sargs, sl)
    rows = [ln.args for ln in r.all("row")]
    if not rows:
        raise r.err("missing `row` line")
    for ln in r.all("row"):
        if len(ln.args) != len(rows[0]):
            raise r.err("rows of different lengths", ln)
        for tok in ln.args:
            try:
                if isinstance(S, FormulaSystem):
                    S.parse(tok)
                else:
                    S.idx(tok)
            except (KeyError, ValueError):
                raise r.err(f"undeclared element {tok!r}", ln) from None
    return matrix(S, rows)


_BUILDERS = {"system": _system, "module": _module, "map": _map, "matrix": _matrix}


def parse_instance(text: str, source: str = "<text>", base: Path | str | None = None):
    """Parse an instance file into a FiniteSystem, SystemicModule, MapTable or Matrix."""
    r = _Reader(text, source, Path(base) if base is not None else None)
    try:
        return _BUILDERS[r.kind](r)
    except InstanceError:
        raise
    except ValueError as e:
        raise r.err(str(e)) from None


def load_instance(path: Path | str):
    path = Path(path)
    return parse_instance(path.read_text(encoding="utf-8"), str(path), path.parent)


# --- canonical serialization -----------------------------------------------------------

def _surpass_lines(elements, le, rule: str | None = None) -> list[str]:
    if rule == "circ":
        return ["surpass: circ"]
    if rule and rule.startswith("null"):
        return [f"surpass: {rule}"]
    n = len(elements)
    return [f"surpass {elements[a]} <= {elements[b]}" for a in range(n) for b in range(n)
            if a != b and le[a][b]]


def _ref(obj) -> str:
    name = getattr(obj, "name", None)
    if name in REGISTRY and (isinstance(obj, FormulaSystem) or obj == get_instance(name)):
        return name
    raise ValueError(f"{obj!r} has no registry reference; serialize it to its own file")


def serialize(obj) -> str:
    """Canonical text: declaration order, one table entry per line, explicit relations."""
    if isinstance(obj, FiniteSystem):
        E = obj.elements
        out = ["kind system", f"name {obj.name}", "elem " + " ".join(E),
               f"zero {E[obj.zero]}", f"one {E[obj.one]}"]
        if obj.tangibles:
            out.append("tangible " + " ".join(E[t] for t in sorted(obj.tangibles)))
        out += [f"neg {E[a]} -> {E[obj.neg[a]]}" for a in range(obj.size)]
        out += [f"add {E[a]} {E[b]} -> {E[obj.add[a][b]]}" for a in range(obj.size)
                for b in range(obj.size)]
        out += [f"mul {E[a]} {E[b]} -> {E[obj.mul[a][b]]}" for a in range(obj.size)
                for b in range(obj.size)]
        rule = obj.surpass_rule if obj.surpass_rule == "circ" or \
            obj.surpass_rule.startswith("null") else None
        out += _surpass_lines(E, obj.le, rule)
        return "\n".join(out) + "\n"
    if isinstance(obj, SystemicModule):
        E, S = obj.elements, obj.scalars
        out = ["kind module", f"name {obj.name}", f"scalars {_ref(S)}", "elem " + " ".join(E),
               f"zero {E[obj.zero]}"]
        if obj.tangibles:
            out.append("tangible " + " ".join(E[t] for t in sorted(obj.tangibles)))
        out += [f"neg {E[a]} -> {E[obj.neg[a]]}" for a in range(obj.size)]
        out += [f"add {E[a]} {E[b]} -> {E[obj.add[a][b]]}" for a in range(obj.size)
                for b in range(obj.size)]
        out += [f"act {S.elements[s]} {E[b]} -> {E[obj.act[s][b]]}" for s in range(S.size)
                for b in range(obj.size)]
        out += _surpass_lines(E, obj.le)
        return "\n".join(out) + "\n"
    if isinstance(obj, MapTable):
        raise ValueError("serialize maps with serialize_map, which needs module references")
    if isinstance(obj, Matrix):
        out = ["kind matrix", f"system {_ref(obj.system)}"]
        out += ["row " + " ".join(r) for r in obj.names()]
        return "\n".join(out) + "\n"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def serialize_map(f: MapTable, source_ref: str, target_ref: str) -> str:
    out = ["kind map", f"name {f.name}", f"source {source_ref}", f"target {target_ref}"]
    out += [f"map {f.source.elements[i]} -> {f.target.elements[v]}"
            for i, v in enumerate(f.table)]
    return "\n".join(out) + "\n"


def canonical_text(path: Path | str) -> str:
    """Canonical serialization of an instance file; maps keep their module references."""
    path = Path(path)
    obj = load_instance(path)
    if not isinstance(obj, MapTable):
        return serialize(obj)
    r = _Reader(path.read_text(encoding="utf-8"), str(path), path.parent)
    (src, _), (tgt, _) = r.single("source"), r.single("target")
    return serialize_map(obj, " ".join(src), " ".join(tgt))


def shipped_files() -> list[Path]:
    return sorted(p for p in DATA_DIR.iterdir() if p.suffix in (".sys", ".mod", ".map", ".mat"))
