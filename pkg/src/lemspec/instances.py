"""Instance construction: ideal lattices, submodule lattices, explicit
tables, a text descriptor format, and the built-in catalog.

Descriptors are small line-oriented files:

    name Z6-ideal-lattice
    ring zn 6
    module ideal-lattice

Rings are ``zn N``, ``product ( RING , RING )``, or ``explicit order N
add TABLE mul TABLE``; modules are ``ideal-lattice``, ``submodule-lattice
size N zero Z add TABLE action TABLE``, or ``explicit size N zero Z leq
TABLE add TABLE action TABLE``.  A TABLE is rows of integers separated by
``;``.  ``#`` starts a comment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .errors import ModuleAxiomViolation, ParseError
from .le_modules import LeModuleInstance, make_le_module
from .lattices import make_lattice
from .rings import (
    FiniteRing,
    Ideal,
    all_ideals,
    ideal_sort_key,
    ideal_sum,
    make_ring,
    make_zn,
    product_ring,
)

IntTable = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ZnSpec:
    n: int


@dataclass(frozen=True)
class ProductSpec:
    left: "RingSpec"
    right: "RingSpec"


@dataclass(frozen=True)
class ExplicitRingSpec:
    order: int
    add: IntTable
    mul: IntTable


RingSpec = Union[ZnSpec, ProductSpec, ExplicitRingSpec]


@dataclass(frozen=True)
class IdealLatticeSpec:
    pass


@dataclass(frozen=True)
class SubmoduleLatticeSpec:
    size: int
    zero: int
    add: IntTable
    action: IntTable


@dataclass(frozen=True)
class ExplicitModuleSpec:
    size: int
    zero: int
    leq: IntTable
    add: IntTable
    action: IntTable


ModuleSpec = Union[IdealLatticeSpec, SubmoduleLatticeSpec, ExplicitModuleSpec]


@dataclass(frozen=True)
class InstanceDescriptor:
    name: str
    ring: RingSpec
    module: ModuleSpec


def _set_label(members: Sequence[int]) -> str:
    return "{" + ",".join(str(m) for m in sorted(members)) + "}"


def build_ring(spec: RingSpec) -> FiniteRing:
    if isinstance(spec, ZnSpec):
        return make_zn(spec.n)
    if isinstance(spec, ProductSpec):
        return product_ring(build_ring(spec.left), build_ring(spec.right))
    return make_ring(spec.order, spec.add, spec.mul)


def ideal_lattice_le_module(ring: FiniteRing, name: str) -> LeModuleInstance:
    """The lattice of all ideals, with ideal sum and elementwise action."""
    ideals = all_ideals(ring)
    index = {i.members: k for k, i in enumerate(ideals)}
    size = len(ideals)
    leq = [[ideals[a].members <= ideals[b].members for b in range(size)] for a in range(size)]
    lattice = make_lattice(size, leq)
    add = [
        [index[ideal_sum(ideals[a], ideals[b]).members] for b in range(size)]
        for a in range(size)
    ]
    action = [
        [index[frozenset(ring.mul[r][x] for x in ideals[m].members)] for m in range(size)]
        for r in range(ring.order)
    ]
    zero_m = index[frozenset({ring.zero})]
    labels = tuple(_set_label(i.sorted_members()) for i in ideals)
    return make_le_module(ring, lattice, add, zero_m, action, name, labels)


def _check_classical_module(
    ring: FiniteRing, size: int, zero: int, add: IntTable, action: IntTable
) -> None:
    rng = range(size)
    for x in rng:
        if add[zero][x] != x:
            raise ModuleAxiomViolation("group-identity", (zero, x))
    for x, y in itertools.product(rng, repeat=2):
        if add[x][y] != add[y][x]:
            raise ModuleAxiomViolation("group-comm", (x, y))
    for x, y, z in itertools.product(rng, repeat=3):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            raise ModuleAxiomViolation("group-assoc", (x, y, z))
    for x in rng:
        if all(add[x][y] != zero for y in rng):
            raise ModuleAxiomViolation("group-inverse", (x,))
    for r in range(ring.order):
        for x, y in itertools.product(rng, repeat=2):
            if action[r][add[x][y]] != add[action[r][x]][action[r][y]]:
                raise ModuleAxiomViolation("action-add", (r, x, y))
    for r, s in itertools.product(range(ring.order), repeat=2):
        for x in rng:
            if action[ring.add[r][s]][x] != add[action[r][x]][action[s][x]]:
                raise ModuleAxiomViolation("scalar-add", (r, s, x))
            if action[ring.mul[r][s]][x] != action[r][action[s][x]]:
                raise ModuleAxiomViolation("scalar-mul", (r, s, x))
    for x in rng:
        if action[ring.one][x] != x:
            raise ModuleAxiomViolation("unit-action", (x,))


def submodule_lattice_le_module(
    ring: FiniteRing,
    size: int,
    zero: int,
    add: Sequence[Sequence[int]],
    action: Sequence[Sequence[int]],
    name: str,
) -> LeModuleInstance:
    """The lattice of submodules of a finite classical module."""
    add_t = tuple(tuple(int(v) for v in row) for row in add)
    act_t = tuple(tuple(int(v) for v in row) for row in action)
    _check_classical_module(ring, size, zero, add_t, act_t)

    def span(seed: frozenset[int]) -> frozenset[int]:
        members = set(seed) | {zero}
        frontier = list(members)
        while frontier:
            a = frontier.pop()
            new = {add_t[a][b] for b in members}
            new.update(act_t[r][a] for r in range(ring.order))
            for c in new:
                if c not in members:
                    members.add(c)
                    frontier.append(c)
        return frozenset(members)

    submodules: set[frozenset[int]] = {frozenset({zero})}
    frontier = [frozenset({zero})]
    while frontier:
        base = frontier.pop()
        for g in range(size):
            if g in base:
                continue
            grown = span(base | {g})
            if grown not in submodules:
                submodules.add(grown)
                frontier.append(grown)
    ordered = sorted(submodules, key=lambda s: (len(s), sorted(s)))
    index = {s: k for k, s in enumerate(ordered)}
    lat_size = len(ordered)
    leq = [[ordered[a] <= ordered[b] for b in range(lat_size)] for a in range(lat_size)]
    lattice = make_lattice(lat_size, leq)
    madd = [
        [
            index[frozenset(add_t[x][y] for x in ordered[a] for y in ordered[b])]
            for b in range(lat_size)
        ]
        for a in range(lat_size)
    ]
    maction = [
        [index[frozenset(act_t[r][x] for x in ordered[m])] for m in range(lat_size)]
        for r in range(ring.order)
    ]
    zero_m = index[frozenset({zero})]
    labels = tuple(_set_label(s) for s in ordered)
    return make_le_module(ring, lattice, madd, zero_m, maction, name, labels)


def build_instance(desc: InstanceDescriptor) -> LeModuleInstance:
    return _build_instance_cached(desc)


@lru_cache(maxsize=None)
def _build_instance_cached(desc: InstanceDescriptor) -> LeModuleInstance:
    ring = build_ring(desc.ring)
    mod = desc.module
    if isinstance(mod, IdealLatticeSpec):
        return ideal_lattice_le_module(ring, desc.name)
    if isinstance(mod, SubmoduleLatticeSpec):
        return submodule_lattice_le_module(
            ring, mod.size, mod.zero, mod.add, mod.action, desc.name
        )
    lattice = make_lattice(mod.size, [[bool(v) for v in row] for row in mod.leq])
    return make_le_module(ring, lattice, mod.add, mod.zero, mod.action, desc.name)


def cyclic_module_tables(n: int) -> tuple[int, int, IntTable, IntTable]:
    """Z_n as a module over Z_n: (size, zero, add, action)."""
    add = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    action = tuple(tuple((r * x) % n for x in range(n)) for r in range(n))
    return n, 0, add, action


def product_module_tables(
    a: tuple[int, int, IntTable, IntTable], b: tuple[int, int, IntTable, IntTable]
) -> tuple[int, int, IntTable, IntTable]:
    """Componentwise product of two modules over the same ring."""
    (s1, z1, add1, act1) = a
    (s2, z2, add2, act2) = b
    if len(act1) != len(act2):
        raise ValueError("modules must share the scalar ring")
    size = s1 * s2

    def enc(x: int, y: int) -> int:
        return x * s2 + y

    add = tuple(
        tuple(
            enc(add1[x1][x2], add2[y1][y2])
            for x2 in range(s1)
            for y2 in range(s2)
        )
        for x1 in range(s1)
        for y1 in range(s2)
    )
    action = tuple(
        tuple(enc(act1[r][x], act2[r][y]) for x in range(s1) for y in range(s2))
        for r in range(len(act1))
    )
    return size, enc(z1, z2), add, action


def mod_scaled_cyclic_tables(n: int, ring_order: int) -> tuple[int, int, IntTable, IntTable]:
    """Z_n as a module over Z_m when n divides m."""
    if ring_order % n != 0:
        raise ValueError("module modulus must divide the ring modulus")
    add = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    action = tuple(tuple((r * x) % n for x in range(n)) for r in range(ring_order))
    return n, 0, add, action


_CHAIN3_MODULE = ExplicitModuleSpec(
    size=3,
    zero=0,
    leq=((1, 1, 1), (0, 1, 1), (0, 0, 1)),
    add=((0, 1, 2), (1, 2, 2), (2, 2, 2)),
    action=((0, 0, 0), (0, 1, 2)),
)


def _submodule_spec(tables: tuple[int, int, IntTable, IntTable]) -> SubmoduleLatticeSpec:
    size, zero, add, action = tables
    return SubmoduleLatticeSpec(size, zero, add, action)


@lru_cache(maxsize=None)
def catalog() -> tuple[InstanceDescriptor, ...]:
    """The built-in deterministic instance set."""
    entries: list[InstanceDescriptor] = []
    for n in (2, 3, 4, 5, 6, 8, 9, 12, 30):
        entries.append(
            InstanceDescriptor(f"Z{n}-ideal-lattice", ZnSpec(n), IdealLatticeSpec())
        )
    entries.append(
        InstanceDescriptor(
            "Z2xZ3-ideal-lattice", ProductSpec(ZnSpec(2), ZnSpec(3)), IdealLatticeSpec()
        )
    )
    entries.append(
        InstanceDescriptor(
            "Z2xZ2-ideal-lattice", ProductSpec(ZnSpec(2), ZnSpec(2)), IdealLatticeSpec()
        )
    )
    z2 = cyclic_module_tables(2)
    z4 = cyclic_module_tables(4)
    z6 = cyclic_module_tables(6)
    entries.append(
        InstanceDescriptor(
            "Z2xZ2-over-Z2-submodules",
            ZnSpec(2),
            _submodule_spec(product_module_tables(z2, z2)),
        )
    )
    entries.append(
        InstanceDescriptor("Z4-over-Z4-submodules", ZnSpec(4), _submodule_spec(z4))
    )
    entries.append(
        InstanceDescriptor("Z6-over-Z6-submodules", ZnSpec(6), _submodule_spec(z6))
    )
    z2_over_z4 = mod_scaled_cyclic_tables(2, 4)
    entries.append(
        InstanceDescriptor(
            "Z2xZ4-over-Z4-submodules",
            ZnSpec(4),
            _submodule_spec(product_module_tables(z2_over_z4, z4)),
        )
    )
    entries.append(
        InstanceDescriptor("three-chain-over-Z2", ZnSpec(2), _CHAIN3_MODULE)
    )
    return tuple(entries)


def catalog_names() -> tuple[str, ...]:
    return tuple(d.name for d in catalog())


def find_descriptor(name: str) -> InstanceDescriptor | None:
    for d in catalog():
        if d.name == name:
            return d
    return None


# --- descriptor text format ---------------------------------------------


@dataclass(frozen=True)
class _Token:
    text: str
    line: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for ch in "(),;":
            line = line.replace(ch, f" {ch} ")
        for tok in line.split():
            tokens.append(_Token(tok, lineno))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, field: str) -> _Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1].line if self.tokens else None
            raise ParseError("unexpected end of input", line=last, field=field)
        self.pos += 1
        return tok

    def expect(self, text: str, field: str) -> _Token:
        tok = self.next(field)
        if tok.text != text:
            raise ParseError(f"expected '{text}', got '{tok.text}'", tok.line, field)
        return tok

    def integer(self, field: str) -> int:
        tok = self.next(field)
        try:
            return int(tok.text)
        except ValueError:
            raise ParseError(f"expected integer, got '{tok.text}'", tok.line, field) from None

    def table(self, field: str, stop_words: frozenset[str]) -> IntTable:
        rows: list[tuple[int, ...]] = []
        current: list[int] = []
        while True:
            tok = self.peek()
            if tok is None or tok.text in stop_words:
                break
            self.pos += 1
            if tok.text == ";":
                if not current:
                    raise ParseError("empty table row", tok.line, field)
                rows.append(tuple(current))
                current = []
                continue
            try:
                current.append(int(tok.text))
            except ValueError:
                raise ParseError(
                    f"expected integer or ';', got '{tok.text}'", tok.line, field
                ) from None
        if current:
            rows.append(tuple(current))
        if not rows:
            tok = self.peek()
            raise ParseError("empty table", tok.line if tok else None, field)
        return tuple(rows)

    def ring(self) -> RingSpec:
        tok = self.next("ring")
        if tok.text == "zn":
            return ZnSpec(self.integer("ring"))
        if tok.text == "product":
            self.expect("(", "ring")
            left = self.ring()
            self.expect(",", "ring")
            right = self.ring()
            self.expect(")", "ring")
            return ProductSpec(left, right)
        if tok.text == "explicit":
            self.expect("order", "ring")
            order = self.integer("ring")
            self.expect("add", "ring")
            add = self.table("add", frozenset({"mul"}))
            self.expect("mul", "ring")
            mul = self.table("mul", frozenset({"module", "name", ")", ","}))
            return ExplicitRingSpec(order, add, mul)
        raise ParseError(f"unknown ring form '{tok.text}'", tok.line, "ring")

    def module(self) -> ModuleSpec:
        tok = self.next("module")
        if tok.text == "ideal-lattice":
            return IdealLatticeSpec()
        if tok.text == "submodule-lattice":
            self.expect("size", "module")
            size = self.integer("module")
            self.expect("zero", "module")
            zero = self.integer("module")
            self.expect("add", "module")
            add = self.table("add", frozenset({"action"}))
            self.expect("action", "module")
            action = self.table("action", frozenset({"name", "ring"}))
            return SubmoduleLatticeSpec(size, zero, add, action)
        if tok.text == "explicit":
            self.expect("size", "module")
            size = self.integer("module")
            self.expect("zero", "module")
            zero = self.integer("module")
            self.expect("leq", "module")
            leq = self.table("leq", frozenset({"add"}))
            self.expect("add", "module")
            add = self.table("add", frozenset({"action"}))
            self.expect("action", "module")
            action = self.table("action", frozenset({"name", "ring"}))
            return ExplicitModuleSpec(size, zero, leq, add, action)
        raise ParseError(f"unknown module form '{tok.text}'", tok.line, "module")


def parse_descriptor(text: str) -> InstanceDescriptor:
    """Parse descriptor text; raises ParseError with a line number."""
    parser = _Parser(_tokenize(text))
    name: str | None = None
    ring: RingSpec | None = None
    module: ModuleSpec | None = None
    while parser.peek() is not None:
        tok = parser.next("descriptor")
        if tok.text == "name":
            if name is not None:
                raise ParseError("duplicate 'name'", tok.line, "name")
            name = parser.next("name").text
        elif tok.text == "ring":
            if ring is not None:
                raise ParseError("duplicate 'ring'", tok.line, "ring")
            ring = parser.ring()
        elif tok.text == "module":
            if module is not None:
                raise ParseError("duplicate 'module'", tok.line, "module")
            module = parser.module()
        else:
            raise ParseError(f"unknown keyword '{tok.text}'", tok.line, "descriptor")
    if name is None:
        raise ParseError("missing 'name'", field="name")
    if ring is None:
        raise ParseError("missing 'ring'", field="ring")
    if module is None:
        raise ParseError("missing 'module'", field="module")
    return InstanceDescriptor(name, ring, module)


def _format_table(table: IntTable) -> str:
    return " ; ".join(" ".join(str(v) for v in row) for row in table)


def _format_ring(spec: RingSpec) -> str:
    if isinstance(spec, ZnSpec):
        return f"zn {spec.n}"
    if isinstance(spec, ProductSpec):
        return f"product ( {_format_ring(spec.left)} , {_format_ring(spec.right)} )"
    return (
        f"explicit order {spec.order} add {_format_table(spec.add)} "
        f"mul {_format_table(spec.mul)}"
    )


def _format_module(spec: ModuleSpec) -> str:
    if isinstance(spec, IdealLatticeSpec):
        return "ideal-lattice"
    if isinstance(spec, SubmoduleLatticeSpec):
        return (
            f"submodule-lattice size {spec.size} zero {spec.zero} "
            f"add {_format_table(spec.add)} action {_format_table(spec.action)}"
        )
    return (
        f"explicit size {spec.size} zero {spec.zero} leq {_format_table(spec.leq)} "
        f"add {_format_table(spec.add)} action {_format_table(spec.action)}"
    )


def format_descriptor(desc: InstanceDescriptor) -> str:
    return (
        f"name {desc.name}\n"
        f"ring {_format_ring(desc.ring)}\n"
        f"module {_format_module(desc.module)}\n"
    )
