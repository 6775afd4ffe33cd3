"""Polynomials acting on the rooted d-ary tree.

A vertex ``x_0 x_1 ... x_{n-1}`` is identified with the integer
``x_0 + d*x_1 + ... + d**(n-1) * x_{n-1}`` (least significant digit first).
Under that identification every integer polynomial is a tree endomorphism,
and its section at a letter is again an integer polynomial of the same degree.
"""

from collections import deque
from dataclasses import dataclass

from .errors import NonLinear, ResourceLimitExceeded
from .exact import check_base, euclid_divmod
from .polynomial import IntPolynomial, evaluate, render, taylor_coefficients

DEFAULT_LIMIT = 2 ** 24


def check_table_size(d, n, limit=None):
    limit = DEFAULT_LIMIT if limit is None else limit
    size = d ** n
    if size > limit:
        raise ResourceLimitExceeded(f"{d}^{n} = {size} exceeds the limit {limit}")
    return size


@dataclass(frozen=True)
class Vertex:
    digits: tuple
    base: int = 2

    def __post_init__(self):
        check_base(self.base)
        digits = tuple(int(x) for x in self.digits)
        for x in digits:
            if not 0 <= x < self.base:
                raise ValueError(f"digit {x} out of range for base {self.base}")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def root(cls, base=2):
        return cls((), base)

    @classmethod
    def from_value(cls, value, n, base=2):
        """The length-``n`` vertex identified with ``value mod base**n``."""
        digits = []
        for _ in range(n):
            value, r = euclid_divmod(value, base)
            digits.append(r)
        return cls(tuple(digits), base)

    @classmethod
    def parse(cls, word, base=2):
        """Parse ``"01"`` (one character per digit), ``"0,12"``, or ``""``/``"eps"`` for the root."""
        word = word.strip()
        if word in ("", "eps"):
            return cls((), base)
        parts = word.split(",") if "," in word else list(word)
        try:
            return cls(tuple(int(p) for p in parts), base)
        except ValueError as exc:
            raise ValueError(f"bad vertex word {word!r}: {exc}") from None

    def __len__(self):
        return len(self.digits)

    @property
    def value(self):
        v = 0
        for x in reversed(self.digits):
            v = v * self.base + x
        return v

    def __add__(self, other):
        if self.base != other.base:
            raise ValueError("cannot concatenate vertices of different bases")
        return Vertex(self.digits + other.digits, self.base)

    def word(self):
        if not self.digits:
            return "eps"
        sep = "" if self.base <= 10 else ","
        return sep.join(str(x) for x in self.digits)

    def __str__(self):
        return self.word()


def vertex_image(f, v):
    """Image of ``v`` under ``f``: same length, value ``f(value(v)) mod d**|v|``."""
    n, d = len(v), v.base
    return Vertex.from_value(evaluate(f, v.value) % d ** n, n, d)


def section(f, d, x0):
    """Section of ``f`` at the letter ``x0``.

    ``Q_d(f(x0)) + sum_{i>=1} c_i * d**(i-1) * x**i`` where ``c_i`` are the
    Taylor coefficients of ``f`` at ``x0``.
    """
    check_base(d)
    if not 0 <= x0 < d:
        raise ValueError(f"digit {x0} out of range for base {d}")
    c = taylor_coefficients(f, x0)
    out = [euclid_divmod(c[0], d).q]
    scale = 1
    for ci in c[1:]:
        out.append(ci * scale)
        scale *= d
    return IntPolynomial(out)


def section_at(f, v):
    g = f
    for x in v.digits:
        g = section(g, v.base, x)
    return g


def first_level_action(f, d):
    """Images of the letters ``0..d-1``: ``R_d(f(x))``."""
    return tuple(evaluate(f, x) % d for x in range(d))


@dataclass(frozen=True)
class LevelMap:
    n: int
    d: int
    images: tuple

    def __getitem__(self, v):
        return self.images[v]

    def __len__(self):
        return len(self.images)

    def reduce(self, m):
        """The level-``m`` map obtained by reducing mod ``d**m`` (``m <= n``)."""
        size = self.d ** m
        return LevelMap(m, self.d, tuple(y % size for y in self.images[:size]))


def level_map(f, d, n, limit=None):
    check_base(d)
    if n < 1:
        raise ValueError("level must be >= 1")
    size = check_table_size(d, n, limit)
    return LevelMap(n, d, tuple(evaluate(f, v) % size for v in range(size)))


def apply_mod(f, d, v, n):
    check_base(d)
    size = d ** n
    if not 0 <= v < size:
        raise ValueError(f"value {v} out of range [0, {size})")
    return evaluate(f, v) % size


# -- portraits ---------------------------------------------------------------

@dataclass(frozen=True)
class PortraitNode:
    vertex: Vertex
    section: IntPolynomial
    action: tuple

    @property
    def is_switch(self):
        return self.action == (1, 0)


@dataclass(frozen=True)
class Portrait:
    f: IntPolynomial
    d: int
    depth: int
    nodes: tuple  # PortraitNode, levels top-down, children in digit order

    def level(self, n):
        return [node for node in self.nodes if len(node.vertex) == n]

    def node(self, v):
        for node in self.nodes:
            if node.vertex == v:
                return node
        raise KeyError(v)

    @property
    def switch_counts(self):
        """Per-level number of switches; binary tree only."""
        if self.d != 2:
            return None
        counts = [0] * (self.depth + 1)
        for node in self.nodes:
            if node.is_switch:
                counts[len(node.vertex)] += 1
        return counts


def portrait(f, d, depth, limit=None):
    check_base(d)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    check_table_size(d, depth, limit)
    level = [(Vertex.root(d), f)]
    nodes = []
    for n in range(depth + 1):
        nxt = []
        for v, g in level:
            nodes.append(PortraitNode(v, g, first_level_action(g, d)))
            if n < depth:
                for x in range(d):
                    nxt.append((v + Vertex((x,), d), section(g, d, x)))
        level = nxt
    return Portrait(f, d, depth, tuple(nodes))


def format_action(action):
    """Cycle notation for permutations (``()`` when trivial), image list otherwise."""
    d = len(action)
    if sorted(action) != list(range(d)):
        return "[" + " ".join(str(y) for y in action) + "]"
    seen = set()
    cycles = []
    for start in range(d):
        if start in seen or action[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = action[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = action[x]
        cycles.append("(" + " ".join(str(c) for c in cycle) + ")")
    return "".join(cycles) or "()"


def portrait_text(p):
    lines = []
    for node in p.nodes:
        indent = "  " * len(node.vertex)
        lines.append(f"{indent}{node.vertex.word()}  {render(node.section)}  {format_action(node.action)}")
    counts = p.switch_counts
    if counts is not None:
        lines.append("switches: " + " ".join(str(c) for c in counts))
    return "\n".join(lines) + "\n"


def _dot_escape(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')


def portrait_dot(p):
    lines = ["digraph portrait {", "  node [shape=box];"]
    for node in p.nodes:
        label = _dot_escape(render(node.section)) + "\\n" + format_action(node.action)
        attrs = f'label="{label}"'
        if p.d == 2 and node.is_switch:
            attrs += ", style=filled, fillcolor=lightgray, penwidth=2"
        lines.append(f'  "{node.vertex.word()}" [{attrs}];')
    for node in p.nodes:
        v = node.vertex
        if len(v) == 0:
            continue
        parent = Vertex(v.digits[:-1], v.base)
        lines.append(f'  "{parent.word()}" -> "{v.word()}" [label="{v.digits[-1]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- orbits ------------------------------------------------------------------

@dataclass(frozen=True)
class Orbit:
    """Forward trajectory of a point until its first repetition.

    ``points[cycle_start:]`` is the cycle; ``cycle_start == 0`` exactly when
    the starting point is periodic.
    """
    points: tuple
    cycle_start: int

    @property
    def cycle(self):
        return self.points[self.cycle_start:]

    @property
    def tail(self):
        return self.points[:self.cycle_start]

    @property
    def is_cycle(self):
        return self.cycle_start == 0


def orbit(f, d, n, start, limit=None):
    check_base(d)
    size = check_table_size(d, n, limit)
    if not 0 <= start < size:
        raise ValueError(f"start {start} out of range [0, {size})")
    index = {}
    points = []
    x = start
    while x not in index:
        index[x] = len(points)
        points.append(x)
        x = evaluate(f, x) % size
    return Orbit(tuple(points), index[x])


# -- finite-state sections of linear polynomials ------------------------------

@dataclass(frozen=True)
class SectionAutomaton:
    """Letter-to-letter transducer whose states are the sections of a linear polynomial."""
    d: int
    states: tuple
    transitions: tuple  # transitions[s][x] -> state index
    outputs: tuple      # outputs[s][x] -> digit
    initial: int = 0

    def run(self, digits, state=None):
        s = self.initial if state is None else state
        out = []
        for x in digits:
            out.append(self.outputs[s][x])
            s = self.transitions[s][x]
        return out

    def apply(self, v, n):
        """Image of the integer ``v`` mod ``d**n`` computed by the transducer."""
        word = Vertex.from_value(v, n, self.d).digits
        return Vertex(tuple(self.run(word)), self.d).value


def linear_section_closure(f, d):
    check_base(d)
    if f.degree > 1:
        raise NonLinear(
            f"{render(f)} has degree {f.degree}: nonlinear polynomials have "
            "infinitely many distinct sections, so there is no finite automaton"
        )
    index = {f: 0}
    states = [f]
    queue = deque([f])
    while queue:
        g = queue.popleft()
        for x in range(d):
            h = section(g, d, x)
            if h not in index:
                index[h] = len(states)
                states.append(h)
                queue.append(h)
    transitions = tuple(tuple(index[section(g, d, x)] for x in range(d)) for g in states)
    outputs = tuple(first_level_action(g, d) for g in states)
    return SectionAutomaton(d, tuple(states), transitions, outputs, 0)


def automaton_text(a):
    lines = [f"states: {len(a.states)}", f"initial: s{a.initial}"]
    for i, g in enumerate(a.states):
        lines.append(f"s{i}: {render(g)}")
    for i in range(len(a.states)):
        for x in range(a.d):
            lines.append(f"s{i} --{x}/{a.outputs[i][x]}--> s{a.transitions[i][x]}")
    return "\n".join(lines) + "\n"


def automaton_dot(a):
    lines = ["digraph automaton {", "  rankdir=LR;"]
    for i, g in enumerate(a.states):
        shape = "doublecircle" if i == a.initial else "circle"
        lines.append(f'  "s{i}" [label="{_dot_escape(render(g))}", shape={shape}];')
    for i in range(len(a.states)):
        for x in range(a.d):
            lines.append(f'  "s{i}" -> "s{a.transitions[i][x]}" [label="{x}/{a.outputs[i][x]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
