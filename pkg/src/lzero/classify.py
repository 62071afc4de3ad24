"""Classification of links up to the coarsest surgery-theoretic
equivalence detected by the low-degree battery.

For an m-component link with vanishing pairwise linking numbers the
complete set of invariants is

* ``a`` — the Arf invariant of each component (m bits),
* ``b`` — the triple linking number of each component triple, lex
  ordered (integers),
* ``c`` — the parity of the two-component degree-three Conway
  coefficient for each pair, lex ordered (bits),

and two links are equivalent exactly when the tuples agree.  The tuples
form an abelian group under component-wise addition (bits mod 2,
triples over the integers), realized geometrically by stacking; the
identity is the unlink class, and a link is trivial in this sense —
equivalently, its components cobound class-2 gropes, equivalently it
bounds an order-2 Whitney tower — iff its tuple is zero.

``representative`` builds a canonical diagram in a given class from
unknots decorated with trefoil summands, Borromean insertions and
clasped pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construct import build_from_gadgets
from .diagram import LinkDiagram
from .errors import DiagramParseError, NotClassifiableError
from .invariants import (arf, component_pairs, component_triples,
                         invariant_tuple, sato_levine)
from .milnor import linking_number, triple_linking

__all__ = [
    "ZeroSolveClass",
    "identity_class",
    "class_add",
    "class_neg",
    "class_order",
    "classify",
    "equivalent",
    "SolvableReport",
    "is_zero_solvable",
    "representative",
    "class_gadgets",
    "render_class",
    "parse_class",
    "class_json",
]


@dataclass(frozen=True)
class ZeroSolveClass:
    """Group element (a; b; c) for m components.

    ``a`` has one bit per component, ``b`` one integer per lex-ordered
    component triple, ``c`` one bit per lex-ordered pair.
    """

    m: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("component count must be positive")
        if len(self.a) != self.m:
            raise ValueError(f"a needs {self.m} entries, got {len(self.a)}")
        n3 = len(component_triples(self.m))
        if len(self.b) != n3:
            raise ValueError(f"b needs {n3} entries, got {len(self.b)}")
        n2 = len(component_pairs(self.m))
        if len(self.c) != n2:
            raise ValueError(f"c needs {n2} entries, got {len(self.c)}")
        if any(x not in (0, 1) for x in self.a):
            raise ValueError("a entries must be 0 or 1")
        if any(x not in (0, 1) for x in self.c):
            raise ValueError("c entries must be 0 or 1")
        if any(not isinstance(x, int) for x in self.b):
            raise ValueError("b entries must be integers")


def identity_class(m: int) -> ZeroSolveClass:
    return ZeroSolveClass(m, (0,) * m, (0,) * len(component_triples(m)),
                          (0,) * len(component_pairs(m)))


def class_add(g: ZeroSolveClass, h: ZeroSolveClass) -> ZeroSolveClass:
    if g.m != h.m:
        raise ValueError("cannot add classes with different component counts")
    return ZeroSolveClass(
        g.m,
        tuple((x + y) % 2 for x, y in zip(g.a, h.a)),
        tuple(x + y for x, y in zip(g.b, h.b)),
        tuple((x + y) % 2 for x, y in zip(g.c, h.c)))


def class_neg(g: ZeroSolveClass) -> ZeroSolveClass:
    return ZeroSolveClass(g.m, g.a, tuple(-x for x in g.b), g.c)


def class_order(g: ZeroSolveClass):
    """1 for the identity, "infinite" with any nonzero triple, else 2."""
    if g == identity_class(g.m):
        return 1
    if any(g.b):
        return "infinite"
    return 2


# ---------------------------------------------------------------------------
# diagrams -> classes


def _first_nonzero_linking(d: LinkDiagram):
    for i, j in component_pairs(d.m):
        v = linking_number(d, i, j)
        if v != 0:
            return (i, j), v
    return None


def classify(d: LinkDiagram) -> ZeroSolveClass:
    """Class of the link; requires all pairwise linking numbers zero."""
    bad = _first_nonzero_linking(d)
    if bad is not None:
        (i, j), v = bad
        raise NotClassifiableError(
            f"not classifiable: lk(K_{i},K_{j})={v}", pair=(i, j), linking=v)
    a = tuple(arf(d, c) for c in range(1, d.m + 1))
    b = tuple(triple_linking(d, i, j, k)
              for i, j, k in component_triples(d.m))
    c = tuple(sato_levine(d, i, j) % 2 for i, j in component_pairs(d.m))
    return ZeroSolveClass(d.m, a, b, c)


def equivalent(d1: LinkDiagram, d2: LinkDiagram) -> bool:
    """Whether two diagrams present equivalent links.

    Diagrams with different component counts are never equivalent;
    either diagram having a nonzero linking number raises
    :class:`NotClassifiableError`.
    """
    if d1.m != d2.m:
        return False
    return classify(d1) == classify(d2)


@dataclass(frozen=True)
class SolvableReport:
    """Three equivalent triviality readings plus the first obstruction."""

    solvable: bool
    grope_class_2: bool
    whitney_tower_order_2: bool
    obstruction: str | None


def is_zero_solvable(d: LinkDiagram) -> SolvableReport:
    """Trivial-class test with the first obstruction in scan order
    (linking, then Arf, then triples, then pair parities)."""
    obstruction = None
    bad = _first_nonzero_linking(d)
    if bad is not None:
        (i, j), v = bad
        obstruction = f"lk(K_{i},K_{j})={v}"
    else:
        t = invariant_tuple(d)
        for c, v in enumerate(t.arf, start=1):
            if v:
                obstruction = f"Arf(K_{c})=1"
                break
        if obstruction is None:
            for (i, j, k), v in sorted(t.triple.items()):
                if v:
                    obstruction = f"mubar({i},{j},{k})={v}"
                    break
        if obstruction is None:
            for (i, j), v in sorted(t.sato_levine.items()):
                if v % 2:
                    obstruction = f"mubar({i},{i},{j},{j})={v} (odd)"
                    break
    ok = obstruction is None
    return SolvableReport(ok, ok, ok, obstruction)


# ---------------------------------------------------------------------------
# classes -> diagrams


def class_gadgets(g: ZeroSolveClass) -> list:
    """Gadget list whose serial composition realizes ``g``."""
    gadgets = []
    for comp, bit in enumerate(g.a, start=1):
        if bit:
            gadgets.append(("TREFOIL", (comp,)))
    for (i, j, k), v in zip(component_triples(g.m), g.b):
        for _ in range(abs(v)):
            gadgets.append(("BORROMEAN", (i, j, k), 1 if v > 0 else -1))
    for (i, j), bit in zip(component_pairs(g.m), g.c):
        if bit:
            gadgets.append(("WHITEHEAD", (i, j)))
    return gadgets


def representative(g: ZeroSolveClass) -> LinkDiagram:
    """Canonical diagram in class ``g``: an unlink with one trefoil
    summand per set Arf bit, |b| Borromean insertions per triple and a
    clasped pair per set parity bit."""
    diagram, _ = build_from_gadgets(g.m, class_gadgets(g),
                                    name=render_class(g))
    return diagram


# ---------------------------------------------------------------------------
# text and JSON forms


def render_class(g: ZeroSolveClass) -> str:
    a = ",".join(str(x) for x in g.a)
    b = ",".join("0" if x == 0 else f"{x:+d}" for x in g.b)
    c = ",".join(str(x) for x in g.c)
    return f"m={g.m}; a={a}; b={b}; c={c}"


def parse_class(text: str) -> ZeroSolveClass:
    """Inverse of :func:`render_class`."""
    fields = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, eq, val = part.partition("=")
        key = key.strip()
        if not eq or key not in ("m", "a", "b", "c") or key in fields:
            raise DiagramParseError(f"bad class field {part!r}")
        fields[key] = val.strip()
    missing = [k for k in ("m", "a", "b", "c") if k not in fields]
    if missing:
        raise DiagramParseError(f"class string missing {', '.join(missing)}")

    def ints(s):
        if not s:
            return ()
        try:
            return tuple(int(x) for x in s.split(","))
        except ValueError:
            raise DiagramParseError(f"bad integer list {s!r}") from None

    try:
        m = int(fields["m"])
    except ValueError:
        raise DiagramParseError(f"bad component count {fields['m']!r}") from None
    try:
        return ZeroSolveClass(m, ints(fields["a"]), ints(fields["b"]),
                              ints(fields["c"]))
    except ValueError as exc:
        raise DiagramParseError(str(exc)) from None


def class_json(g: ZeroSolveClass) -> dict:
    return {
        "m": g.m,
        "a": list(g.a),
        "b": {f"({i},{j},{k})": v
              for (i, j, k), v in zip(component_triples(g.m), g.b)},
        "c": {f"({i},{j})": v
              for (i, j), v in zip(component_pairs(g.m), g.c)},
    }
