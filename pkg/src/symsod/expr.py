"""Expression trees for categories: atoms, SODs, bullet products, Sym nodes.

The leaves are category atoms -- a point, a curve of given genus, a
symmetric power of a curve, a surface with known Betti numbers, a phantom
(all Hochschild homology zero by declaration), or an opaque named category.
``SymPower`` atoms are unexpandable Sym leaves produced by the rewrite
engine; they keep their arity and base so the invariants module can still
evaluate them.

Composite nodes:

* ``Sod(parts, orthogonal=...)`` -- an ordered semi-orthogonal decomposition
  (optionally flagged completely orthogonal),
* ``Bullet(factors)`` -- the product of categories (commutative for
  canonical display),
* ``Sym(arity, inner)`` -- a symmetric power, kept structural until the
  rewrite engine runs.

Canonicalization flattens nested bullets and nested SODs of matching
orthogonality, unwraps singletons, and sorts bullet factors by a fixed
total order; SOD order is always preserved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .series import BettiVector


class InternalInvariantError(AssertionError):
    """A structural invariant of the engine failed; maps to CLI exit 3."""


@dataclass(frozen=True)
class Point:
    def __str__(self) -> str:
        return "pt"


@dataclass(frozen=True)
class Curve:
    genus: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")

    def __str__(self) -> str:
        return f"curve({self.genus})"


@dataclass(frozen=True)
class SymCurve:
    """Fully expanded curve power: the a-th symmetric power of a genus-g curve.

    For degree >= genus these categories are known to refine further into
    pieces built from the Jacobian; they deliberately stay atomic here, and
    invariants are evaluated through Macdonald's series instead.
    """

    genus: int
    degree: int

    def __post_init__(self) -> None:
        if self.genus < 0 or self.degree < 0:
            raise ValueError(f"need genus >= 0 and degree >= 0: {self}")

    def __str__(self) -> str:
        return f"sym^{self.degree}(curve({self.genus}))"


@dataclass(frozen=True)
class Surface:
    """A surface atom with known Betti numbers and an optional declared SOD.

    Identity is (name, betti); the declared SOD is bookkeeping only.  Atoms
    produced by collapsing a surface-like SOD are named by their Betti
    literal so that the canonical text stays inside the grammar.
    """

    name: str
    betti: BettiVector
    declared_sod: Optional["CatExpr"] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.betti.b0 != self.betti.b4 or self.betti.b1 != self.betti.b3:
            raise ValueError(f"surface Betti vector must be Poincare-dual: {self.betti}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Phantom:
    """An admissible piece with vanishing total Hochschild homology."""

    def __str__(self) -> str:
        return "phantom"


@dataclass(frozen=True)
class Opaque:
    """A named category we know nothing about beyond optionally declared invariants."""

    name: str
    euler: Optional[int] = None
    hh: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("opaque atom needs a non-empty name")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SymPower:
    """An unexpanded symmetric power kept as an opaque leaf, arity attached."""

    arity: int
    base: "CatExpr"

    def __post_init__(self) -> None:
        if self.arity < 2:
            raise ValueError("sym powers of arity < 2 should have been simplified away")

    def __str__(self) -> str:
        return f"sym^{self.arity}({self.base})"


@dataclass(frozen=True)
class Sod:
    parts: tuple["CatExpr", ...]
    orthogonal: bool = False

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("SOD must have at least one component")

    def __str__(self) -> str:
        inner = ", ".join(str(p) for p in self.parts)
        return f"sod({inner})"


@dataclass(frozen=True)
class Bullet:
    factors: tuple["CatExpr", ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("bullet product must have at least one factor")

    def __str__(self) -> str:
        inner = ", ".join(str(f) for f in self.factors)
        return f"bullet({inner})"


@dataclass(frozen=True)
class Sym:
    arity: int
    inner: "CatExpr"

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ValueError(f"sym arity must be >= 0, got {self.arity}")

    def __str__(self) -> str:
        return f"sym({self.arity}, {self.inner})"


Atom = Union[Point, Curve, SymCurve, Surface, Phantom, Opaque, SymPower]
CatExpr = Union[Atom, Sod, Bullet, Sym]

POINT = Point()
PHANTOM = Phantom()

_ATOM_TYPES = (Point, Curve, SymCurve, Surface, Phantom, Opaque, SymPower)


def is_atom(e: CatExpr) -> bool:
    return isinstance(e, _ATOM_TYPES)


def sort_key(e: CatExpr) -> tuple:
    """Total order on expressions: atoms first (point < curve < sym-curve <
    surface < phantom < opaque < sym-power), then composites by kind and
    children."""
    if isinstance(e, Point):
        return (0,)
    if isinstance(e, Curve):
        return (1, e.genus)
    if isinstance(e, SymCurve):
        return (2, e.genus, e.degree)
    if isinstance(e, Surface):
        return (3, e.name)
    if isinstance(e, Phantom):
        return (4,)
    if isinstance(e, Opaque):
        return (5, e.name)
    if isinstance(e, SymPower):
        return (6, e.arity, sort_key(e.base))
    if isinstance(e, Sod):
        return (7, e.orthogonal, tuple(sort_key(p) for p in e.parts))
    if isinstance(e, Bullet):
        return (8, tuple(sort_key(f) for f in e.factors))
    if isinstance(e, Sym):
        return (9, e.arity, sort_key(e.inner))
    raise TypeError(f"not a CatExpr: {e!r}")


def canonicalize(e: CatExpr) -> CatExpr:
    """Canonical form: flatten, sort bullet factors, unwrap singletons.

    Nested bullets are flattened; nested SODs are flattened only when their
    orthogonality flags match.  Bullet factors are sorted by the fixed total
    order; SOD order is preserved.  Idempotent by construction.  No
    evaluation happens here: sym(0, -) and sym(1, -) are left alone for the
    rewrite engine.
    """
    if is_atom(e):
        return e
    if isinstance(e, Sym):
        return Sym(e.arity, canonicalize(e.inner))
    if isinstance(e, Bullet):
        factors: list[CatExpr] = []
        for f in e.factors:
            cf = canonicalize(f)
            if isinstance(cf, Bullet):
                factors.extend(cf.factors)
            else:
                factors.append(cf)
        factors.sort(key=sort_key)
        if len(factors) == 1:
            return factors[0]
        return Bullet(tuple(factors))
    if isinstance(e, Sod):
        parts: list[CatExpr] = []
        for p in e.parts:
            cp = canonicalize(p)
            if isinstance(cp, Sod) and cp.orthogonal == e.orthogonal:
                parts.extend(cp.parts)
            else:
                parts.append(cp)
        if len(parts) == 1:
            return parts[0]
        return Sod(tuple(parts), e.orthogonal)
    raise TypeError(f"not a CatExpr: {e!r}")


# ---------------------------------------------------------------------------
# Fully expanded components


@dataclass(frozen=True)
class Component:
    """A product of atoms, stored as a sorted tuple (a canonical multiset).

    Point factors are the unit of the product: they are dropped when other
    atoms are present, and a pure-point product collapses to a single point.
    """

    factors: tuple[Atom, ...]

    @classmethod
    def of(cls, atoms: Iterable[Atom]) -> "Component":
        kept = [a for a in atoms if not isinstance(a, Point)]
        for a in kept:
            if not is_atom(a):
                raise InternalInvariantError(f"component factor is not an atom: {a!r}")
        if not kept:
            return cls((POINT,))
        kept.sort(key=sort_key)
        return cls(tuple(kept))

    def is_point(self) -> bool:
        return self.factors == (POINT,)

    def merge(self, other: "Component") -> "Component":
        return Component.of(self.factors + other.factors)

    def __str__(self) -> str:
        return " * ".join(str(a) for a in self.factors)


@dataclass(frozen=True)
class ComponentList:
    """An ordered list of (component, multiplicity) pairs.

    Multiplicity > 1 records completely orthogonal repetitions of the same
    component; distinct entries may carry equal components when the blocks
    they came from are only semi-orthogonal.
    """

    entries: tuple[tuple[Component, int], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        for comp, mult in self.entries:
            if mult < 1:
                raise InternalInvariantError(f"multiplicity must be >= 1: {comp} x {mult}")

    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.entries)

    def is_purely_exceptional(self) -> bool:
        return all(comp.is_point() for comp, _ in self.entries)

    def components(self) -> list[Component]:
        return [comp for comp, _ in self.entries]

    def as_multiset(self) -> dict[Component, int]:
        counts: dict[Component, int] = {}
        for comp, mult in self.entries:
            counts[comp] = counts.get(comp, 0) + mult
        return counts

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "; ".join(f"{comp} x{mult}" for comp, mult in self.entries)


def equal_components(x: ComponentList, y: ComponentList, mode: str = "ordered") -> bool:
    """Compare two component lists exactly (``ordered``) or as multisets."""
    if mode == "ordered":
        return x.entries == y.entries
    if mode == "multiset":
        return x.as_multiset() == y.as_multiset()
    raise ValueError(f"unknown comparison mode: {mode!r}")


# ---------------------------------------------------------------------------
# Geometric presets


def ruled_betti(genus: int) -> BettiVector:
    # P^1-bundle over a genus-g curve: b1 = 2g, b2 = 2 (fiber + section)
    return BettiVector(1, 2 * genus, 2, 2 * genus, 1)


def fake_plane_betti(l: int) -> BettiVector:
    return BettiVector(1, 0, l, 0, 1)


P2_BETTI = BettiVector(1, 0, 1, 0, 1)


def surface_literal(b: BettiVector) -> Surface:
    name = "surface({},{},{},{},{})".format(*b.as_tuple())
    return Surface(name, b)


def betti_of(e: CatExpr) -> Optional[BettiVector]:
    """Betti vector of a surface-like expression, if it is determined.

    Recognized shapes (post-canonicalization): a surface atom; the blow-up
    shape ``sod(S, pt)`` with S a surface atom (b2 goes up by one); the
    ruled shape ``sod(curve(g), curve(g))``; ``sod(pt, pt, pt)`` (the plane);
    and ``sod(pt, ..., pt, phantom)`` with at least three points (a fake
    plane).  Anything else returns None.
    """
    if isinstance(e, Surface):
        return e.betti
    if isinstance(e, Sod) and len(e.parts) == 2:
        head, tail = e.parts
        if isinstance(head, (Surface, Opaque)) and isinstance(tail, Point):
            inner = betti_of(head)
            if inner is None:
                return None
            return BettiVector(inner.b0, inner.b1, inner.b2 + 1, inner.b3, inner.b4)
        if isinstance(head, Curve) and isinstance(tail, Curve) and head.genus == tail.genus:
            return ruled_betti(head.genus)
    if isinstance(e, Sod) and all(isinstance(p, Point) for p in e.parts):
        if len(e.parts) == 3:
            return P2_BETTI
    if isinstance(e, Sod) and len(e.parts) >= 4:
        *pts, last = e.parts
        if all(isinstance(p, Point) for p in pts) and isinstance(last, Phantom):
            return fake_plane_betti(len(pts) - 2)
    return None


def is_surface_like(e: CatExpr) -> bool:
    """Shapes accepted as the surface argument of a Hilbert-scheme power."""
    if isinstance(e, Surface):
        return True
    if isinstance(e, Sod) and len(e.parts) == 2:
        head, tail = e.parts
        if isinstance(head, (Surface, Opaque)) and isinstance(tail, Point):
            return True  # blow-up shape, base possibly opaque
    return betti_of(e) is not None


def as_surface_atom(e: CatExpr) -> Union[Surface, Opaque]:
    """Collapse a surface-like expression to an atom for use inside a blow-up.

    Surface and opaque atoms pass through unchanged; a recognized
    surface-like SOD becomes a surface atom named by its Betti literal and
    carrying the SOD it was built from as non-identity metadata.
    """
    if isinstance(e, (Surface, Opaque)):
        return e
    b = betti_of(e)
    if b is None:
        raise ValueError(f"not a surface-like expression: {e}")
    lit = surface_literal(b)
    return Surface(lit.name, b, declared_sod=e)


def blowup(e: CatExpr) -> Sod:
    """The blow-up at a point: ``sod(S, pt)`` over the surface atom of ``e``."""
    return Sod((as_surface_atom(canonicalize(e)), POINT))


def make_preset(name: str, *args) -> CatExpr:
    """Build a named geometric preset expression.

    ``P1`` -> sod(pt, pt); ``P2`` -> sod(pt, pt, pt);
    ``fakeP2(l)`` -> sod(pt x (l+2), phantom) for l >= 1;
    ``ruled(g)`` -> sod(curve(g), curve(g));
    ``surface(b0..b4)`` -> a surface atom (must be Poincare-dual);
    ``blowup(e)`` -> sod(surface-atom-of-e, pt);
    ``hilb(n, e)`` -> sym(n, e) for surface-like e.
    """
    if name == "P1":
        _expect_args(name, args, 0)
        return Sod((POINT, POINT))
    if name == "P2":
        _expect_args(name, args, 0)
        return Sod((POINT, POINT, POINT))
    if name == "fakeP2":
        _expect_args(name, args, 1)
        l = _nat(name, args[0])
        if l < 1:
            raise ValueError(f"fakeP2 needs l >= 1, got {l}")
        return Sod(tuple([POINT] * (l + 2)) + (PHANTOM,))
    if name == "ruled":
        _expect_args(name, args, 1)
        g = _nat(name, args[0])
        return Sod((Curve(g), Curve(g)))
    if name == "surface":
        _expect_args(name, args, 5)
        b = BettiVector(*(_nat(name, a) for a in args))
        return surface_literal(b)
    if name == "blowup":
        _expect_args(name, args, 1)
        return blowup(args[0])
    if name == "hilb":
        _expect_args(name, args, 2)
        n = _nat(name, args[0])
        inner = canonicalize(args[1])
        if not is_surface_like(inner):
            raise ValueError(f"hilb needs a surface-like argument, got {inner}")
        return Sym(n, inner)
    raise ValueError(f"unknown preset: {name!r}")


def _expect_args(name: str, args: tuple, count: int) -> None:
    if len(args) != count:
        raise ValueError(f"preset {name!r} takes {count} argument(s), got {len(args)}")


def _nat(name: str, value) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"preset {name!r} needs a non-negative integer, got {value!r}")
    return value
