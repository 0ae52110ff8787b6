"""Truncated point schemes: membership, enumeration, truncation, shift.

A length-n point tuple is a vertex path (x_0, ..., x_n) together with
projective functionals phi_0, ..., phi_{n-1}, phi_i on the component
E_{x_i x_{i+1}}.  Membership in the degree-n point scheme is the
vanishing of every relation on every window of consecutive functionals
(``window`` mode), equivalently the vanishing of the whole degree-n
ideal component on the product functional (``full`` mode).
"""

from __future__ import annotations

import itertools
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from .bimodule import (
    AlgebraSpec,
    TensorElem,
    ideal_component_elems,
    tensor_component_basis,
)

__all__ = [
    "Functional",
    "PointTuple",
    "PointScheme",
    "CapExceeded",
    "multilin_eval",
    "is_point",
    "enumerate_points",
    "truncate",
    "truncation_report",
    "TruncationReport",
    "shift_map",
    "ShiftMap",
    "stabilization_scan",
    "StabilizationReport",
]


class CapExceeded(RuntimeError):
    """Raised when a projected enumeration exceeds the candidate cap."""

    def __init__(self, projected: int, cap: int):
        super().__init__(f"projected {projected} candidate tuples exceeds cap {cap}")
        self.projected = projected
        self.cap = cap


@dataclass(frozen=True)
class Functional:
    """Nonzero functional on one component, in canonical projective form.

    ``coords`` are over the component's arrow basis, scaled so the first
    nonzero coordinate is 1.
    """

    component: tuple[str, str]
    coords: tuple

    @classmethod
    def make(cls, field, component, coords) -> "Functional":
        coords = tuple(field.reduce(c) for c in coords)
        pivot = None
        for c in coords:
            if c != 0:
                pivot = c
                break
        if pivot is None:
            raise ValueError("a projective functional must be nonzero")
        if pivot != field.one:
            inv = field.inv(pivot)
            coords = tuple(field.mul(inv, c) for c in coords)
        return cls((component[0], component[1]), coords)


@dataclass(frozen=True)
class PointTuple:
    """Vertex path plus one functional per edge; length 0 is vertex-only."""

    path: tuple[str, ...]
    functionals: tuple[Functional, ...]

    @classmethod
    def make(cls, path, functionals) -> "PointTuple":
        path = tuple(path)
        functionals = tuple(functionals)
        if len(path) != len(functionals) + 1:
            raise ValueError("need exactly one functional per path edge")
        for i, phi in enumerate(functionals):
            if phi.component != (path[i], path[i + 1]):
                raise ValueError(
                    f"functional {i} lives on {phi.component}, edge is "
                    f"({path[i]}, {path[i + 1]})"
                )
        return cls(path, functionals)

    @property
    def length(self) -> int:
        return len(self.functionals)


def _point_sort_key(base, t: PointTuple):
    return (
        tuple(base.index(v) for v in t.path),
        tuple(phi.coords for phi in t.functionals),
    )


@dataclass
class PointScheme:
    """Deterministically ordered set of field points of one degree."""

    algebra: AlgebraSpec
    n: int
    points: tuple[PointTuple, ...]

    @property
    def field(self):
        return self.algebra.field

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_tsv(self) -> str:
        lines = [f"# gamma n={self.n} field={self.field.label()} algebra={self.algebra.name}"]
        for t in self.points:
            lines.append(point_row(t))
        return "\n".join(lines) + "\n"


def point_row(t: PointTuple) -> str:
    """One TSV row: comma-joined path, then colon-joined coordinates."""
    cells = [",".join(t.path)]
    for phi in t.functionals:
        cells.append(":".join(str(c) for c in phi.coords))
    return "\t".join(cells)


def _validate_tuple(A: AlgebraSpec, t: PointTuple) -> None:
    E = A.bimodule
    E.check_path(t.path)
    for i, phi in enumerate(t.functionals):
        dim = E.dim(*phi.component)
        if len(phi.coords) != dim:
            raise ValueError(
                f"functional {i} has {len(phi.coords)} coordinates, component "
                f"{phi.component} has dimension {dim}"
            )


def multilin_eval(E, field, phis, elem: TensorElem):
    """Evaluate a window of functionals on a tensor element.

    Returns sum over words of coeff * prod_i phi_i(letter_i); the
    functionals must match the element's path edgewise.
    """
    if len(phis) != elem.degree:
        raise ValueError(f"need {elem.degree} functionals, got {len(phis)}")
    for i, phi in enumerate(phis):
        if phi.component != (elem.path[i], elem.path[i + 1]):
            raise ValueError(
                f"functional {i} on {phi.component} does not match edge "
                f"({elem.path[i]}, {elem.path[i + 1]})"
            )
    arrows = E.arrows
    acc = 0
    for word, c in elem.coeffs.items():
        v = c
        for phi, letter in zip(phis, word):
            v = v * phi.coords[arrows[letter][2]]
            if v == 0:
                break
        else:
            acc = acc + v
    return field.reduce(acc)


def _window_plan(A: AlgebraSpec, n: int, path):
    """Matching (start, generator) windows for a fixed path."""
    plan = []
    for _, g in A.ideal.generators:
        d = g.degree
        if d > n:
            continue
        for i in range(n - d + 1):
            if path[i : i + d + 1] == g.path:
                plan.append((i, g))
    return plan


def _passes_windows(A: AlgebraSpec, t: PointTuple, plan) -> bool:
    E = A.bimodule
    field = A.field
    phis = t.functionals
    for i, g in plan:
        if multilin_eval(E, field, phis[i : i + g.degree], g) != 0:
            return False
    return True


def is_point(A: AlgebraSpec, t: PointTuple, mode: str = "window") -> bool:
    """Membership of a tuple in the degree-n point scheme.

    ``window`` checks every generator on every matching window of
    consecutive functionals; ``full`` checks the whole degree-n ideal
    component against the tuple.  The two agree on every input.
    """
    if mode not in ("window", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    _validate_tuple(A, t)
    n = t.length
    if n == 0:
        return True
    if mode == "window":
        return _passes_windows(A, t, _window_plan(A, n, t.path))
    E = A.bimodule
    field = A.field
    for elem in ideal_component_elems(A, n, t.path):
        if multilin_eval(E, field, t.functionals, elem) != 0:
            return False
    return True


_proj_cache: dict = {}
_proj_lock = threading.Lock()


def projective_functionals(field, component, labels):
    """All normalized functionals on a component, in lexicographic order."""
    dim = len(labels)
    key = (field, dim)
    with _proj_lock:
        coords_list = _proj_cache.get(key)
    if coords_list is None:
        elements = field.elements()
        coords_list = []
        zero, one = field.zero, field.one
        for pivot in range(dim):
            head = (zero,) * pivot + (one,)
            for tail in itertools.product(elements, repeat=dim - pivot - 1):
                coords_list.append(head + tail)
        coords_list.sort()
        with _proj_lock:
            _proj_cache[key] = coords_list
    return [Functional(component, coords) for coords in coords_list]


def _projective_count(p: int, dim: int) -> int:
    return (p**dim - 1) // (p - 1)


def _path_candidates(A: AlgebraSpec, path):
    """Per-edge functional lists, or None when some component is zero."""
    E = A.bimodule
    lists = []
    for i in range(len(path) - 1):
        labels = E.labels(path[i], path[i + 1])
        if not labels:
            return None
        lists.append(projective_functionals(A.field, (path[i], path[i + 1]), labels))
    return lists


def _enumerate_path(A: AlgebraSpec, path, lists):
    plan = _window_plan(A, len(path) - 1, path)
    found = []
    for combo in itertools.product(*lists):
        t = PointTuple(path, combo)
        if _passes_windows(A, t, plan):
            found.append(t)
    return found


def enumerate_points(A: AlgebraSpec, n: int, cap: int = 10**7, workers: int = 1) -> PointScheme:
    """All points of the degree-n point scheme over a prime field.

    Candidates are normalized functional tuples over all vertex paths of
    length n; the projected candidate count is checked against ``cap``
    before any work happens.  Output order is canonical and independent
    of ``workers``.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if not A.field.is_prime:
        raise ValueError("enumeration needs a finite prime field")
    E = A.bimodule
    base = E.base
    if n == 0:
        pts = tuple(PointTuple((v,), ()) for v in base)
        return PointScheme(A, 0, pts)

    p = A.field.p
    tasks = []
    projected = 0
    for path in itertools.product(base.vertices, repeat=n + 1):
        lists = _path_candidates(A, path)
        if lists is None:
            continue
        count = 1
        for lst in lists:
            count *= len(lst)
        projected += count
        tasks.append((path, lists))
    if projected > cap:
        raise CapExceeded(projected, cap)

    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(lambda task: _enumerate_path(A, *task), tasks)
            points = [t for chunk in chunks for t in chunk]
    else:
        points = []
        for path, lists in tasks:
            points.extend(_enumerate_path(A, path, lists))
    points.sort(key=lambda t: _point_sort_key(base, t))
    return PointScheme(A, n, tuple(points))


def truncate(t: PointTuple, m: int) -> PointTuple:
    """Keep the first m functionals and first m+1 path vertices."""
    if not 0 <= m <= t.length:
        raise ValueError(f"cannot truncate a length-{t.length} tuple to length {m}")
    return PointTuple(t.path[: m + 1], t.functionals[:m])


@dataclass
class TruncationReport:
    """Fiber structure of the truncation map between two schemes."""

    n: int
    m: int
    fibers: dict
    injective: bool
    surjective: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    @property
    def image_size(self) -> int:
        return sum(1 for lifts in self.fibers.values() if lifts)

    def fiber_sizes(self):
        return sorted(len(lifts) for lifts in self.fibers.values() if lifts)


def truncation_report(gn: PointScheme, gm: PointScheme) -> TruncationReport:
    """Map each degree-n point onto its degree-m truncation."""
    if gn.algebra is not gm.algebra and gn.algebra != gm.algebra:
        raise ValueError("schemes come from different algebras")
    if gm.n > gn.n:
        raise ValueError(f"cannot truncate degree {gn.n} onto larger degree {gm.n}")
    fibers = {q: [] for q in gm.points}
    for t in gn.points:
        q = truncate(t, gm.n)
        if q not in fibers:
            raise ValueError(f"truncation of {point_row(t)} is not a degree-{gm.n} point")
        fibers[q].append(t)
    sizes = [len(lifts) for lifts in fibers.values()]
    injective = all(s <= 1 for s in sizes)
    surjective = all(s >= 1 for s in sizes)
    return TruncationReport(gn.n, gm.n, fibers, injective, surjective)


@dataclass
class ShiftMap:
    """The shift on the truncation image: drop the leading functional.

    ``closed`` records whether the image set is carried into itself;
    ``orbits`` holds cycle lengths when the shift permutes the image,
    None otherwise.  This is a point-level proxy for the unique-lift
    hypothesis, not a scheme-theoretic statement.
    """

    d: int
    mapping: dict
    closed: bool
    orbits: list | None

    @property
    def image(self):
        return list(self.mapping)

    def order(self):
        """Smallest k >= 1 with shift^k = identity, when it permutes."""
        if not self.orbits:
            return None
        out = 1
        for length in self.orbits:
            g = _gcd(out, length)
            out = out // g * length
        return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def shift_map(gd: PointScheme, gd1: PointScheme) -> ShiftMap:
    """Extract the shift from the unique lifts of degree-d points.

    Requires every nonempty truncation fiber of the degree-(d+1) scheme
    over the degree-d scheme to have size exactly 1; a larger fiber is
    reported as an error naming the offending point.
    """
    if gd1.n != gd.n + 1:
        raise ValueError("need schemes of consecutive degrees")
    report = truncation_report(gd1, gd)
    mapping = {}
    for q in gd.points:
        lifts = report.fibers[q]
        if not lifts:
            continue
        if len(lifts) != 1:
            raise ValueError(
                f"fiber over {point_row(q)} has size {len(lifts)}; unique lifts required"
            )
        lift = lifts[0]
        mapping[q] = PointTuple(lift.path[1:], lift.functionals[1:])
    image = set(mapping)
    closed = all(v in image for v in mapping.values())
    orbits = None
    if closed and len(set(mapping.values())) == len(mapping):
        orbits = _cycle_lengths(mapping)
    return ShiftMap(gd.n, mapping, closed, orbits)


def _cycle_lengths(mapping) -> list:
    seen = set()
    lengths = []
    for start in mapping:
        if start in seen:
            continue
        length = 0
        q = start
        while q not in seen:
            seen.add(q)
            q = mapping[q]
            length += 1
        lengths.append(length)
    return sorted(lengths)


@dataclass
class StabilizationReport:
    """Counts, fiber statistics and shift data for degrees 0..n_max.

    All conclusions are at the level of field points of the schemes;
    the unique-lift condition used for the shift is the point-level
    proxy for the closed-immersion hypothesis.
    """

    counts: list
    steps: list  # TruncationReport for each consecutive pair
    stabilized_at: int | None
    shift: ShiftMap | None
    truncated_at: int | None = None  # first degree hitting the cap, if any

    def render(self) -> str:
        lines = []
        for n, c in enumerate(self.counts):
            if n == 0:
                lines.append(f"n=0\tcount={c}")
                continue
            step = self.steps[n - 1]
            sizes = step.fiber_sizes()
            stats = (
                f"fibers(min={min(sizes)},max={max(sizes)})" if sizes else "fibers(empty)"
            )
            kind = "bijective" if step.bijective else (
                "surjective" if step.surjective else (
                    "injective" if step.injective else "neither"))
            lines.append(f"n={n}\tcount={c}\t{stats}\t{kind}")
        if self.truncated_at is not None:
            lines.append(f"# cap exceeded at n={self.truncated_at}; results are partial")
        if self.stabilized_at is None:
            lines.append("stabilization: not observed in range (point-level)")
        else:
            lines.append(f"stabilization: point counts and fibers stabilize at d={self.stabilized_at} (point-level)")
            if self.shift is not None:
                if self.shift.orbits is not None:
                    orbit_text = ",".join(str(k) for k in self.shift.orbits)
                    lines.append(f"shift: permutes the image; orbit lengths {orbit_text}")
                else:
                    lines.append(f"shift: closed={str(self.shift.closed).lower()}; not a permutation of the image")
        return "\n".join(lines) + "\n"


def stabilization_scan(
    A: AlgebraSpec, n_max: int, cap: int = 10**7, workers: int = 1
) -> StabilizationReport:
    """Scan degrees 0..n_max for point counts and truncation behavior.

    Finds the first d (if any) from which every consecutive truncation
    map is a bijection on points, and extracts the shift there.  A cap
    overflow at some degree yields a partial report.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    schemes = []
    truncated_at = None
    for n in range(n_max + 1):
        try:
            schemes.append(enumerate_points(A, n, cap=cap, workers=workers))
        except CapExceeded:
            truncated_at = n
            break
    counts = [len(s) for s in schemes]
    steps = [truncation_report(schemes[k + 1], schemes[k]) for k in range(len(schemes) - 1)]
    stabilized_at = None
    for d in range(len(schemes) - 1):
        if all(step.bijective for step in steps[d:]):
            stabilized_at = d
            break
    shift = None
    if stabilized_at is not None and stabilized_at + 1 < len(schemes):
        shift = shift_map(schemes[stabilized_at], schemes[stabilized_at + 1])
    return StabilizationReport(counts, steps, stabilized_at, shift, truncated_at)
