"""Bimodules over a finite discrete base and their graded ideals.

A bimodule here is a family of finite-dimensional vector spaces
E_{xy}, one per ordered pair of vertices, each with a fixed ordered
basis of globally unique arrow labels.  Its tensor algebra is the path
algebra of the labelled quiver; the degree-n component splits over
vertex paths (x_0, ..., x_n), and each path component carries the
lexicographic word basis.  Graded two-sided ideals are given by
path-homogeneous generators; their per-(degree, path) component bases
are obtained by row reduction and memoized.
"""

from __future__ import annotations

import itertools
import threading

from .linalg import rref

__all__ = [
    "BaseSet",
    "Bimodule",
    "TensorElem",
    "GradedIdeal",
    "AlgebraSpec",
    "tensor_component_basis",
    "concat",
    "ideal_component",
    "quotient_dims",
]


class BaseSet:
    """Ordered set of vertex labels; the order fixes all enumeration."""

    __slots__ = ("vertices", "_index")

    def __init__(self, vertices):
        vs = tuple(vertices)
        if not vs:
            raise ValueError("base set must be nonempty")
        if len(set(vs)) != len(vs):
            raise ValueError("vertex labels must be unique")
        self.vertices = vs
        self._index = {v: i for i, v in enumerate(vs)}

    def index(self, v: str) -> int:
        return self._index[v]

    def __contains__(self, v) -> bool:
        return v in self._index

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, BaseSet) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"BaseSet({list(self.vertices)})"


class Bimodule:
    """Basis-labelled components E_{xy} over a base set.

    ``components`` maps ordered vertex pairs to ordered tuples of arrow
    labels; missing pairs are zero components.  Labels are globally
    unique so a flat label -> (src, dst, position) table can resolve any
    word letter in O(1).
    """

    __slots__ = ("base", "components", "arrows", "arrow_order")

    def __init__(self, base: BaseSet, components):
        self.base = base
        comp = {}
        arrows = {}
        order = []
        for (x, y), labels in components.items():
            if x not in base or y not in base:
                raise ValueError(f"component ({x}, {y}) not over the base set")
            labels = tuple(labels)
            if not labels:
                continue
            comp[(x, y)] = labels
            for i, lab in enumerate(labels):
                if lab in arrows:
                    raise ValueError(f"duplicate arrow label {lab!r}")
                arrows[lab] = (x, y, i)
                order.append(lab)
        self.components = comp
        self.arrows = arrows
        self.arrow_order = tuple(order)

    def dim(self, x: str, y: str) -> int:
        return len(self.components.get((x, y), ()))

    def labels(self, x: str, y: str):
        return self.components.get((x, y), ())

    def arrow_info(self, label: str):
        """(src, dst, position) of an arrow label."""
        try:
            return self.arrows[label]
        except KeyError:
            raise ValueError(f"unknown arrow label {label!r}") from None

    def check_path(self, path) -> None:
        if not path:
            raise ValueError("a path needs at least one vertex")
        for v in path:
            if v not in self.base:
                raise ValueError(f"vertex {v!r} not in the base set")

    def __eq__(self, other):
        return (
            isinstance(other, Bimodule)
            and self.base == other.base
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.base, tuple(sorted(self.components.items()))))

    def __repr__(self):
        dims = {k: len(v) for k, v in sorted(self.components.items())}
        return f"Bimodule(base={list(self.base.vertices)}, dims={dims})"


def tensor_component_basis(E: Bimodule, path):
    """Lexicographic word basis of the path component of E^{tensor n}.

    The degree-0 path (a single vertex) has the one-element basis made
    of the empty word; a path through a zero component has none.
    """
    E.check_path(path)
    if len(path) == 1:
        return [()]
    per_edge = [E.labels(path[i], path[i + 1]) for i in range(len(path) - 1)]
    if any(not labels for labels in per_edge):
        return []
    return list(itertools.product(*per_edge))


class TensorElem:
    """Path-homogeneous element of a path component of E^{tensor n}.

    ``coeffs`` maps basis words (tuples of arrow labels along the path)
    to nonzero scalars; zero coefficients are dropped at construction.
    """

    __slots__ = ("degree", "path", "coeffs")

    def __init__(self, path, coeffs):
        path = tuple(path)
        if len(path) < 2:
            raise ValueError("tensor elements have degree >= 1")
        self.path = path
        self.degree = len(path) - 1
        clean = {}
        for word, c in coeffs.items():
            word = tuple(word)
            if len(word) != self.degree:
                raise ValueError(f"word {word} has wrong length for degree {self.degree}")
            if c != 0:
                clean[word] = c
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def validate(self, E: Bimodule, field) -> None:
        """Check words lie along the path and coefficients in the field."""
        E.check_path(self.path)
        for word, c in self.coeffs.items():
            for i, lab in enumerate(word):
                src, dst, _ = E.arrow_info(lab)
                if (src, dst) != (self.path[i], self.path[i + 1]):
                    raise ValueError(
                        f"letter {lab!r} does not fit edge ({self.path[i]}, {self.path[i + 1]})"
                    )
            if not field.validate(c):
                raise ValueError(f"coefficient {c!r} is not a scalar of {field!r}")

    def coord_vector(self, words, word_index=None):
        """Coefficients as a dense tuple over the given word basis."""
        if word_index is None:
            word_index = {w: i for i, w in enumerate(words)}
        vec = [0] * len(words)
        for word, c in self.coeffs.items():
            vec[word_index[word]] = c
        return tuple(vec)

    def __eq__(self, other):
        return (
            isinstance(other, TensorElem)
            and self.path == other.path
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.path, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        terms = " + ".join(f"{c}*{'.'.join(w)}" for w, c in sorted(self.coeffs.items()))
        return f"TensorElem({terms or '0'} @ {self.path})"


def concat(field, r: TensorElem, s: TensorElem) -> TensorElem:
    """Tensor-algebra product of two path-homogeneous elements.

    The paths must compose; a mismatch is reported as an error rather
    than a silent zero, since it signals the product of non-composable
    components.
    """
    if r.path[-1] != s.path[0]:
        raise ValueError(
            f"paths do not compose: {r.path} ends at {r.path[-1]!r}, "
            f"{s.path} starts at {s.path[0]!r}"
        )
    path = r.path + s.path[1:]
    coeffs = {}
    for w1, c1 in r.coeffs.items():
        for w2, c2 in s.coeffs.items():
            word = w1 + w2
            coeffs[word] = field.reduce(coeffs.get(word, 0) + c1 * c2)
    return TensorElem(path, coeffs)


class GradedIdeal:
    """Graded two-sided ideal presented by named path-homogeneous generators."""

    __slots__ = ("generators",)

    def __init__(self, generators):
        gens = []
        for name, elem in generators:
            if not isinstance(elem, TensorElem):
                raise TypeError("generators must be TensorElem instances")
            if elem.is_zero():
                continue
            gens.append((str(name), elem))
        self.generators = tuple(gens)

    @property
    def first_degree(self):
        """Minimum generator degree, or None for the zero ideal."""
        if not self.generators:
            return None
        return min(g.degree for _, g in self.generators)

    def by_degree(self):
        out = {}
        for name, g in self.generators:
            out.setdefault(g.degree, []).append((name, g))
        return out

    def __eq__(self, other):
        return isinstance(other, GradedIdeal) and self.generators == other.generators

    def __repr__(self):
        return f"GradedIdeal({[name for name, _ in self.generators]})"


class AlgebraSpec:
    """A tensor algebra with relations: field, bimodule and graded ideal.

    Immutable after construction.  The per-(degree, path) ideal
    component bases are computed lazily and cached; the cache is guarded
    by a lock so concurrent readers are safe.
    """

    def __init__(self, field, bimodule: Bimodule, ideal: GradedIdeal, name: str = "algebra"):
        self.field = field
        self.bimodule = bimodule
        self.ideal = ideal
        self.name = name
        for gen_name, g in ideal.generators:
            g.validate(bimodule, field)
        self.first_degree = ideal.first_degree
        self._component_cache = {}
        self._component_elems = {}
        self._lock = threading.Lock()

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraSpec)
            and self.field == other.field
            and self.bimodule == other.bimodule
            and self.ideal == other.ideal
        )

    def __repr__(self):
        return f"AlgebraSpec({self.name!r}, field={self.field.label()})"


def _component_rows(A: AlgebraSpec, n: int, path):
    """Spanning rows of the degree-n ideal component on one path."""
    E = A.bimodule
    words = tensor_component_basis(E, path)
    if not words:
        return []
    word_index = {w: i for i, w in enumerate(words)}
    rows = []
    for _, g in A.ideal.generators:
        d = g.degree
        if d > n:
            continue
        for i in range(n - d + 1):
            if path[i : i + d + 1] != g.path:
                continue
            prefix_words = tensor_component_basis(E, path[: i + 1])
            suffix_words = tensor_component_basis(E, path[i + d :])
            for u in prefix_words:
                for v in suffix_words:
                    row = [0] * len(words)
                    for gw, c in g.coeffs.items():
                        row[word_index[u + gw + v]] = c
                    rows.append(row)
    return rows


def ideal_component(A: AlgebraSpec, n: int, path):
    """Row-reduced basis of the ideal's degree-n component on a path.

    Rows are coordinate tuples over ``tensor_component_basis`` in
    canonical word order.  Empty when n is below the first generator
    degree or the span vanishes on this path.
    """
    if n < 1:
        raise ValueError("ideal components exist in degrees >= 1")
    path = tuple(path)
    A.bimodule.check_path(path)
    if len(path) != n + 1:
        raise ValueError(f"path {path} has length {len(path) - 1}, expected {n}")
    key = (n, path)
    with A._lock:
        cached = A._component_cache.get(key)
        if cached is None:
            if A.first_degree is None or n < A.first_degree:
                cached = []
            else:
                cached = rref(A.field, _component_rows(A, n, path))
            A._component_cache[key] = cached
    return cached


def ideal_component_elems(A: AlgebraSpec, n: int, path):
    """The same basis as `ideal_component`, as TensorElem values."""
    path = tuple(path)
    key = (n, path)
    rows = ideal_component(A, n, path)
    with A._lock:
        elems = A._component_elems.get(key)
        if elems is None:
            words = tensor_component_basis(A.bimodule, path)
            elems = [
                TensorElem(path, {w: c for w, c in zip(words, row) if c != 0})
                for row in rows
            ]
            A._component_elems[key] = elems
    return elems


def quotient_dims(A: AlgebraSpec, n: int):
    """Per-path dimensions of the degree-n component of the quotient.

    Maps each path with a nonzero degree-n tensor component to
    ``dim E^{tensor n} - dim I_n`` on that path; degree 0 assigns 1 to
    every vertex.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    E = A.bimodule
    out = {}
    if n == 0:
        for v in E.base:
            out[(v,)] = 1
        return out
    for path in itertools.product(E.base.vertices, repeat=n + 1):
        words = tensor_component_basis(E, path)
        if not words:
            continue
        out[path] = len(words) - len(ideal_component(A, n, path))
    return out
