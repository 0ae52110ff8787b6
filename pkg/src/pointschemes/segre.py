"""Product functionals on tensor components and their algebra.

The map sending a tuple of edge functionals to the functional
w |-> prod_i phi_i(w_i) on the degree-n path component is injective
with decidable image (the rank-one product functionals), and membership
of a tuple in the point scheme is the vanishing of this functional on
the degree-n ideal component.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bimodule import AlgebraSpec, Bimodule, TensorElem, ideal_component, tensor_component_basis
from .linalg import nullspace, rref
from .points import Functional, PointTuple, is_point

__all__ = [
    "TensorFunctional",
    "segre",
    "segre_preimage",
    "pullback_membership",
    "check_functoriality",
    "check_associativity",
    "kernel_decomposition_check",
    "rank_one_minors_vanish",
]


@dataclass(frozen=True)
class TensorFunctional:
    """Nonzero functional on one path component of E^{tensor n}.

    Coordinates run over the canonical word basis and are normalized so
    the first nonzero coordinate is 1.
    """

    path: tuple[str, ...]
    coords: tuple

    @property
    def degree(self) -> int:
        return len(self.path) - 1

    @classmethod
    def make(cls, field, path, coords) -> "TensorFunctional":
        coords = tuple(field.reduce(c) for c in coords)
        pivot = None
        for c in coords:
            if c != 0:
                pivot = c
                break
        if pivot is None:
            raise ValueError("a tensor functional must be nonzero")
        if pivot != field.one:
            inv = field.inv(pivot)
            coords = tuple(field.mul(inv, c) for c in coords)
        return cls(tuple(path), coords)

    def to_line(self) -> str:
        coord_text = ":".join(str(c) for c in self.coords)
        return f"{','.join(self.path)}\t{self.degree}\t{coord_text}"


def segre(E: Bimodule, field, t: PointTuple) -> TensorFunctional:
    """Product functional of a tuple: coords[w] = prod_i phi_i(w_i).

    The degree-1 case returns the functional's own coordinates; the
    result is always a rank-one tensor functional.
    """
    if t.length < 1:
        raise ValueError("the product functional needs length >= 1")
    coord_lists = [phi.coords for phi in t.functionals]
    coords = tuple(
        field.reduce(_product(combo)) for combo in itertools.product(*coord_lists)
    )
    return TensorFunctional.make(field, t.path, coords)


def _product(values):
    out = 1
    for v in values:
        if v == 0:
            return 0
        out = out * v
    return out


def segre_preimage(E: Bimodule, field, b: TensorFunctional):
    """Factor a tensor functional into a tuple, or None if not rank one.

    Fixes the first word with nonzero coordinate and reads each edge
    functional off the coordinates of its one-letter perturbations, then
    verifies the factorization by recomposing.
    """
    words = tensor_component_basis(E, b.path)
    if len(words) != len(b.coords):
        raise ValueError("coordinate vector does not match the word basis")
    word_index = {w: i for i, w in enumerate(words)}
    pivot = None
    for i, c in enumerate(b.coords):
        if c != 0:
            pivot = i
            break
    if pivot is None:
        return None
    w_star = words[pivot]
    n = b.degree
    phis = []
    for i in range(n):
        edge = (b.path[i], b.path[i + 1])
        ray = []
        for letter in E.labels(*edge):
            word = w_star[:i] + (letter,) + w_star[i + 1 :]
            ray.append(b.coords[word_index[word]])
        phis.append(Functional.make(field, edge, ray))
    t = PointTuple.make(b.path, phis)
    if segre(E, field, t).coords != b.coords:
        return None
    return t


def pullback_membership(A: AlgebraSpec, t: PointTuple) -> bool:
    """Point-scheme membership via the product functional.

    True iff the product functional of the tuple pairs to zero with
    every basis vector of the degree-n ideal component; agrees with
    ``is_point`` in both modes.
    """
    n = t.length
    if n < 1:
        raise ValueError("pullback membership needs length >= 1")
    field = A.field
    big = segre(A.bimodule, field, t)
    for row in ideal_component(A, n, t.path):
        acc = 0
        for c, v in zip(big.coords, row):
            if c != 0 and v != 0:
                acc = acc + c * v
        if field.reduce(acc) != 0:
            return False
    return True


def _component_spans(E: Bimodule, field, sub):
    """Row-reduced spans of degree-1 elements, grouped by component."""
    spans = {}
    for elem in sub:
        if elem.degree != 1:
            raise ValueError("subbimodule generators must have degree 1")
        elem.validate(E, field)
        edge = (elem.path[0], elem.path[1])
        labels = E.labels(*edge)
        row = [0] * len(labels)
        for (letter,), c in elem.coeffs.items():
            row[E.arrow_info(letter)[2]] = c
        spans.setdefault(edge, []).append(row)
    return {edge: rref(field, rows) for edge, rows in spans.items()}


def check_functoriality(A: AlgebraSpec, sub, t: PointTuple) -> bool:
    """Quotienting the bimodule commutes with the product functional.

    ``sub`` lists degree-1 elements spanning a proper subspace of each
    involved component; the tuple's functionals must vanish on it so
    they descend to the quotient.  Compares the product functional of
    the descended tuple with the descent of the original one.
    """
    E = A.bimodule
    field = A.field
    if t.length < 1:
        raise ValueError("need a tuple of length >= 1")
    spans = _component_spans(E, field, sub)
    for edge, basis in spans.items():
        if len(basis) >= E.dim(*edge):
            raise ValueError(f"subspace fills the whole component {edge}")
    # functionals must kill the subspace on their own edges
    for i, phi in enumerate(t.functionals):
        for row in spans.get(phi.component, []):
            acc = 0
            for c, v in zip(phi.coords, row):
                acc = acc + c * v
            if field.reduce(acc) != 0:
                raise ValueError(f"functional {i} does not vanish on the subspace")

    kept: dict = {}
    quot_components = {}
    for edge, labels in E.components.items():
        basis = spans.get(edge)
        if not basis:
            kept[edge] = list(range(len(labels)))
            quot_components[edge] = labels
            continue
        pivots = set()
        for row in basis:
            for j, c in enumerate(row):
                if c != 0:
                    pivots.add(j)
                    break
        keep = [j for j in range(len(labels)) if j not in pivots]
        kept[edge] = keep
        quot_components[edge] = tuple(labels[j] for j in keep)
    E_quot = Bimodule(E.base, quot_components)

    descended = []
    for phi in t.functionals:
        keep = kept[phi.component]
        descended.append(
            Functional.make(field, phi.component, [phi.coords[j] for j in keep])
        )
    lhs = segre(E_quot, field, PointTuple.make(t.path, descended))

    big = segre(E, field, t)
    words = tensor_component_basis(E, t.path)
    kept_labels = {
        edge: set(quot_components.get(edge, ())) for edge in E.components
    }
    restricted = []
    for word, c in zip(words, big.coords):
        if all(
            letter in kept_labels[(t.path[i], t.path[i + 1])]
            for i, letter in enumerate(word)
        ):
            restricted.append(c)
    rhs = TensorFunctional.make(field, t.path, restricted)
    return lhs.coords == rhs.coords


def check_associativity(E: Bimodule, field, t: PointTuple, split: int) -> bool:
    """Two-step product through a split agrees with the one-step product.

    Splits the tuple after ``split`` functionals, forms the product
    functional of each part, pairs them into the full component, and
    compares with the direct product functional.  Under the
    lexicographic word bases the two index sets coincide literally.
    """
    n = t.length
    if not 1 <= split < n:
        raise ValueError(f"split must satisfy 1 <= split < {n}")
    left = segre(E, field, PointTuple(t.path[: split + 1], t.functionals[:split]))
    right = segre(E, field, PointTuple(t.path[split:], t.functionals[split:]))
    paired = [
        field.reduce(a * b) for a in left.coords for b in right.coords
    ]
    two_step = TensorFunctional.make(field, t.path, paired)
    return two_step.coords == segre(E, field, t).coords


def kernel_decomposition_check(A: AlgebraSpec, t: PointTuple) -> bool:
    """Kernel of the product functional as a sum of one-step kernels.

    For a point tuple, compares the kernel of the full-window product
    functional with the span of all vectors (word) x (ker phi_l) x (word)
    over positions l, by row-reduced basis equality.
    """
    if not is_point(A, t, "window"):
        raise ValueError("kernel decomposition is only defined for points")
    n = t.length
    if n < 1:
        raise ValueError("need length >= 1")
    E = A.bimodule
    field = A.field
    big = segre(E, field, t)
    total = len(big.coords)
    lhs = nullspace(field, [big.coords], total)

    dims = [E.dim(t.path[i], t.path[i + 1]) for i in range(n)]
    rows = []
    for l in range(n):
        phi = t.functionals[l]
        ker = nullspace(field, [phi.coords], dims[l])
        pre = 1
        for d in dims[:l]:
            pre *= d
        post = 1
        for d in dims[l + 1 :]:
            post *= d
        for a in range(pre):
            for k in ker:
                for b in range(post):
                    row = [0] * total
                    for j, c in enumerate(k):
                        if c != 0:
                            row[(a * dims[l] + j) * post + b] = c
                    rows.append(row)
    rhs = rref(field, rows)
    return lhs == rhs


def rank_one_minors_vanish(E: Bimodule, field, b: TensorFunctional) -> bool:
    """All coordinate 2x2 minors along each tensor position vanish."""
    dims = [E.dim(b.path[i], b.path[i + 1]) for i in range(b.degree)]
    total = len(b.coords)
    for l, d in enumerate(dims):
        post = 1
        for dd in dims[l + 1 :]:
            post *= dd
        pre = total // (d * post)
        # contexts are (prefix word, suffix word) pairs; rows of the slice
        slices = []
        for a in range(pre):
            for bb in range(post):
                slices.append(tuple(b.coords[(a * d + j) * post + bb] for j in range(d)))
        for r1, r2 in itertools.combinations(slices, 2):
            for j, k in itertools.combinations(range(d), 2):
                if field.reduce(r1[j] * r2[k] - r1[k] * r2[j]) != 0:
                    return False
    return True
