"""Brute-force truncated module structures, the ground-truth oracle.

A candidate tuple is accepted exactly when the explicit module it
defines (one-dimensional graded pieces, multiplication by each
functional) annihilates every relation on every window.  The check
works entirely on materialized multiplication scalars and never touches
the ideal-component or product-functional machinery, so agreement with
those routes is an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bimodule import AlgebraSpec, tensor_component_basis
from .points import PointTuple, _validate_tuple

__all__ = ["ModuleRealization", "RealizeFailure", "realize", "verify_extension", "isomorphic"]


@dataclass(frozen=True)
class RealizeFailure:
    """First annihilation failure: the generator name and window start."""

    generator: str
    window: int

    def __bool__(self) -> bool:
        return False


class ModuleRealization:
    """Explicit truncated module on a vertex path.

    ``mult[(i, j)]`` maps each basis word of the path segment starting
    at position i with length j to the scalar of the induced map from
    the degree-i piece to the degree-(i+j) piece; ``mult[(i, 0)]`` holds
    the unit scalar on the empty word.
    """

    __slots__ = ("algebra", "path", "n", "functionals", "mult")

    def __init__(self, algebra, path, functionals, mult):
        self.algebra = algebra
        self.path = tuple(path)
        self.n = len(self.path) - 1
        self.functionals = tuple(functionals)
        self.mult = mult

    def dump(self) -> str:
        """Plain-text listing of all multiplication scalars."""
        lines = [f"# realization path={','.join(self.path)} n={self.n}"]
        for (i, j) in sorted(self.mult):
            table = self.mult[(i, j)]
            for word in sorted(table):
                text = ".".join(word) if word else "1"
                lines.append(f"mu[{i},{j}]\t{text}\t{table[word]}")
        return "\n".join(lines) + "\n"


def realize(A: AlgebraSpec, t: PointTuple):
    """Build the truncated module of a tuple, or report what fails.

    Multiplication by one degree is the functional itself; higher
    degrees are extended word by word.  The result is a module over the
    quotient algebra iff every generator, on every window whose path
    segment matches, acts as zero; the first violation is returned as a
    `RealizeFailure`.
    """
    _validate_tuple(A, t)
    E = A.bimodule
    field = A.field
    n = t.length
    arrows = E.arrows

    mult = {}
    for i in range(n + 1):
        mult[(i, 0)] = {(): field.one}
    for i, phi in enumerate(t.functionals):
        labels = E.labels(*phi.component)
        mult[(i, 1)] = {(lab,): phi.coords[arrows[lab][2]] for lab in labels}
    for j in range(2, n + 1):
        for i in range(0, n - j + 1):
            head = mult[(i, 1)]
            tail = mult[(i + 1, j - 1)]
            table = {}
            for word in tensor_component_basis(E, t.path[i : i + j + 1]):
                table[word] = field.reduce(head[word[:1]] * tail[word[1:]])
            mult[(i, j)] = table

    for name, g in A.ideal.generators:
        d = g.degree
        if d > n:
            continue
        for i in range(n - d + 1):
            if t.path[i : i + d + 1] != g.path:
                continue
            table = mult[(i, d)]
            acc = 0
            for word, c in g.coeffs.items():
                acc = acc + c * table[word]
            if field.reduce(acc) != 0:
                return RealizeFailure(name, i)
    return ModuleRealization(A, t.path, t.functionals, mult)


def verify_extension(r: ModuleRealization):
    """Re-derive every multiplication scalar both ways and compare.

    Checks left-to-right against right-to-left bracketing on every word
    and the unit scalars; returns ``(ok, witness)`` where the witness
    names the first mismatching entry.
    """
    field = r.algebra.field
    E = r.algebra.bimodule
    for i in range(r.n + 1):
        unit = r.mult.get((i, 0), {}).get((), None)
        if unit != field.one:
            return False, f"unit scalar at degree {i} is {unit!r}"
    for j in range(2, r.n + 1):
        for i in range(0, r.n - j + 1):
            table = r.mult[(i, j)]
            for word in tensor_component_basis(E, r.path[i : i + j + 1]):
                first = field.reduce(r.mult[(i, 1)][word[:1]] * r.mult[(i + 1, j - 1)][word[1:]])
                last = field.reduce(r.mult[(i, j - 1)][word[:-1]] * r.mult[(i + j - 1, 1)][word[-1:]])
                stored = table.get(word)
                if not (first == last == stored):
                    return False, f"mu[{i},{j}] at word {'.'.join(word)}: {first} vs {last} vs {stored}"
    return True, None


def isomorphic(r1: ModuleRealization, r2: ModuleRealization) -> bool:
    """Isomorphism: same path, projectively equal functionals."""
    if r1.algebra != r2.algebra or r1.n != r2.n:
        return False
    return r1.path == r2.path and r1.functionals == r2.functionals
