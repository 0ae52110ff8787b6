"""The algebra description text format.

::

    # comment
    field 5              (or: field Q)
    vertices u v
    arrow x: u -> v
    arrow y: v -> u
    rel r: x.y - 2*y.x   (terms are dot-separated arrow words,
                          coefficients integers or fractions)

Declarations appear in the order field, vertices, arrows, rels.  A
relation mixing several vertex paths is split into one path-homogeneous
generator per path at parse time.
"""

from __future__ import annotations

import re

from .bimodule import AlgebraSpec, BaseSet, Bimodule, GradedIdeal, TensorElem
from .fields import field_from_label

__all__ = ["AlgebraParseError", "parse_algebra", "format_algebra"]


class AlgebraParseError(ValueError):
    """Malformed algebra text; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_ARROW_RE = re.compile(r"^(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_TERM_RE = re.compile(r"^(?:(-?\d+(?:/\d+)?)\*)?([^\s*]+)$")


def parse_algebra(text: str, name: str = "algebra") -> AlgebraSpec:
    """Parse algebra text into an `AlgebraSpec`.

    Raises `AlgebraParseError` with a line number on unknown labels,
    relations of mixed degree, bad coefficients, or declarations out of
    order.
    """
    field = None
    base = None
    components: dict = {}
    arrow_edge: dict = {}
    generators = []
    stage = 0  # 0 field, 1 vertices, 2 arrows, 3 rels

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        keyword = parts[0]
        rest = parts[1].strip() if len(parts) > 1 else ""
        if keyword == "field":
            if stage != 0:
                raise AlgebraParseError(lineno, "field must be declared first, once")
            try:
                field = field_from_label(rest)
            except (ValueError, TypeError) as exc:
                raise AlgebraParseError(lineno, f"bad field {rest!r}: {exc}") from None
            stage = 1
        elif keyword == "vertices":
            if stage != 1:
                raise AlgebraParseError(lineno, "vertices must follow the field line")
            try:
                base = BaseSet(rest.split())
            except ValueError as exc:
                raise AlgebraParseError(lineno, str(exc)) from None
            stage = 2
        elif keyword == "arrow":
            if stage not in (2,):
                raise AlgebraParseError(lineno, "arrows must follow vertices and precede rels")
            m = _ARROW_RE.match(rest)
            if not m:
                raise AlgebraParseError(lineno, f"bad arrow declaration {rest!r}")
            label, src, dst = m.groups()
            if src not in base or dst not in base:
                raise AlgebraParseError(lineno, f"unknown vertex in arrow {label!r}")
            if label in arrow_edge:
                raise AlgebraParseError(lineno, f"duplicate arrow label {label!r}")
            arrow_edge[label] = (src, dst)
            components.setdefault((src, dst), []).append(label)
        elif keyword == "rel":
            if stage == 2:
                stage = 3
            if stage != 3:
                raise AlgebraParseError(lineno, "rels must come last")
            rel_name, _, body = rest.partition(":")
            rel_name = rel_name.strip()
            body = body.strip()
            if not rel_name or not body:
                raise AlgebraParseError(lineno, "expected `rel <name>: <terms>`")
            generators.extend(
                _parse_relation(lineno, rel_name, body, field, arrow_edge)
            )
        else:
            raise AlgebraParseError(lineno, f"unknown declaration {keyword!r}")

    if field is None:
        raise AlgebraParseError(0, "missing field declaration")
    if base is None:
        raise AlgebraParseError(0, "missing vertices declaration")
    bimodule = Bimodule(base, {k: tuple(v) for k, v in components.items()})
    return AlgebraSpec(field, bimodule, GradedIdeal(generators), name=name)


def _parse_relation(lineno, rel_name, body, field, arrow_edge):
    """Split one relation into path-homogeneous generators."""
    tokens = re.split(r"\s+([+-])\s+", body)
    signs = ["+"]
    terms = [tokens[0]]
    for k in range(1, len(tokens), 2):
        signs.append(tokens[k])
        terms.append(tokens[k + 1])

    degree = None
    by_path: dict = {}
    path_order = []
    for sign, term in zip(signs, terms):
        term = term.strip()
        negate = sign == "-"
        if term.startswith("-"):
            negate = not negate
            term = term[1:]
        m = _TERM_RE.match(term)
        if not m:
            raise AlgebraParseError(lineno, f"bad term {term!r}")
        coeff_text, word_text = m.groups()
        try:
            coeff = field.parse(coeff_text) if coeff_text else field.one
        except (ValueError, ZeroDivisionError) as exc:
            raise AlgebraParseError(lineno, f"bad coefficient {coeff_text!r}: {exc}") from None
        if negate:
            coeff = field.neg(coeff)
        letters = tuple(word_text.split("."))
        for letter in letters:
            if letter not in arrow_edge:
                raise AlgebraParseError(lineno, f"unknown arrow label {letter!r}")
        if degree is None:
            degree = len(letters)
        elif len(letters) != degree:
            raise AlgebraParseError(
                lineno, f"relation {rel_name!r} mixes degrees {degree} and {len(letters)}"
            )
        path = [arrow_edge[letters[0]][0]]
        for letter in letters:
            src, dst = arrow_edge[letter]
            if src != path[-1]:
                raise AlgebraParseError(
                    lineno, f"word {word_text!r} does not compose at {letter!r}"
                )
            path.append(dst)
        path = tuple(path)
        if path not in by_path:
            by_path[path] = {}
            path_order.append(path)
        slot = by_path[path]
        slot[letters] = field.reduce(slot.get(letters, field.zero) + coeff)

    out = []
    multiple = len(path_order) > 1
    for k, path in enumerate(path_order):
        coeffs = {w: c for w, c in by_path[path].items() if c != 0}
        if not coeffs:
            continue
        gen_name = f"{rel_name}.{k}" if multiple else rel_name
        out.append((gen_name, TensorElem(path, coeffs)))
    return out


def format_algebra(A: AlgebraSpec) -> str:
    """Canonical text form; parses back to an equal `AlgebraSpec`."""
    lines = [f"field {A.field.label()}"]
    lines.append("vertices " + " ".join(A.bimodule.base.vertices))
    for label in A.bimodule.arrow_order:
        src, dst, _ = A.bimodule.arrow_info(label)
        lines.append(f"arrow {label}: {src} -> {dst}")
    for name, g in A.ideal.generators:
        pieces = []
        for word in sorted(g.coeffs):
            c = g.coeffs[word]
            sign = "+"
            if str(c).startswith("-"):
                sign = "-"
                c = A.field.neg(c)
            text = ".".join(word)
            if c != A.field.one:
                text = f"{c}*{text}"
            if not pieces:
                pieces.append(text if sign == "+" else f"-{text}")
            else:
                pieces.append(f"{sign} {text}")
        lines.append(f"rel {name}: " + " ".join(pieces))
    return "\n".join(lines) + "\n"
