"""Line-oriented text formats for lattices, function tables, expressions and measures.

Lattice file::

    lattice diamond
    elements 0 a b 1
    bottom 0
    top 1
    cover 0 a
    ...

or complete ``meet a b c`` / ``join a b c`` triples instead of covers, or one
of the shorthands ``chain <m>``, ``boolean <k>``, ``product <file1> <file2>``.
``#`` starts a comment.

Function file::

    function f arity 2 over chain3
    0 0 -> 0
    ...

Expression file: ``expression f arity 2 over chain3`` followed by one
s-expression line. Measure file: ``measure mu arity 2 over chain3`` followed
by ``I -> value`` lines with I given as ``empty``, ``full`` or ``1,2``.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import BoundsError, ElementError, ParseError
from .expr import parse_expr, tabulate, to_sexpr
from .lattice import (
    build_boolean,
    build_chain,
    build_diamond,
    build_from_covers,
    build_from_tables,
    build_product,
    relabel,
)
from .table import DEFAULT_TABLE_BUDGET, CoefficientMap, FnTable, encode, format_subset, grid, mask_of


def _lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


# -- lattices -------------------------------------------------------------------

def parse_lattice(text, base_dir=None):
    name = "L"
    elements = None
    bottom = top = None
    covers, meets, joins = [], [], []
    shorthand = None
    for number, words in _lines(text):
        key, args = words[0], words[1:]

        def need(count):
            if len(args) != count:
                raise ParseError(f"'{key}' takes {count} argument(s), got {len(args)}", line=number)

        if key == "lattice":
            need(1)
            name = args[0]
        elif key == "elements":
            if not args:
                raise ParseError("'elements' needs at least one name", line=number)
            elements = args
        elif key == "bottom":
            need(1)
            bottom = args[0]
        elif key == "top":
            need(1)
            top = args[0]
        elif key == "cover":
            need(2)
            covers.append((args[0], args[1]))
        elif key == "meet":
            need(3)
            meets.append(tuple(args))
        elif key == "join":
            need(3)
            joins.append(tuple(args))
        elif key in ("chain", "boolean"):
            need(1)
            if not args[0].isdigit():
                raise ParseError(f"'{key}' needs a nonnegative integer", line=number)
            shorthand = (key, int(args[0]), number)
        elif key == "product":
            need(2)
            shorthand = (key, args, number)
        else:
            raise ParseError(f"unknown directive {key!r}", line=number)

    if shorthand is not None:
        kind, arg, _ = shorthand
        if kind == "chain":
            L = build_chain(arg, names=elements, name=name)
        elif kind == "boolean":
            L = build_boolean(arg, name=name)
        else:
            base = Path(base_dir or ".")
            A, B = (load_lattice(base / p) for p in arg)
            L = build_product(A, B, name=name)
        if elements is not None and kind != "chain":
            L = relabel(L, elements, name=name)
        return L

    if elements is None:
        raise ParseError("missing 'elements' directive")
    if bottom is None or top is None:
        raise BoundsError("lattice file must declare both 'bottom' and 'top'")
    if meets or joins:
        if covers:
            raise ParseError("give either cover lines or meet/join tables, not both")
        L = build_from_tables(elements, meets, joins, name=name)
        if L.names[L.bottom] != bottom or L.names[L.top] != top:
            raise BoundsError(f"declared bounds {bottom}/{top} disagree with the tables")
        return L
    return build_from_covers(elements, covers, bottom, top, name=name)


def load_lattice(path):
    path = Path(path)
    return parse_lattice(path.read_text(), base_dir=path.parent)


_SHORTHAND = re.compile(r"(chain|boolean)[:]?(\d+)$")


def resolve_lattice(source, base_dir=None):
    """A lattice from a file path or an inline shorthand.

    Shorthands: ``chainM``, ``booleanK``, ``diamond``, and products joined
    with ``x`` such as ``chain3xchain2``.
    """
    path = Path(source)
    roots = [path]
    if base_dir is not None and not path.is_absolute():
        roots.insert(0, Path(base_dir) / source)
    for root in roots:
        for candidate in (root, Path(str(root) + ".lat")):
            if candidate.is_file():
                return load_lattice(candidate)
    parts = str(source).split("x") if "x" in str(source) else [str(source)]
    factors = []
    for part in parts:
        if part == "diamond":
            factors.append(build_diamond())
            continue
        m = _SHORTHAND.match(part)
        if m is None:
            raise ParseError(f"cannot resolve lattice {source!r}: not a file or shorthand")
        kind, k = m.group(1), int(m.group(2))
        factors.append(build_chain(k) if kind == "chain" else build_boolean(k))
    L = factors[0]
    for other in factors[1:]:
        L = build_product(L, other)
    if len(factors) > 1:
        L = relabel(L, L.names, name=str(source))
    return L


def format_lattice(L):
    """Canonical text: elements in topological order, then cover lines."""
    order = L.topological_order
    out = [f"lattice {L.name}",
           "elements " + " ".join(L.names[e] for e in order),
           f"bottom {L.names[L.bottom]}",
           f"top {L.names[L.top]}"]
    rank = {e: i for i, e in enumerate(order)}
    for u, v in sorted(L.covers, key=lambda p: (rank[p[0]], rank[p[1]])):
        out.append(f"cover {L.names[u]} {L.names[v]}")
    return "\n".join(out) + "\n"


# -- functions and expressions ------------------------------------------------------

_HEADER = re.compile(r"(function|expression|measure)\s+(\S+)\s+arity\s+(\d+)\s+over\s+(\S+)$")


def read_header(text):
    for number, words in _lines(text):
        m = _HEADER.match(" ".join(words))
        if m is None:
            raise ParseError("expected header '<function|expression|measure> <name> arity <n> "
                             "over <lattice>'", line=number)
        return m.group(1), m.group(2), int(m.group(3)), m.group(4)
    raise ParseError("empty file")


def _check_lattice(L, lattice_name, number=1):
    if lattice_name != L.name:
        raise ParseError(f"file is over lattice {lattice_name!r} but lattice {L.name!r} was given",
                         line=number)


def parse_function(text, L, budget=DEFAULT_TABLE_BUDGET):
    """Function table or expression file to an FnTable over L."""
    kind, name, arity, lattice_name = read_header(text)
    _check_lattice(L, lattice_name)
    body = list(_lines(text))[1:]
    if kind == "expression":
        if len(body) != 1:
            raise ParseError("expression file needs exactly one expression line")
        number, words = body[0]
        try:
            e = parse_expr(" ".join(words), arity, L)
        except ParseError as exc:
            raise ParseError(str(exc), line=number) from None
        grid(L.size, arity, budget)
        return tabulate(L, e, arity, name=name)
    if kind != "function":
        raise ParseError(f"expected a function or expression file, got {kind!r}", line=1)
    g = grid(L.size, arity, budget)
    values = [None] * g.count
    for number, words in body:
        if "->" not in words or words.index("->") != arity or len(words) != arity + 2:
            raise ParseError(f"expected {arity} argument(s), '->', and a value", line=number)
        try:
            x = [L.element(w) for w in words[:arity]]
            y = L.element(words[-1])
        except ElementError as exc:
            raise ParseError(str(exc), line=number) from None
        i = encode(L.size, x)
        if values[i] is not None:
            raise ParseError(f"duplicate entry for ({' '.join(words[:arity])})", line=number)
        values[i] = y
    missing = [i for i, v in enumerate(values) if v is None]
    if missing:
        x = " ".join(L.names[v] for v in g.coords[missing[0]])
        raise ParseError(f"table incomplete: {len(missing)} tuple(s) missing, first ({x})")
    return FnTable(L, arity, values, name=name, budget=budget)


def format_function(f):
    L = f.lattice
    out = [f"function {f.name} arity {f.arity} over {L.name}"]
    for x, y in f.tuples():
        out.append(" ".join(L.names[v] for v in x) + (" " if x else "") + f"-> {L.names[y]}")
    return "\n".join(out) + "\n"


def format_expression(e, L, arity, name="f"):
    return f"expression {name} arity {arity} over {L.name}\n{to_sexpr(e, L)}\n"


def parse_subset(token, arity):
    if token == "empty":
        return 0
    if token == "full":
        return (1 << arity) - 1
    try:
        indices = [int(t) for t in token.split(",")]
    except ValueError:
        raise ParseError(f"bad subset {token!r}") from None
    if any(not 1 <= i <= arity for i in indices):
        raise ParseError(f"subset {token!r} outside 1..{arity}")
    return mask_of(indices)


def format_coefficients(coeffs, L, name="alpha", kind="coefficients"):
    out = [f"{kind} {name} arity {coeffs.arity} over {L.name}"]
    for mask, v in enumerate(coeffs):
        out.append(f"{format_subset(mask, coeffs.arity)} -> {L.names[v]}")
    return "\n".join(out) + "\n"


def format_measure(mu, L, name="mu"):
    return format_coefficients(mu, L, name=name, kind="measure")


def parse_measure(text, L):
    kind, name, arity, lattice_name = read_header(text)
    if kind != "measure":
        raise ParseError(f"expected a measure file, got {kind!r}", line=1)
    _check_lattice(L, lattice_name)
    values = [None] * (1 << arity)
    for number, words in list(_lines(text))[1:]:
        if len(words) != 3 or words[1] != "->":
            raise ParseError("expected 'I -> value'", line=number)
        try:
            mask = parse_subset(words[0], arity)
            values[mask] = L.element(words[2])
        except (ParseError, ElementError) as exc:
            raise ParseError(str(exc), line=number) from None
    if any(v is None for v in values):
        raise ParseError("measure incomplete: every subset needs a value")
    return CoefficientMap(arity, values)
