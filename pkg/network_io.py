"""Reading and writing networks, digraphs and words; DOT export; saving outputs."""

import os
import re

import numpy as np

from boolean_network import BooleanNetwork, Digraph, State, Word, component_mask, MAX_COMPONENTS
from analyzers.network_analyzer import async_graph, interaction_graph
from fixing_core import ParseError, log_progress

# --- Configuration ---
OUTPUT_DIR = os.environ.get("FIXWORD_OUTPUT_DIR", "fixword_outputs")

_AND = ("&", "∧")
_OR = ("|", "∨")
_NOT = ("!", "¬")
_HEADER = re.compile(r"n\s+(\S+)$")
_DEFINITION = re.compile(r"f(\d+)\s*=")


def _significant_lines(text):
    """(line number, line) pairs with comments and blank lines removed."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield number, line


def _read_header(number, line):
    match = _HEADER.match(line.strip())
    if not match:
        raise ParseError("expected header 'n <int>'", number, 1)
    try:
        n = int(match.group(1))
    except ValueError:
        raise ParseError(f"'{match.group(1)}' is not an integer", number, line.index(match.group(1)) + 1)
    if n < 1:
        raise ParseError(f"n must be positive, got {n}", number, 1)
    return n


# --- networks: TABLE form ---

def _parse_table(lines, n):
    if n > MAX_COMPONENTS:
        raise ParseError(f"n={n} exceeds the supported {MAX_COMPONENTS} components", 1, 1)
    size = 1 << n
    images = []
    for number, line in lines:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError("expected '<state> <image>'", number, 1)
        source, target = fields
        for token in (source, target):
            if len(token) != n or any(ch not in "01" for ch in token):
                raise ParseError(f"'{token}' is not a {n}-bit state", number, line.index(token) + 1)
        expected = State(n, len(images)) if len(images) < size else None
        if expected is None:
            raise ParseError(f"more than {size} rows", number, 1)
        if source != expected.bits:
            raise ParseError(f"expected the row for {expected.bits}, got {source}", number, 1)
        images.append(int(target, 2))
    if len(images) < size:
        raise ParseError(f"missing state row {State(n, len(images)).bits}",
                         lines[-1][0] if lines else 1, 1)
    return BooleanNetwork(n, images)


# --- networks: FORMULA form ---

class _FormulaParser:
    """Recursive descent over: expr := term ('|' term)*, term := factor ('&' factor)*,
    factor := '!' factor | '(' expr ')' | 'x'<int> | '0' | '1'."""

    _TOKEN = re.compile(r"\s*(?:(x\d+)|([01])|(.))")

    def __init__(self, text, line, offset):
        self.line = line
        self.tokens = []
        position = 0
        while position < len(text):
            match = self._TOKEN.match(text, position)
            if match is None:
                break
            self.tokens.append((match.group(match.lastindex), offset + match.start(match.lastindex) + 1))
            position = match.end()
        self.end_column = offset + len(text.rstrip()) + 1
        self.position = 0

    def _peek(self):
        return self.tokens[self.position][0] if self.position < len(self.tokens) else None

    def _fail(self, message):
        if self.position < len(self.tokens):
            raise ParseError(message, self.line, self.tokens[self.position][1])
        raise ParseError(message, self.line, self.end_column)

    def _take(self):
        token = self._peek()
        self.position += 1
        return token

    def parse(self):
        if not self.tokens:
            self._fail("empty formula")
        tree = self._expr()
        if self._peek() is not None:
            self._fail(f"unexpected '{self._peek()}'")
        return tree

    def _expr(self):
        tree = self._term()
        while self._peek() in _OR:
            self._take()
            tree = ("or", tree, self._term())
        return tree

    def _term(self):
        tree = self._factor()
        while self._peek() in _AND:
            self._take()
            tree = ("and", tree, self._factor())
        return tree

    def _factor(self):
        token = self._peek()
        if token is None:
            self._fail("unexpected end of formula")
        if token in _NOT:
            self._take()
            return ("not", self._factor())
        if token == "(":
            self._take()
            tree = self._expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self._take()
            return tree
        if token in ("0", "1"):
            self._take()
            return ("const", int(token))
        if re.fullmatch(r"x\d+", token):
            column = self.tokens[self.position][1]
            self._take()
            return ("var", int(token[1:]), self.line, column)
        self._fail(f"unexpected '{token}'")


def _evaluate(tree, n, codes):
    kind = tree[0]
    if kind == "const":
        return np.full(len(codes), bool(tree[1]))
    if kind == "var":
        _, j, line, column = tree
        if not 1 <= j <= n:
            raise ParseError(f"variable x{j} out of range for n={n}", line, column)
        return (codes & component_mask(n, j)) != 0
    if kind == "not":
        return ~_evaluate(tree[1], n, codes)
    left, right = _evaluate(tree[1], n, codes), _evaluate(tree[2], n, codes)
    return left & right if kind == "and" else left | right


def _parse_formulas(lines):
    definitions = {}
    for number, line in lines:
        match = _DEFINITION.match(line.lstrip())
        if not match:
            raise ParseError("expected 'f<i> = <formula>'", number, 1)
        indent = len(line) - len(line.lstrip())
        i = int(match.group(1))
        if i < 1:
            raise ParseError(f"component f{i} does not exist", number, indent + 1)
        if i in definitions:
            raise ParseError(f"component f{i} defined twice", number, indent + 1)
        offset = indent + match.end()
        definitions[i] = _FormulaParser(line[offset:], number, offset).parse()
    n = max(definitions)
    if n > MAX_COMPONENTS:
        raise ParseError(f"component f{n} exceeds the supported {MAX_COMPONENTS} components", lines[-1][0], 1)
    missing = [i for i in range(1, n + 1) if i not in definitions]
    if missing:
        raise ParseError(f"undefined component f{missing[0]}", lines[-1][0], 1)
    codes = np.arange(1 << n)
    tables = [_evaluate(definitions[i], n, codes).astype(np.int64) for i in range(1, n + 1)]
    return BooleanNetwork.from_tables(tables)


def parse_network(text):
    """
    Parses a network in TABLE or FORMULA form.

    TABLE form is a header `n <int>` followed by the 2^n rows `<x> <f(x)>` in
    lexicographic order of x. FORMULA form is one line `f<i> = <expr>` per
    component, over the operators & | ! (or ∧ ∨ ¬), parentheses, x<j>, 0 and 1.
    Comments start with '#'.

    Raises:
        ParseError: with the line and column of the first problem.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError("empty network description", 1, 1)
    first_number, first = lines[0]
    if first.strip().startswith("n ") or first.strip() == "n":
        return _parse_table(lines[1:], _read_header(first_number, first))
    return _parse_formulas(lines)


def _minterm(n, code):
    literals = []
    for j in range(1, n + 1):
        literals.append(f"x{j}" if code & component_mask(n, j) else f"!x{j}")
    return "(" + " & ".join(literals) + ")"


def emit_network(f, form="table"):
    """Serializes f as a canonical TABLE, or as a FORMULA in minterm normal form."""
    if form == "table":
        rows = [f"n {f.n}"]
        rows.extend(f"{State(f.n, x)} {State(f.n, int(y))}" for x, y in enumerate(f.images))
        return "\n".join(rows) + "\n"
    if form == "formula":
        rows = []
        for i in range(1, f.n + 1):
            ones = np.flatnonzero(f.table(i)).tolist()
            if not ones:
                body = "0"
            elif len(ones) == f.num_states:
                body = "1"
            else:
                body = " | ".join(_minterm(f.n, code) for code in ones)
            rows.append(f"f{i} = {body}")
        return "\n".join(rows) + "\n"
    raise ValueError(f"Unknown network form '{form}'. Use 'table' or 'formula'.")


# --- digraphs ---

def parse_digraph(text):
    """Parses `n <int>` followed by one `<i> <j>` line per arc i -> j."""
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError("empty digraph description", 1, 1)
    n = _read_header(*lines[0])
    arcs = set()
    for number, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2 or not all(token.isdigit() for token in fields):
            raise ParseError("expected '<i> <j>'", number, 1)
        arc = (int(fields[0]), int(fields[1]))
        for vertex, token in zip(arc, fields):
            if not 1 <= vertex <= n:
                raise ParseError(f"vertex {vertex} out of range [1, {n}]", number, line.index(token) + 1)
        if arc in arcs:
            raise ParseError(f"duplicate arc {arc[0]} {arc[1]}", number, 1)
        arcs.add(arc)
    return Digraph(n, frozenset(arcs))


def emit_digraph(G):
    rows = [f"n {G.n}"]
    rows.extend(f"{i} {j}" for i, j in G.sorted_arcs())
    return "\n".join(rows) + "\n"


# --- words ---

def parse_word(text):
    """Space- or comma-separated letters, or compact digits such as '1231'."""
    try:
        return Word.parse(text)
    except ValueError as e:
        raise ParseError(str(e), 1, 1)


def format_word(w, compact=False):
    if compact and all(a <= 9 for a in w):
        return w.digits() or "ε"
    return str(w)


# --- files ---

def read_network(path):
    with open(path, "r", encoding="utf-8") as f:
        return parse_network(f.read())


def read_digraph(path):
    with open(path, "r", encoding="utf-8") as f:
        return parse_digraph(f.read())


def sanitize_filename(name):
    """Removes characters that are invalid in file names and replaces spaces with underscores."""
    name = re.sub(r'[\\/*?:"<>|]', "", name)
    return name.replace(" ", "_")


def save_to_file(name, kind, content, directory=None):
    """
    Saves a report, a network or a DOT drawing under the outputs directory.

    Args:
        name: Base name, sanitized before use.
        kind: File extension such as 'dot', 'bn' or 'txt'.
        content: Text to write.
        directory: Defaults to OUTPUT_DIR.

    Returns:
        The path written.
    """
    directory = directory or OUTPUT_DIR
    os.makedirs(directory, exist_ok=True)
    file_path = os.path.join(directory, f"{sanitize_filename(name)}.{kind}")
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(content)
    log_progress(f"✅ Saved {kind} output to: {file_path}")
    return file_path


# --- DOT ---

def _gvquote(s):
    return '"{}"'.format(str(s).replace('"', r'\"'))


def _digraph_dot(G, name):
    yield f"digraph {_gvquote(name)} {{\n"
    for v in G.vertices:
        yield f"  {_gvquote(v)} [shape=circle];\n"
    for i, j in G.sorted_arcs():
        yield f"  {_gvquote(i)} -> {_gvquote(j)};\n"
    yield "}\n"


def _async_dot(f):
    graph = async_graph(f)
    fixed = f.fixed_mask
    yield 'digraph "async" {\n'
    yield "  rankdir=BT;\n"
    for code, label in sorted(graph.nodes(data="label")):
        shape = "doublecircle" if fixed[code] else "circle"
        yield f"  {_gvquote(label)} [shape={shape}];\n"
    for x, y, letter in sorted(graph.edges(data="letter")):
        yield (f"  {_gvquote(graph.nodes[x]['label'])} -> {_gvquote(graph.nodes[y]['label'])}"
               f" [label={_gvquote(letter)}];\n")
    yield "}\n"


def graphviz(obj, kind="interaction"):
    """
    Produces a DOT drawing as an iterable of lines.

    Args:
        obj: A Digraph, or a BooleanNetwork.
        kind: For a network, "async" draws Γ(f) with states labeled by their
            bit strings and fixed points double-circled; "interaction" draws G(f).
    """
    if isinstance(obj, Digraph):
        return _digraph_dot(obj, "digraph")
    if kind == "async":
        return _async_dot(obj)
    if kind == "interaction":
        return _digraph_dot(interaction_graph(obj), "interaction")
    raise ValueError(f"Unknown drawing kind '{kind}'. Use 'async' or 'interaction'.")


def export_dot(obj, kind="interaction"):
    return "".join(graphviz(obj, kind))
