"""Core value types: states, words, digraphs, Boolean networks and configurations.

Bit convention, used everywhere: a state of an n-component network is coded by
the integer whose binary expansion, component 1 most significant, equals the
state's text form. So "011" is code 3 and component i is the bit 1 << (n - i).
"""

import re
from dataclasses import dataclass, field

import numpy as np
import networkx as nx

MAX_COMPONENTS = 24


def component_mask(n, i):
    """The bit of component i in an n-component state code."""
    return 1 << (n - i)


@dataclass(frozen=True, order=True)
class State:
    n: int
    code: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_COMPONENTS:
            raise ValueError(f"State width must be in [1, {MAX_COMPONENTS}], got {self.n}.")
        if not 0 <= self.code < (1 << self.n):
            raise ValueError(f"State code {self.code} does not fit in {self.n} bits.")

    @classmethod
    def parse(cls, bits):
        bits = bits.strip()
        if not bits or any(ch not in "01" for ch in bits):
            raise ValueError(f"A state is a non-empty string over {{0,1}}, got '{bits}'.")
        return cls(len(bits), int(bits, 2))

    @classmethod
    def from_components(cls, values):
        values = list(values)
        return cls.parse("".join("1" if v else "0" for v in values))

    @property
    def bits(self):
        return format(self.code, f"0{self.n}b")

    @property
    def components(self):
        return tuple(int(ch) for ch in self.bits)

    def __getitem__(self, i):
        """Component i (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"component {i} out of range for n={self.n}")
        return (self.code >> (self.n - i)) & 1

    def flip(self, i):
        return State(self.n, self.code ^ component_mask(self.n, i))

    def __str__(self):
        return self.bits


_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class Word:
    """A finite sequence of positive letters. The empty tuple is the empty word."""

    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a < 1:
                raise ValueError(f"Letters are positive integers, got {a}.")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *letters):
        return cls(letters)

    @classmethod
    def parse(cls, text):
        """Parses '1 2 3', '1,2,3' or the compact digit form '123'.

        The compact form applies when the text has no separators; each digit is
        then one letter. An empty text, 'ε' or '-' is the empty word.
        """
        text = text.strip()
        if text in ("", "ε", "-", "eps"):
            return cls()
        if _SEPARATORS.search(text):
            parts = [p for p in _SEPARATORS.split(text) if p]
        else:
            parts = list(text)
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"Cannot read a word from '{text}'.")
        return cls(int(p) for p in parts)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __add__(self, other):
        return Word(self.letters + tuple(other))

    def reversed(self):
        return Word(self.letters[::-1])

    def relabel(self, mapping):
        """Applies a letter mapping; letters missing from it are kept."""
        return Word(mapping.get(a, a) for a in self.letters)

    def digits(self):
        """The compact digit form, available when every letter is at most 9."""
        if any(a > 9 for a in self.letters):
            raise ValueError("Compact digit form needs letters <= 9.")
        return "".join(str(a) for a in self.letters)

    def __str__(self):
        return " ".join(str(a) for a in self.letters) if self.letters else "ε"


EMPTY_WORD = Word()


@dataclass(frozen=True)
class Digraph:
    """A directed graph on [n]; loops allowed, no parallel arcs."""

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"A digraph needs at least one vertex, got n={self.n}.")
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        for i, j in arcs:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"Arc {i}->{j} has an endpoint outside [1, {self.n}].")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, n, arcs):
        return cls(n, frozenset(arcs))

    @classmethod
    def from_edges(cls, n, edges, loops=()):
        """Symmetric digraph from undirected edges, plus loops on the given vertices."""
        arcs = set((v, v) for v in loops)
        for i, j in edges:
            arcs.add((i, j))
            arcs.add((j, i))
        return cls(n, frozenset(arcs))

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def in_neighbors(self, i):
        return tuple(sorted(j for j, k in self.arcs if k == i))

    def out_neighbors(self, i):
        return tuple(sorted(k for j, k in self.arcs if j == i))

    def has_arc(self, i, j):
        return (i, j) in self.arcs

    def has_loop(self, i):
        return (i, i) in self.arcs

    def sorted_arcs(self):
        return sorted(self.arcs)

    def to_networkx(self, exclude=()):
        """The graph as an nx.DiGraph on [n], minus the vertices in `exclude`."""
        excluded = set(exclude)
        graph = nx.DiGraph()
        graph.add_nodes_from(v for v in self.vertices if v not in excluded)
        graph.add_edges_from(
            (i, j) for i, j in self.sorted_arcs() if i not in excluded and j not in excluded
        )
        return graph

    def relabel(self, mapping):
        return Digraph(self.n, frozenset((mapping[i], mapping[j]) for i, j in self.arcs))

    def __str__(self):
        return f"Digraph(n={self.n}, arcs={' '.join(f'{i}->{j}' for i, j in self.sorted_arcs())})"


class BooleanNetwork:
    """An n-component Boolean network stored as its image table.

    `images[x]` is the code of f(x); the truth table of component i is bit
    (n - i) of that array. The array is read-only after construction.
    """

    __slots__ = ("n", "images", "_image_list", "_steps", "_fixed")

    def __init__(self, n, images):
        if not 1 <= n <= MAX_COMPONENTS:
            raise ValueError(f"A network needs 1 <= n <= {MAX_COMPONENTS}, got {n}.")
        images = np.array(images, dtype=np.int64)
        size = 1 << n
        if images.shape != (size,):
            raise ValueError(f"Expected {size} images for n={n}, got shape {images.shape}.")
        if images.min() < 0 or images.max() >= size:
            raise ValueError(f"Images must be state codes in [0, {size}).")
        images.flags.writeable = False
        self.n = n
        self.images = images
        self._image_list = images.tolist()
        self._steps = {}
        self._fixed = None

    # --- constructors ---

    @classmethod
    def from_tables(cls, tables):
        """Builds a network from one 0/1 truth table per component."""
        tables = [np.asarray(t, dtype=np.int64) for t in tables]
        n = len(tables)
        if n == 0:
            raise ValueError("A network needs at least one component.")
        images = np.zeros(1 << n, dtype=np.int64)
        for i, table in enumerate(tables, start=1):
            if table.shape != (1 << n,):
                raise ValueError(f"Table of f{i} must have {1 << n} entries, got {table.shape[0]}.")
            if not np.isin(table, (0, 1)).all():
                raise ValueError(f"Table of f{i} must be 0/1 valued.")
            images |= table << (n - i)
        return cls(n, images)

    @classmethod
    def from_function(cls, n, fn):
        """Builds a network from a callable State -> State (or a 0/1 sequence)."""
        images = []
        for code in range(1 << n):
            value = fn(State(n, code))
            images.append(value.code if isinstance(value, State) else State.from_components(value).code)
        return cls(n, images)

    @classmethod
    def identity(cls, n):
        return cls(n, np.arange(1 << n))

    @classmethod
    def constant(cls, n, bits):
        state = bits if isinstance(bits, State) else State.parse(bits)
        return cls(n, np.full(1 << n, state.code))

    # --- evaluation ---

    @property
    def num_states(self):
        return 1 << self.n

    def image(self, x):
        return State(self.n, self._image_list[x.code])

    def __call__(self, x):
        return self.image(x)

    def table(self, i):
        """Truth table of f_i as a 0/1 array indexed by state code."""
        return (self.images >> (self.n - i)) & 1

    def tables(self):
        return [self.table(i) for i in range(1, self.n + 1)]

    def step_code(self, i, code):
        """f^i on a single state code; letters outside [n] leave it unchanged."""
        if not 1 <= i <= self.n:
            return code
        mask = component_mask(self.n, i)
        return (code & ~mask) | (self._image_list[code] & mask)

    def step_codes(self, i):
        """f^i on every state code at once, as a read-only array."""
        steps = self._steps.get(i)
        if steps is None:
            codes = np.arange(self.num_states, dtype=np.int64)
            if 1 <= i <= self.n:
                mask = component_mask(self.n, i)
                steps = (codes & ~mask) | (self.images & mask)
            else:
                steps = codes
            steps.flags.writeable = False
            self._steps[i] = steps
        return steps

    def step(self, i, x):
        return State(self.n, self.step_code(i, x.code))

    @property
    def fixed_mask(self):
        """Boolean array: entry x is True iff f(x) = x."""
        if self._fixed is None:
            fixed = self.images == np.arange(self.num_states)
            fixed.flags.writeable = False
            self._fixed = fixed
        return self._fixed

    def apply_word_code(self, word, code):
        for letter in word:
            code = self.step_code(letter, code)
        return code

    # --- identity ---

    def __eq__(self, other):
        if not isinstance(other, BooleanNetwork):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.images, other.images)

    def __hash__(self):
        return hash((self.n, self.images.tobytes()))

    def __repr__(self):
        rows = ", ".join(
            f"{State(self.n, x)}->{State(self.n, y)}" for x, y in enumerate(self._image_list[:8])
        )
        more = ", ..." if self.num_states > 8 else ""
        return f"BooleanNetwork(n={self.n}, {rows}{more})"


def apply_word(f, w, x):
    """Returns f^w(x): the letters of w applied to x from left to right.

    Letters outside [n] act as the identity, so the empty word returns x.
    """
    if x.n != f.n:
        raise ValueError(f"State {x} has {x.n} components, network has {f.n}.")
    return State(f.n, f.apply_word_code(w, x.code))


class Configuration:
    """The map x -> f^w(x) over all 2^n initial states, for the word applied so far."""

    __slots__ = ("n", "image")

    def __init__(self, n, image):
        image = np.array(image, dtype=np.int64)
        if image.shape != (1 << n,):
            raise ValueError(f"A configuration has exactly {1 << n} entries.")
        image.flags.writeable = False
        self.n = n
        self.image = image

    @classmethod
    def identity(cls, n):
        return cls(n, np.arange(1 << n))

    def advance(self, f, letter):
        """Letter i maps configuration c to f^i o c."""
        return Configuration(self.n, f.step_codes(letter)[self.image])

    def apply_word(self, f, w):
        config = self
        for letter in w:
            config = config.advance(f, letter)
        return config

    def key(self):
        """Canonical byte encoding of the image array."""
        return self.image.tobytes()

    def image_set(self):
        return frozenset(self.image.tolist())

    def image_set_mask(self):
        """The image set as a 2^n-bit integer: bit x set iff x is a current image."""
        mask = 0
        for code in set(self.image.tolist()):
            mask |= 1 << code
        return mask

    def is_fixing(self, f):
        return bool(f.fixed_mask[self.image].all())

    def __eq__(self, other):
        return isinstance(other, Configuration) and self.n == other.n and self.key() == other.key()

    def __hash__(self):
        return hash((self.n, self.key()))

    def __repr__(self):
        return f"Configuration(n={self.n}, image={self.image.tolist()})"
