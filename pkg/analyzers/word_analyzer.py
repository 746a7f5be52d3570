"""Subword tests, universality checks and path-words of the n-cube."""

from collections import Counter
from dataclasses import dataclass

from boolean_network import State, Word, component_mask
from fixing_core import within_limit, OutOfRangeError


@dataclass(frozen=True)
class CubePath:
    """A path of the n-cube: distinct states, consecutive ones at Hamming distance 1."""

    states: tuple

    def __post_init__(self):
        states = tuple(self.states)
        if not states:
            raise ValueError("A cube path has at least one state.")
        n = states[0].n
        seen = set()
        for prev, cur in zip(states, states[1:]):
            diff = prev.code ^ cur.code
            if cur.n != n or diff == 0 or diff & (diff - 1):
                raise ValueError(f"{prev} -> {cur} is not an edge of the {n}-cube.")
        for state in states:
            if state in seen:
                raise ValueError(f"State {state} repeats on the path.")
            seen.add(state)
        object.__setattr__(self, "states", states)

    @property
    def n(self):
        return self.states[0].n

    @property
    def induced_word(self):
        """The components flipped along the path, in order."""
        return Word(
            self.n - (prev.code ^ cur.code).bit_length() + 1
            for prev, cur in zip(self.states, self.states[1:])
        )

    @classmethod
    def from_word(cls, n, w, start=None):
        """Walks w from `start` (default 0...0). Raises ValueError if it revisits a state."""
        state = start or State(n, 0)
        states = [state]
        for letter in w:
            state = state.flip(letter)
            states.append(state)
        return cls(tuple(states))

    def __len__(self):
        return len(self.states)


def is_subword(u, w):
    """True iff u embeds into w order-preservingly (greedy left-to-right matching)."""
    remaining = iter(w)
    return all(letter in remaining for letter in u)


def next_occurrence_table(w, n):
    """table[p][a] is the first position q >= p with w[q] == a, or len(w) if none."""
    end = len(w)
    table = [[end] * (n + 1) for _ in range(end + 1)]
    for p in range(end - 1, -1, -1):
        table[p] = table[p + 1][:]
        if w[p] <= n:
            table[p][w[p]] = p
    return table


def _embeds_all_injective(w, n, length):
    table = next_occurrence_table(w, n)
    end = len(w)

    def extend(pos, used, depth):
        if depth == length:
            return True
        for letter in range(1, n + 1):
            if used >> letter & 1:
                continue
            q = table[pos][letter]
            if q == end or not extend(q + 1, used | (1 << letter), depth + 1):
                return False
        return True

    return extend(0, 0, 0)


@within_limit("UNIVERSAL_N", size_of=lambda w, n, k, *args, **kwargs: n)
def is_k_universal(w, n, k):
    """
    Checks (n,k)-universality.

    Args:
        w: The Word to test.
        n: Alphabet size.
        k: 0 <= k <= n; k = 0 is plain n-universality.

    Returns:
        True iff every repetition-free word of length n - k over [n] is a
        subword of w.
    """
    if not 0 <= k <= n:
        raise OutOfRangeError(f"(n,k)-universality needs 0 <= k <= n, got n={n}, k={k}.")
    return _embeds_all_injective(w, n, n - k)


def is_path_word(w, n):
    """
    Parity criterion: every window of w has a letter occurring an odd number of
    times. Equivalently, the prefix parity vectors of w are pairwise distinct,
    which is how it is computed.
    """
    seen = {0}
    parity = 0
    for letter in w:
        if not 1 <= letter <= n:
            return False
        parity ^= component_mask(n, letter)
        if parity in seen:
            return False
        seen.add(parity)
    return True


def induces_cube_path(w, n):
    """Searches for a cube path inducing w. Returns the CubePath or None."""
    if any(not 1 <= letter <= n for letter in w):
        return None
    for start in range(1 << n):
        try:
            return CubePath.from_word(n, w, State(n, start))
        except ValueError:
            continue
    return None


def _cube_path_walk(n):
    """Yields (induced letters, path codes) for every self-avoiding path from 0...0."""
    masks = [component_mask(n, letter) for letter in range(1, n + 1)]
    stack = [((), (0,), 1)]
    while stack:
        letters, codes, visited = stack.pop()
        if letters:
            yield letters, codes
        cur = codes[-1]
        for letter in range(n, 0, -1):
            nxt = cur ^ masks[letter - 1]
            if not visited >> nxt & 1:
                stack.append((letters + (letter,), codes + (nxt,), visited | (1 << nxt)))


@within_limit("ORACLE_N", size_of=lambda n, *args, **kwargs: n)
def path_words(n):
    """All non-empty n-path-words (induced words of paths starting at 0...0)."""
    return [Word(letters) for letters, _ in _cube_path_walk(n)]


@within_limit("ORACLE_N", size_of=lambda w, n, *args, **kwargs: n)
def is_path_universal(w, n):
    """
    Checks whether w contains every n-path-word as a subword.

    Cube paths are enumerated depth-first from 0...0 while the greedy embedding
    pointer into w is carried along, so the search stops at the first path
    word that does not embed.
    """
    table = next_occurrence_table(w, n)
    end = len(w)
    masks = [component_mask(n, letter) for letter in range(1, n + 1)]

    def extend(cur, visited, pos):
        for letter in range(1, n + 1):
            nxt = cur ^ masks[letter - 1]
            if visited >> nxt & 1:
                continue
            q = table[pos][letter]
            if q == end or not extend(nxt, visited | (1 << nxt), q + 1):
                return False
        return True

    return extend(0, 1, 0)


def letter_multiplicity(w):
    return Counter(w)


def max_letter_multiplicity(w):
    counts = letter_multiplicity(w)
    return max(counts.values()) if counts else 0


def has_consecutive_repeat(w):
    return any(a == b for a, b in zip(w, w[1:]))
