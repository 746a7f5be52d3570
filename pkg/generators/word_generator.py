"""Constructions of universal, path-universal and Gray-code words."""

from boolean_network import Word, State
from analyzers.word_analyzer import CubePath
from fixing_core import within_limit, OutOfRangeError


def _zigzag(n, segments):
    """1, then `segments` sweeps alternating 2..n and n-1..1."""
    letters = [1]
    up = list(range(2, n + 1))
    down = list(range(n - 1, 0, -1))
    for r in range(1, segments + 1):
        letters.extend(up if r % 2 == 1 else down)
    return Word(letters)


def zigzag_universal(n, k):
    """
    Builds an (n,k)-universal word of length (n-1)(n-k)+1.

    Args:
        n: Alphabet size, n >= 1.
        k: 0 <= k <= n.

    Returns:
        The Word 1, w^1, ..., w^(n-k) where odd sweeps are 2..n and even
        sweeps are n-1..1.
    """
    if n < 1 or not 0 <= k <= n:
        raise OutOfRangeError(f"zigzag_universal needs n >= 1 and 0 <= k <= n, got n={n}, k={k}.")
    return _zigzag(n, n - k)


@within_limit("GRAY_N", size_of=lambda n, *args, **kwargs: n)
def gray_word(n):
    """The word induced by the reflected Gray-code path: w^1 = 1, w^n = w^(n-1), n, reverse(w^(n-1))."""
    if n < 1:
        raise OutOfRangeError(f"gray_word needs n >= 1, got {n}.")
    letters = [1]
    for t in range(2, n + 1):
        letters = letters + [t] + letters[::-1]
    return Word(letters)


@within_limit("GRAY_N", size_of=lambda n, *args, **kwargs: n)
def gray_path(n):
    """The Hamiltonian path of the n-cube, from 0...0, whose induced word is gray_word(n)."""
    return CubePath.from_word(n, gray_word(n), State(n, 0))


@within_limit("PATH_WORD_N", size_of=lambda n, *args, **kwargs: n)
def path_universal_word(n):
    """An n-path-universal word of length (n-1)(2^n - 1) + 1."""
    if n < 1:
        raise OutOfRangeError(f"path_universal_word needs n >= 1, got {n}.")
    return _zigzag(n, (1 << n) - 1)
