"""Brute-force ground truth: exact fixing lengths, minimum universal-word lengths
and the fixable fraction, by exhaustive search at small n."""

import concurrent.futures
from fractions import Fraction
from functools import partial

import numpy as np

from boolean_network import Word, Configuration, component_mask
from analyzers.network_analyzer import is_fixable, reaches_fixed_point
from analyzers.word_analyzer import _embeds_all_injective, is_path_universal
from generators.network_generator import conjunctive_network, sample_networks
from generators.fixing_word_generator import as_family
from analyzers.graph_analyzer import all_digraphs
from fixing_core import (
    within_limit,
    log_progress,
    cost_accepted,
    NotFixableError,
    BudgetExceededError,
    OutOfRangeError,
)

# --- Configuration ---
FRACTION_CHUNK = 1 << 16   # networks per vectorized batch in fixable_fraction


# --- single networks ---

@within_limit("ORACLE_N", size_of=lambda f, *args, **kwargs: f.n)
def shortest_fixing_word(f):
    """
    Breadth-first search over configurations for a shortest word fixing f.

    Configurations are deduplicated by their image set: whether a word fixes
    f from configuration c, and every later image set, depend only on the
    set of images of c.

    Args:
        f: The BooleanNetwork.

    Returns:
        A shortest fixing Word, or None if f is not fixable.
    """
    start = Configuration.identity(f.n)
    parents = {start.image_set_mask(): None}
    frontier = [start]
    depth = 0
    while frontier:
        for config in frontier:
            if config.is_fixing(f):
                return _trace_word(parents, config.image_set_mask())
        log_progress(f"  -> depth {depth}: {len(frontier)} configurations")
        following = []
        for config in frontier:
            key = config.image_set_mask()
            for letter in range(1, f.n + 1):
                moved = config.advance(f, letter)
                moved_key = moved.image_set_mask()
                if moved_key not in parents:
                    parents[moved_key] = (key, letter)
                    following.append(moved)
        frontier = following
        depth += 1
    return None


def _trace_word(parents, key):
    letters = []
    while parents[key] is not None:
        key, letter = parents[key]
        letters.append(letter)
    return Word(reversed(letters))


def min_fixing_length(f, **kwargs):
    """λ(f), or None when f is not fixable."""
    word = shortest_fixing_word(f, **kwargs)
    return None if word is None else len(word)


def max_fixing_length(family, workers=None):
    """
    Maximum of λ over a family, optionally computed in a process pool.

    Args:
        family: Anything greedy_fix_word accepts.
        workers: Number of worker processes; None or 1 runs in-process.

    Returns:
        (max λ, index of the first member attaining it).

    Raises:
        NotFixableError: if some member is not fixable.
    """
    members = list(as_family(family))
    solve = partial(min_fixing_length, accept_cost=cost_accepted())
    if workers and workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            lengths = list(executor.map(solve, members, chunksize=64))
    else:
        lengths = [solve(f) for f in members]
    for index, length in enumerate(lengths):
        if length is None:
            raise NotFixableError(index)
    best = max(lengths)
    return best, lengths.index(best)


@within_limit("ENUM_N", size_of=lambda n, *args, **kwargs: n)
def conjunctive_fixing_lengths(n):
    """(G, λ or None) for the conjunctive network on every digraph over [n]."""
    return [(G, min_fixing_length(conjunctive_network(G))) for G in all_digraphs(n)]


# --- families ---

class _StackedFamily:
    """Step tables of every member stacked as (members, 2^n) arrays, one per letter."""

    def __init__(self, members, n):
        self.n = n
        self.size = len(members)
        self.steps = {i: np.stack([f.step_codes(i) for f in members]) for i in range(1, n + 1)}
        self.fixed = np.stack([f.fixed_mask for f in members])

    def start(self, rows=None):
        count = self.size if rows is None else len(rows)
        return np.broadcast_to(np.arange(1 << self.n), (count, 1 << self.n))

    def advance(self, images, letter, rows=None):
        steps = self.steps[letter] if rows is None else self.steps[letter][rows]
        return np.take_along_axis(steps, images, axis=1)

    def fixed_rows(self, images, rows=None):
        fixed = self.fixed if rows is None else self.fixed[rows]
        return np.take_along_axis(fixed, images, axis=1).all(axis=1)

    def failing_members(self, letters, rows=None):
        images = self.start(rows)
        for letter in letters:
            images = self.advance(images, letter, rows)
        return np.flatnonzero(~self.fixed_rows(images, rows))


def shortest_family_word(family, budget, prune_repeats=None):
    """
    Iterative deepening for a shortest word fixing every member of a family.

    Candidate words are first run on a small set of sentinel members, those
    that rejected earlier candidates, and only then on the whole stacked
    family. A member rejecting a candidate joins the sentinels.

    Args:
        family: FamilySpec, FamilyEnumeration or list of networks.
        budget: Largest word length to try.
        prune_repeats: Skip words with two equal consecutive letters. Only
            sound for asynchronous-acyclic families, which is the default
            when the family is named "async-acyclic".

    Returns:
        A shortest Word fixing every member.

    Raises:
        NotFixableError: if some member is not fixable.
        BudgetExceededError: if no word of length <= budget works.
    """
    family = as_family(family)
    members = family.members()
    for index, f in enumerate(members):
        if not reaches_fixed_point(f).all():
            raise NotFixableError(index)
    if prune_repeats is None:
        prune_repeats = family.name == "async-acyclic"
    n = family.n
    stacked = _StackedFamily(members, n)
    sentinels = [0]

    for length in range(budget + 1):
        # words are tried in lexicographic order; after a sentinel joins, the
        # search resumes past `resume`, the last rejected word
        resume = None
        while True:
            log_progress(f"🔍 Trying words of length {length} ({len(sentinels)} sentinel members)...")
            rows = np.array(sentinels)
            word = []
            rejected = None

            def search(images, remaining, on_resume):
                nonlocal rejected
                if remaining == 0:
                    if on_resume or not stacked.fixed_rows(images, rows).all():
                        return False
                    failing = stacked.failing_members(word)
                    if len(failing) == 0:
                        return True
                    sentinels.append(int(failing[0]))
                    rejected = tuple(word)
                    return False
                first = resume[len(word)] if on_resume else 1
                for letter in range(first, n + 1):
                    if prune_repeats and word and word[-1] == letter:
                        continue
                    word.append(letter)
                    found = search(stacked.advance(images, letter, rows), remaining - 1,
                                   on_resume and letter == first)
                    if found:
                        return True
                    word.pop()
                    if rejected is not None:
                        return False
                return False

            if search(stacked.start(rows), length, resume is not None):
                log_progress(f"✅ Found fixing word {Word(word)}")
                return Word(word)
            if rejected is None:
                break
            resume = rejected
    raise BudgetExceededError(budget)


def family_min_fixing_length(family, budget, prune_repeats=None):
    """λ(F) for a finite family; see shortest_family_word."""
    return len(shortest_family_word(family, budget, prune_repeats))


# --- universal words ---

def _canonical_words(n, length):
    """Words over [n] without equal consecutive letters whose letters first appear as 1, 2, 3, ...

    Every other such word is a relabeling of one of these, and both
    (n,k)-universality and path-universality are invariant under relabeling.
    """
    word = []

    def extend(highest):
        if len(word) == length:
            yield Word(word)
            return
        for letter in range(1, min(highest + 1, n) + 1):
            if word and word[-1] == letter:
                continue
            word.append(letter)
            yield from extend(max(highest, letter))
            word.pop()

    yield from extend(0)


def _first_length(n, lower, test):
    length = lower
    while True:
        log_progress(f"🔍 Trying canonical words of length {length}...")
        for word in _canonical_words(n, length):
            if test(word):
                log_progress(f"✅ {word}")
                return word
        length += 1


@within_limit("ORACLE_N", size_of=lambda n, *args, **kwargs: n)
def shortest_universal_word(n, k):
    """A shortest (n,k)-universal word; the empty word when k >= n."""
    if n < 1 or k < 0:
        raise OutOfRangeError(f"shortest_universal_word needs n >= 1 and k >= 0, got n={n}, k={k}.")
    if k >= n:
        return Word()
    return _first_length(n, n, lambda w: _embeds_all_injective(w, n, n - k))


def min_universal_length(n, k, **kwargs):
    """λ_k(n), the minimum length of an (n,k)-universal word."""
    return len(shortest_universal_word(n, k, **kwargs))


@within_limit("ENUM_N", size_of=lambda n, *args, **kwargs: n)
def shortest_path_universal_word(n):
    """A shortest n-path-universal word, searched upward from the n 2^(n-1) lower bound."""
    if n < 1:
        raise OutOfRangeError(f"shortest_path_universal_word needs n >= 1, got {n}.")
    return _first_length(n, n << (n - 1), lambda w: is_path_universal(w, n))


def min_path_universal_length(n, **kwargs):
    """Λ(n), the minimum length of an n-path-universal word."""
    return len(shortest_path_universal_word(n, **kwargs))


# --- fixable fraction ---

def _fixable_rows(images, n):
    """For a (networks, 2^n) image array, which networks are fixable."""
    codes = np.arange(1 << n)
    reach = images == codes
    steps = []
    for i in range(1, n + 1):
        mask = component_mask(n, i)
        steps.append((codes & ~mask) | (images & mask))
    while True:
        grown = reach.copy()
        for step in steps:
            grown |= np.take_along_axis(reach, step, axis=1)
        if np.array_equal(grown, reach):
            return reach.all(axis=1)
        reach = grown


@within_limit("ENUM_N", size_of=lambda n, *args, **kwargs: n)
def fixable_fraction(n):
    """
    φ(n): the exact fraction of n-component networks that are fixable.

    All (2^n)^(2^n) networks are enumerated in vectorized batches; network
    number m has image table given by the base-2^n digits of m.
    """
    size = 1 << n
    total = size ** size
    weights = size ** np.arange(size - 1, -1, -1, dtype=np.int64)
    fixable = 0
    for first in range(0, total, FRACTION_CHUNK):
        index = np.arange(first, min(first + FRACTION_CHUNK, total), dtype=np.int64)
        images = (index[:, None] // weights) % size
        fixable += int(_fixable_rows(images, n).sum())
        log_progress(f"📦 {min(first + FRACTION_CHUNK, total)}/{total} networks, {fixable} fixable")
    return Fraction(fixable, total)


def sample_fixable_fraction(n, samples, seed):
    """Monte Carlo estimate of φ(n) from `samples` seeded uniform networks."""
    if samples < 1:
        raise OutOfRangeError(f"sample_fixable_fraction needs at least one sample, got {samples}.")
    networks = sample_networks(n, samples, seed)
    return sum(is_fixable(f) for f in networks) / samples
