import os
import sys
import contextvars
from functools import wraps

import numpy as np
from dotenv import load_dotenv

load_dotenv()

# --- Configuration ---
# Feasibility bounds for the exhaustive searches. Override any of them with
# FIXWORD_LIMIT_<NAME> in the environment or in a .env file.
DEFAULT_LIMITS = {
    "ASYNC_N": 20,          # explicit asynchronous graphs
    "ORACLE_N": 4,          # configuration search, path-universality, universal lengths
    "ENUM_N": 3,            # enumeration of whole network families
    "GRAPH_FAMILY_N": 4,    # conjunctive-symmetric, monotone-on(G) and monotone-tree(G) families
    "GRAPH_N": 12,          # cycle and feedback-set search
    "UNIVERSAL_N": 8,       # (n,k)-universality checks
    "PATH_WORD_N": 12,      # path-universal word construction
    "GRAY_N": 20,           # Gray-code words
}

_cost_accepted = contextvars.ContextVar("fixword_cost_accepted", default=False)
_verbose = contextvars.ContextVar("fixword_verbose", default=None)


class FixwordError(Exception):
    """Base class for every error raised by fixword."""


class InfeasibleSizeError(FixwordError):
    """A guarded operation was asked for an instance above its configured bound."""

    def __init__(self, operation, size, bound, limit_name):
        self.operation = operation
        self.size = size
        self.bound = bound
        self.limit_name = limit_name
        super().__init__(
            f"{operation}: size {size} exceeds limit {limit_name}={bound} "
            f"(pass accept_cost=True or set FIXWORD_ACCEPT_COST=1 to run anyway)"
        )


class PreconditionError(FixwordError):
    """An input violates the precondition of the operation it was given to."""


class OutOfRangeError(PreconditionError, ValueError):
    """A numeric parameter (n, k, ...) lies outside the range the operation is defined on."""


class NotFixableError(PreconditionError):
    def __init__(self, member_index, message=None):
        self.member_index = member_index
        super().__init__(message or f"family member #{member_index} is not fixable")


class NotAsyncAcyclicError(PreconditionError):
    pass


class NotALoopFullTreeError(PreconditionError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"not a loop-full tree: {reason}")


class BudgetExceededError(FixwordError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"no fixing word of length <= {budget}")


class ParseError(FixwordError):
    def __init__(self, message, line=1, column=1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def get_limit(name):
    """Returns the configured bound for `name`, honouring FIXWORD_LIMIT_<NAME>."""
    if name not in DEFAULT_LIMITS:
        raise ValueError(f"Unknown limit '{name}'. Known limits: {', '.join(DEFAULT_LIMITS)}")
    raw = os.environ.get(f"FIXWORD_LIMIT_{name}")
    if raw is None or not raw.strip():
        return DEFAULT_LIMITS[name]
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"FIXWORD_LIMIT_{name} must be an integer, got '{raw}'.")


def _env_flag(name):
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


def cost_accepted():
    return _cost_accepted.get() or _env_flag("FIXWORD_ACCEPT_COST")


def accept_cost(value=True):
    """Lifts (or restores) every size guard for the rest of the current context."""
    _cost_accepted.set(bool(value))


def set_verbose(value=True):
    _verbose.set(bool(value))


def is_verbose():
    flag = _verbose.get()
    if flag is None:
        return _env_flag("FIXWORD_VERBOSE")
    return flag


def log_progress(message):
    """Prints a progress line to stderr when verbose mode is on."""
    if is_verbose():
        print(message, file=sys.stderr, flush=True)


def within_limit(limit_name, size_of):
    """A decorator rejecting calls whose instance size exceeds a configured bound.

    Args:
        limit_name: Key into DEFAULT_LIMITS.
        size_of: Callable receiving the wrapped function's arguments and
            returning the size to compare against the bound.

    The wrapped function gains an `accept_cost` keyword. When it is true the
    bound is ignored for this call and for every guarded call made inside it.
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, accept_cost=False, **kwargs):
            size = size_of(*args, **kwargs)
            bound = get_limit(limit_name)
            if accept_cost and not _cost_accepted.get():
                token = _cost_accepted.set(True)
                try:
                    return func(*args, **kwargs)
                finally:
                    _cost_accepted.reset(token)
            if size > bound and not cost_accepted():
                raise InfeasibleSizeError(func.__name__, size, bound, limit_name)
            return func(*args, **kwargs)
        return wrapper
    return decorator


def get_rng(seed):
    """Returns a seeded numpy Generator. Samplers never run unseeded."""
    if seed is None:
        raise ValueError("A seed must be given for randomized sampling.")
    return np.random.default_rng(seed)
