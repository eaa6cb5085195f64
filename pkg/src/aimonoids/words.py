"""Words over integer letters and the partial-commutation congruence.

A word is a tuple of positive integers; letter ``a`` stands for the a-th
generator.  Distant letters commute: ``a b = b a`` whenever ``a - b >= 2``.
Every commutation class contains exactly one word with no adjacent
descending pair of gap two or more; ``b_reduced_form`` computes it.

>>> b_reduced_form((4, 2, 3, 1))
(2, 1, 4, 3)
"""

from __future__ import annotations

Word = tuple[int, ...]


def validate_word(word, rank: int | None = None) -> Word:
    """Coerce to a tuple and check that every letter is a valid generator."""
    w = tuple(word)
    for x in w:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"letters must be positive integers, got {x!r}")
        if rank is not None and x > rank:
            raise ValueError(f"letter {x} out of range for rank {rank}")
    return w


def parse_word(text: str, rank: int | None = None) -> Word:
    """Parse a whitespace-separated word; the empty string is the identity."""
    parts = text.split()
    try:
        letters = [int(p) for p in parts]
    except ValueError:
        bad = next(p for p in parts if not p.lstrip("-").isdigit())
        raise ValueError(f"not a letter: {bad!r}") from None
    return validate_word(letters, rank)


def format_word(word) -> str:
    return " ".join(str(x) for x in word)


def descending_run(a: int, b: int) -> Word:
    """The run x_{a-1} x_{a-2} ... x_b, empty when a == b.

    Runs compose: descending_run(a, b) + descending_run(b, c) is
    descending_run(a, c) whenever a >= b >= c.
    """
    if not (a >= b >= 1):
        raise ValueError(f"need a >= b >= 1, got ({a}, {b})")
    return tuple(range(a - 1, b - 1, -1))


def alternating(a: int, b: int, k: int) -> Word:
    """The alternating word a b a b ... of length k, starting with a."""
    if k < 0:
        raise ValueError("length must be nonnegative")
    return tuple(a if i % 2 == 0 else b for i in range(k))


def descent_inversions(word) -> int:
    """Number of pairs i < j with word[i] - word[j] >= 2.

    Together with the length this is the termination measure for both
    rewriting systems: a commutation step lowers it by exactly one and
    never touches the length, every other rule shortens the word.
    """
    w = tuple(word)
    return sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] - w[j] >= 2
    )


def commute_sort(w: list[int]) -> int:
    """Commutation-normalize a letter list in place; returns the move count.

    Insertion sort restricted to legal swaps: a letter may slide left past a
    neighbour exceeding it by two or more.  Each shift is one commutation
    move, so the count feeds the step-budget checks.
    """
    moves = 0
    for i in range(1, len(w)):
        x = w[i]
        j = i
        while j > 0 and w[j - 1] - x >= 2:
            w[j] = w[j - 1]
            j -= 1
        if j != i:
            w[j] = x
            moves += i - j
    return moves


def b_reduced_form(word) -> Word:
    w = list(validate_word(word))
    commute_sort(w)
    return tuple(w)


def b_equivalent(u, v) -> bool:
    """Whether u and v differ only by commutations of distant letters."""
    return b_reduced_form(u) == b_reduced_form(v)


def random_word(rng, rank: int, max_len: int, min_len: int = 0) -> Word:
    """Uniform letters, uniform length between the bounds."""
    n = rng.randint(min_len, max_len)
    return tuple(rng.randint(1, rank) for _ in range(n))
