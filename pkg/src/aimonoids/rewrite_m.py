"""Confluent rewriting for the Coxeter-flavoured monoid of the chain diagram.

Three rule shapes, with ``(x_a, x_b]`` again the descending run
``x_{a-1} ... x_b``:

* Commutation: ``x_a x_b -> x_b x_a`` whenever ``a - b >= 2``.
* Square run: ``(x_a,x_b](x_a,x_b] -> (x_{a-1},x_b](x_a,x_b]`` whenever
  ``a - b >= 1`` (the first letter is deleted); the smallest instance is
  the idempotent square ``x_b x_b -> x_b``.
* Staircase: for a < b, words y_i over letters above i and z_i over
  letters below i-1,

      x_a (y_{a+1} x_{a+1} x_a z_{a+1}) ... (y_b x_b x_{b-1} z_b) x_b

  loses its trailing ``x_b``.

The letter following w[i] picks the shape (lower by two or more:
commutation; equal or lower by one: square run; higher: staircase), and
each parse is forced, so again at most one rule occurrence per start
position.  x_a x_a arises as both a degenerate square run and a
degenerate staircase; it is reported once, as a square run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .garside import nabla
from .rewrite_a import ConfluenceReport, CriticalTriple
from .words import Word, commute_sort, descending_run, random_word, validate_word

COMMUTATION = "commutation"
SQUARE_RUN = "square-run"
STAIRCASE = "staircase"


@dataclass(frozen=True)
class MStandardMatch:
    """One rule occurrence over the span [start, end).

    Commutation: (a, b) are the swapped letters.  Square run: the run
    parameters with a - b >= 1.  Staircase: a and b are the first and last
    stair indices; y_spans and z_spans give the interleaved stretches in
    host-word coordinates, one pair per stair a+1 .. b.
    """

    kind: str
    start: int
    end: int
    a: int
    b: int
    y_spans: tuple = ()
    z_spans: tuple = ()


def _square_run_at(w, i):
    n = len(w)
    run = 1
    while i + run < n and w[i + run] == w[i] - run:
        run += 1
    j = i + run
    if j + run > n or w[i] - run < 0:
        return None
    for t in range(run):
        if w[j + t] != w[i] - t:
            return None
    return MStandardMatch(SQUARE_RUN, i, j + run, w[i] + 1, w[i] + 1 - run)


def _staircase_at(w, i):
    n = len(w)
    a = w[i]
    j = i + 1
    seg = a + 1
    y_spans = []
    z_spans = []
    while True:
        y0 = j
        while j < n and w[j] > seg:
            j += 1
        y_spans.append((y0, j))
        if j + 1 >= n or w[j] != seg or w[j + 1] != seg - 1:
            return None
        j += 2
        z0 = j
        while j < n and w[j] <= seg - 2:
            j += 1
        z_spans.append((z0, j))
        if j >= n:
            return None
        v = w[j]
        if v == seg:
            return MStandardMatch(STAIRCASE, i, j + 1, a, seg,
                                  tuple(y_spans), tuple(z_spans))
        if v > seg:
            seg += 1
            continue
        return None


def m_match_at(w, i) -> MStandardMatch | None:
    """The unique rule occurrence starting at position i, if any."""
    if i + 1 >= len(w):
        return None
    d = w[i + 1] - w[i]
    if d <= -2:
        return MStandardMatch(COMMUTATION, i, i + 2, w[i], w[i + 1])
    if d >= 1:
        return _staircase_at(w, i)
    return _square_run_at(w, i)


def m_matches(w) -> list:
    """All rule occurrences, in increasing start order (one per start at most)."""
    w = tuple(w)
    out = []
    for i in range(len(w)):
        m = m_match_at(w, i)
        if m is not None:
            out.append(m)
    return out


def m_apply(w, match: MStandardMatch) -> Word:
    w = tuple(w)
    if m_match_at(w, match.start) != match:
        raise ValueError(f"match {match} does not occur in {w}")
    i = match.start
    if match.kind == COMMUTATION:
        return w[:i] + (w[i + 1], w[i]) + w[i + 2:]
    if match.kind == SQUARE_RUN:
        return w[:i] + w[i + 1:]
    return w[:match.end - 1] + w[match.end:]


def m_step(w) -> Word | None:
    """Apply the leftmost rule occurrence; None iff w is reduced."""
    w = tuple(w)
    for i in range(len(w)):
        m = m_match_at(w, i)
        if m is not None:
            return m_apply(w, m)
    return None


def _m_sweep(w: list) -> int:
    """Greedy left-to-right deletions in place; returns the count."""
    applied = 0
    i = 0
    while i < len(w):
        if i + 1 >= len(w):
            break
        d = w[i + 1] - w[i]
        m = None
        if d in (-1, 0):
            m = _square_run_at(w, i)
        elif d >= 1:
            m = _staircase_at(w, i)
        if m is None:
            i += 1
        elif m.kind == SQUARE_RUN:
            del w[i]
            applied += 1
        else:
            del w[m.end - 1]
            applied += 1
    return applied


def m_reduce_steps(word) -> tuple:
    """Normal form and the number of single-rule steps taken to reach it."""
    w = list(validate_word(word))
    steps = 0
    while True:
        steps += commute_sort(w)
        deleted = _m_sweep(w)
        steps += deleted
        if not deleted:
            return tuple(w), steps


def m_reduce(word) -> Word:
    """The unique normal form of the word; equals iterated m_step."""
    return m_reduce_steps(word)[0]


def m_reduce_random(word, rng) -> tuple:
    """Normalize by uniformly random rule choices; (normal form, steps)."""
    w = tuple(validate_word(word))
    steps = 0
    while True:
        ms = m_matches(w)
        if not ms:
            return w, steps
        w = m_apply(w, rng.choice(ms))
        steps += 1


def m_equal(u, v) -> bool:
    """Word problem: compare normal forms."""
    return m_reduce(u) == m_reduce(v)


# ---------------------------------------------------------------------------
# overlap analysis


def _words_up_to(letters, cap: int):
    """All words of length <= cap over the alphabet, shortest first."""
    letters = tuple(letters)
    out = [()]
    layer = [()]
    for _ in range(cap):
        layer = [w + (x,) for w in layer for x in letters]
        out.extend(layer)
    return out


def _segment(i: int, y, z) -> Word:
    return tuple(y) + (i, i - 1) + tuple(z)


def _interleave_assignments(lo: int, hi: int, n: int, cap: int):
    """Choices of (y_i, z_i) for each stair index lo..hi, as dicts."""
    per = []
    for i in range(lo, hi + 1):
        ys = _words_up_to(range(i + 1, n + 1), cap)
        zs = _words_up_to(range(1, i - 1), cap)
        per.append([(y, z) for y in ys for z in zs])
    for combo in product(*per):
        yield dict(zip(range(lo, hi + 1), combo))


def _stair_segments(lo: int, hi: int, assign) -> Word:
    out = []
    for i in range(lo, hi + 1):
        y, z = assign[i]
        out.extend(_segment(i, y, z))
    return tuple(out)


def _full_span_m(w) -> MStandardMatch:
    for m in m_matches(w):
        if m.start == 0 and m.end == len(w):
            return m
    raise ValueError(f"not a rule left-hand side: {w}")


def m_critical_pairs(n: int, max_interleave: int = 1) -> list:
    """Every overlap triple with letters bounded by n and interleaved
    stretches of length at most max_interleave.

    Ten shapes exhaust the overlaps of the three rules: (a) two
    commutations; (b) commutation into a square run; (c) square run ending
    in a commutation; (d) commutation into a staircase; (e) staircase
    ending in a commutation; (f) two square runs sharing a run; (g) square
    run feeding a staircase head; (h) staircase tail feeding a square run;
    (i) two staircases sharing a stair letter; (j) two staircases
    overlapping in a descent pair.  Pure x_a x_a overlaps appear under the
    square-run shapes, so the staircase shapes take b > a.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    L = max_interleave
    if L < 0:
        raise ValueError("interleave cap must be nonnegative")
    out = []
    for a in range(5, n + 1):
        for b in range(3, a - 1):
            for c in range(1, b - 1):
                out.append(CriticalTriple("a", (a,), (b,), (c,)))
    for c in range(1, n - 1):
        for b in range(c + 1, n):
            for a in range(b + 1, n + 1):
                s = descending_run(b - 1, c) + descending_run(b, c)
                out.append(CriticalTriple("b", (a,), (b - 1,), s))
    for c in range(1, n - 1):
        for b in range(c + 2, n + 1):
            for a in range(b + 1, n + 2):
                q = descending_run(a, b) + descending_run(a, b + 1)
                out.append(CriticalTriple("c", q, (b,), (c,)))
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            for assign in _interleave_assignments(a + 1, b, n, L):
                tail = _stair_segments(a + 1, b, assign) + (b,)
                for c in range(a + 2, n + 1):
                    out.append(CriticalTriple("d", (c,), (a,), tail))
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            for assign in _interleave_assignments(a + 1, b, n, L):
                q = (a,) + _stair_segments(a + 1, b, assign)
                for c in range(1, b - 1):
                    out.append(CriticalTriple("e", q, (b,), (c,)))
    for d in range(1, n + 1):
        for b in range(d, n + 1):
            for c in range(b + 1, n + 2):
                for a in range(c, n + 2):
                    q = descending_run(a, b) + descending_run(a, c)
                    r = descending_run(c, b)
                    s = descending_run(b, d) + descending_run(c, d)
                    out.append(CriticalTriple("f", q, r, s))
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            for assign in _interleave_assignments(a + 1, b, n, L):
                tail = _stair_segments(a + 1, b, assign) + (b,)
                for c in range(a + 1, n + 2):
                    q = descending_run(c, a) + descending_run(c, a + 1)
                    out.append(CriticalTriple("g", q, (a,), tail))
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            for assign in _interleave_assignments(a + 1, b, n, L):
                q = (a,) + _stair_segments(a + 1, b, assign)
                for c in range(1, b + 1):
                    s = descending_run(b, c) + descending_run(b + 1, c)
                    out.append(CriticalTriple("h", q, (b,), s))
    for a in range(1, n - 1):
        for b in range(a + 1, n):
            for c in range(b + 1, n + 1):
                for assign in _interleave_assignments(a + 1, c, n, L):
                    q = (a,) + _stair_segments(a + 1, b, assign)
                    s = _stair_segments(b + 1, c, assign) + (c,)
                    out.append(CriticalTriple("i", q, (b,), s))
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            for c in range(b, n + 1):
                for assign in _interleave_assignments(a + 1, c, n, L):
                    yb, zb = assign[b]
                    q = ((a,) + _stair_segments(a + 1, b - 1, assign)
                         + tuple(yb) + (b,))
                    s = ((b - 1,) + tuple(zb)
                         + _stair_segments(b + 1, c, assign) + (c,))
                    out.append(CriticalTriple("j", q, (b - 1, b), s))
    for t in out:
        _full_span_m(t.q + t.r)
        _full_span_m(t.r + t.s)
    return out


def m_confluence_audit(n: int, max_interleave: int = 1, random_words: int = 200,
                       seed: int = 0, reducer=None) -> ConfluenceReport:
    """Join both one-step reducts of every overlap, plus random disjoint pairs."""
    reduce_fn = m_reduce if reducer is None else reducer
    failures = []
    by_family = {}
    checked = 0
    for t in m_critical_pairs(n, max_interleave):
        u = t.q + t.r + t.s
        qr, rs = t.q + t.r, t.r + t.s
        v = m_apply(qr, _full_span_m(qr)) + t.s
        w = t.q + m_apply(rs, _full_span_m(rs))
        checked += 1
        by_family[t.family] = by_family.get(t.family, 0) + 1
        if reduce_fn(v) != reduce_fn(w):
            failures.append((u, v, w))
    rng = random.Random(seed)
    for _ in range(random_words):
        w0 = random_word(rng, n, 12, 2)
        ms = m_matches(w0)
        for x in range(len(ms)):
            for y in range(x + 1, len(ms)):
                if ms[x].end <= ms[y].start:
                    v = m_apply(w0, ms[x])
                    w = m_apply(w0, ms[y])
                    checked += 1
                    by_family["disjoint"] = by_family.get("disjoint", 0) + 1
                    if reduce_fn(v) != reduce_fn(w):
                        failures.append((w0, v, w))
    return ConfluenceReport(checked, failures, by_family)


# ---------------------------------------------------------------------------
# global structure witnesses


@dataclass
class SinkReport:
    n: int
    trials: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_sink(n: int, trials: int = 500, seed: int = 0) -> SinkReport:
    """The image of the Garside word absorbs everything: x nabla y = nabla.

    Checks the one-sided generator identities exactly, then random two-sided
    products.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    nab = nabla(n)
    target = m_reduce(nab)
    failures = []
    for a in range(1, n + 1):
        if m_reduce((a,) + nab) != target:
            failures.append(((a,), ()))
        if m_reduce(nab + (a,)) != target:
            failures.append(((), (a,)))
    rng = random.Random(seed)
    for _ in range(trials):
        x = random_word(rng, n, 8)
        y = random_word(rng, n, 8)
        if m_reduce(x + nab + y) != target:
            failures.append((x, y))
    return SinkReport(n, trials, failures)


def infiniteness_witness(k: int, rank: int = 3) -> bool:
    """Whether the k-th power of the probe word x2 x1 x2 x3 is reduced.

    The powers are pairwise distinct normal forms, so the monoid on three
    or more generators has infinitely many elements.
    """
    if rank < 3:
        raise ValueError("the probe word needs rank at least 3")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return not m_matches((2, 1, 2, 3) * k)
