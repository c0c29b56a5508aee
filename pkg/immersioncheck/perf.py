"""Performance helpers for benchmarking and profiling the closure pipeline."""

from __future__ import annotations

import cProfile
import io
import pstats
import statistics
import timeit
from contextlib import contextmanager
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .automata import fold, linear_automaton
from .monoid import ClosureConfig, Presentation, schutzenberger
from .words import Alphabet, Word


def _summarise(runs: Sequence[float]) -> Mapping[str, float]:
    return {
        "min": min(runs),
        "max": max(runs),
        "mean": statistics.fmean(runs),
    }


def benchmark_fold(words: Iterable[Word], alphabet: Alphabet, *, repeat: int = 5) -> Mapping[str, float]:
    """Benchmark folding the linear automata of ``words``."""

    seeds = tuple(linear_automaton(word, alphabet) for word in words)
    timer = timeit.Timer(lambda: [fold(seed) for seed in seeds])
    return _summarise(timer.repeat(repeat=repeat, number=1))


def benchmark_closure(
    presentation: Presentation,
    words: Iterable[Word],
    *,
    repeat: int = 5,
    config: ClosureConfig | None = None,
) -> Mapping[str, float]:
    """Benchmark computing the Schützenberger automata of ``words`` from scratch."""

    cached_words = tuple(words)
    timer = timeit.Timer(lambda: [schutzenberger(presentation, word, config) for word in cached_words])
    return _summarise(timer.repeat(repeat=repeat, number=1))


def profile_invocation(argv: Sequence[str], *, limit: int = 25) -> str:
    """Profile one CLI invocation and return the formatted statistics."""

    from .__main__ import main

    profiler = cProfile.Profile()
    profiler.runcall(main, list(argv))
    return _render(profiler, limit)


@contextmanager
def capture_profile() -> Iterator[Callable[[int], str]]:
    """Profile the body of the ``with`` block.

    The yielded callable stops the profiler and returns the summary of the
    ``limit`` most expensive calls.
    """

    profiler = cProfile.Profile()
    profiler.enable()

    def exporter(limit: int = 25) -> str:
        profiler.disable()
        return _render(profiler, limit)

    try:
        yield exporter
    finally:
        profiler.disable()


def _render(profiler: cProfile.Profile, limit: int) -> str:
    """The ``limit`` most expensive calls by cumulative time."""

    stream = io.StringIO()
    pstats.Stats(profiler, stream=stream).strip_dirs().sort_stats(pstats.SortKey.CUMULATIVE).print_stats(limit)
    return stream.getvalue()


__all__ = [
    "benchmark_closure",
    "benchmark_fold",
    "capture_profile",
    "profile_invocation",
]
