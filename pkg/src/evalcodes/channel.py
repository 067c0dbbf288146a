"""Seeded error-injection experiments against syndrome decoding.

The noise source is a deliberately simple 64-bit multiplicative
congruential generator (state multiplied by the constant used in PCG64;
values taken from the top bits).  Each trial derives its own generator
from (seed, trial index), so results never depend on execution order and
a report produced twice from the same seed is byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linear import LinearCode

_MULT = 6364136223846793005
_MASK = (1 << 64) - 1


class MulRng:
    """Multiplicative generator on odd 64-bit states."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        # 2s+1 keeps distinct seeds on distinct odd states
        self.state = ((2 * seed + 1) * _MULT) & _MASK

    def next64(self) -> int:
        self.state = (self.state * _MULT) & _MASK
        return self.state

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound) from the top 32 bits; the modulo
        bias is irrelevant at desk-scale bounds."""
        return (self.next64() >> 32) % bound

    def sample_positions(self, n: int, count: int) -> list[int]:
        """count distinct positions out of range(n), by partial shuffle."""
        pool = list(range(n))
        for i in range(count):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:count]


def trial_rng(seed: int, trial: int) -> MulRng:
    return MulRng(seed + trial)


@dataclass(frozen=True)
class ChannelResult:
    """Outcome of a seeded decoding experiment at fixed error weight."""

    trials: int
    error_weight: int
    successes: int
    seed: int

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials


def run_channel_experiment(
    code: LinearCode,
    error_weight: int,
    trials: int,
    seed: int,
    budget: int | None = None,
) -> ChannelResult:
    """Transmit random codewords over a channel injecting exactly
    error_weight symbol errors per word, decode, and count successes."""
    if not 0 <= error_weight <= code.n:
        raise ValueError(f"error weight must lie in 0..{code.n}, got {error_weight}")
    if trials < 1:
        raise ValueError("at least one trial required")
    code.coset_leader_table(budget)  # fail fast if the table is over budget
    f = code.spec
    q, n, k = f.q, code.n, code.k
    successes = 0
    for t in range(trials):
        rng = trial_rng(seed, t)
        message: Sequence[int] = [rng.below(q) for _ in range(k)]
        sent = code.encode(message)
        received = list(sent)
        for pos in rng.sample_positions(n, error_weight):
            received[pos] = f.add(received[pos], 1 + rng.below(q - 1))
        if code.decode(tuple(received), budget) == sent:
            successes += 1
    return ChannelResult(
        trials=trials, error_weight=error_weight, successes=successes, seed=seed
    )
