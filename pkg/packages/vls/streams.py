"""Deterministic random streams derived from one root seed.

Every worker gets its own family of streams keyed by (worker, purpose), so
adding workers never perturbs the draws of existing ones.
"""

from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np


class StreamPurpose(IntEnum):
    SAMPLING = 0
    SHAKING = 1
    INIT = 2
    FINAL = 3


def derive_generator(seed: int, worker: int, purpose: StreamPurpose) -> np.random.Generator:
    sequence = np.random.SeedSequence(seed, spawn_key=(worker, int(purpose)))
    return np.random.Generator(np.random.PCG64(sequence))


@dataclass
class RngStreams:
    """Per-purpose generators of one worker."""

    seed: int
    worker: int = 0
    sampling: np.random.Generator = field(init=False)
    shaking: np.random.Generator = field(init=False)
    init: np.random.Generator = field(init=False)

    def __post_init__(self) -> None:
        self.sampling = derive_generator(self.seed, self.worker, StreamPurpose.SAMPLING)
        self.shaking = derive_generator(self.seed, self.worker, StreamPurpose.SHAKING)
        self.init = derive_generator(self.seed, self.worker, StreamPurpose.INIT)


def final_generator(seed: int) -> np.random.Generator:
    """Stream for end-of-run procedures shared by all workers of a run."""
    sequence = np.random.SeedSequence(seed, spawn_key=(2**31, int(StreamPurpose.FINAL)))
    return np.random.Generator(np.random.PCG64(sequence))
