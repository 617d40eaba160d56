"""Engine-wide knobs."""
from dataclasses import dataclass


@dataclass(frozen=True)
class EngineConfig:
    max_degree: int = 16  # truncation for split-membership solves
    h_degree_bound: int = 12  # unknown coefficients of h(A) in the Adams-route certificate
    representatives: int = 4  # values of p tried per residue when computing bounds

    def __post_init__(self):
        if self.max_degree < 0 or self.h_degree_bound < 0 or self.representatives < 1:
            raise ValueError(f"invalid engine configuration {self}")
