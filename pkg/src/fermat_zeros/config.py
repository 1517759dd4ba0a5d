from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class VerifyRanges:
    """Default upper limits (inclusive) on p for each exhaustive suite."""

    symmetries: int = 2000
    derivative: int = 500
    formula: int = 2000
    kappa: int = 2000
    prop2: int = 500
    three_term: int = 100
    ed_form: int = 100
    prop4: int = 2000
    lemma: int = 1000
    square: int = 2000
    gauss: int = 13
    cocycle: int = 7
    sq_bound: int = 1000  # upper limit on q, not p
    arith_samples: int = 100


DEFAULT_RANGES = VerifyRanges()
