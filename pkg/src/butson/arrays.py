"""Perfect h-phase arrays and their exact cyclic autocorrelation.

An abelian-group BH element with factors (n_1, ..., n_k) is stored directly
as a k-dimensional exponent tensor; the array is perfect exactly when the
group-ring element verifies, and both directions are testable here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .cyclotomic import CycInt, is_zero
from .errors import NonUnimodular, NotAbelianFactored
from .groups import GroupRingElt


@dataclass(frozen=True)
class PerfectArray:
    dims: tuple[int, ...]
    h: int
    exponents: tuple[int, ...]  # row-major over dims

    def __post_init__(self) -> None:
        if len(self.exponents) != math.prod(self.dims):
            raise ValueError("exponent count must match the dimensions")

    def tensor(self) -> np.ndarray:
        return np.array(self.exponents, dtype=np.int64).reshape(self.dims)

    def with_entry(self, flat_index: int, e: int) -> "PerfectArray":
        exps = list(self.exponents)
        exps[flat_index] = e % self.h
        return PerfectArray(self.dims, self.h, tuple(exps))


def to_array(D: GroupRingElt) -> PerfectArray:
    """Array entry at the coordinates of g = exponent of the coefficient of g."""
    if D.group.abelian_factors is None:
        raise NotAbelianFactored("array export needs an abelian group in factor form")
    exps = D.monomial_exponents()
    if exps is None:
        raise NonUnimodular("all coefficients must be single roots of unity")
    # the group's element index is already row-major over its factors
    return PerfectArray(D.group.abelian_factors, D.h, tuple(exps))


def autocorrelation(A: PerfectArray, shift) -> CycInt:
    """Exact cyclic autocorrelation sum a_i * conj(a_{i+shift}) as a CycInt."""
    shift = tuple(int(s) % d for s, d in zip(shift, A.dims))
    t = A.tensor()
    shifted = np.roll(t, tuple(-s for s in shift), axis=tuple(range(len(A.dims))))
    hist = np.bincount(((t - shifted) % A.h).ravel(), minlength=A.h)
    return CycInt(A.h, tuple(int(c) for c in hist))


def verify_perfect(A: PerfectArray) -> bool:
    """True iff every nonzero cyclic shift has exactly zero autocorrelation."""
    for shift in product(*(range(d) for d in A.dims)):
        if all(s == 0 for s in shift):
            continue
        if not is_zero(autocorrelation(A, shift)):
            return False
    return True
