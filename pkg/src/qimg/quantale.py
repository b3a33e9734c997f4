"""Commutative quantales on the unit interval.

Each family packages a left-continuous t-norm together with its residuum,
forming the structure <[0,1], max, *, 0, 1>.  Three real families are
provided (goedel, product, lukasiewicz) plus the Boolean quantale on the
two-element carrier {0, 1}.  All operations broadcast elementwise over
numpy arrays, so the same code path serves scalars, module elements and
whole kernels.
"""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np

from .errors import DomainError

__all__ = [
    "Quantale",
    "GOEDEL",
    "PRODUCT",
    "LUKASIEWICZ",
    "BOOLEAN",
    "FAMILIES",
    "quantale",
]

Values = Union[float, np.ndarray]

BOTTOM = 0.0
UNIT = 1.0  # the monoid unit e; also the top of the lattice


def _result(a):
    # collapse 0-d arrays back to plain scalars
    if isinstance(a, np.ndarray) and a.ndim == 0:
        return float(a)
    return a


class Quantale:
    """One fixed family of t-norm and residuum; stateless and hashable."""

    family: str = ""

    def check(self, x: Values) -> None:
        """Reject values outside the carrier."""
        arr = np.asarray(x, dtype=float)
        if arr.size and (np.any(arr < 0.0) or np.any(arr > 1.0) or np.any(np.isnan(arr))):
            raise DomainError(f"value outside [0,1] for the {self.family} quantale")

    def mul(self, x: Values, y: Values) -> Values:
        """The t-norm x * y, elementwise."""
        self.check(x)
        self.check(y)
        return _result(self._mul(np.asarray(x, float), np.asarray(y, float)))

    def residuum(self, x: Values, y: Values) -> Values:
        """The residuum x -> y = sup{z : z * x <= y}, in closed form."""
        self.check(x)
        self.check(y)
        return _result(self._residuum(np.asarray(x, float), np.asarray(y, float)))

    def residuum_oracle(self, x: float, y: float, n: int) -> float:
        """Evaluate the defining supremum on an n-point grid.

        Independent test oracle: returns max{k/n : mul(k/n, x) <= y}.  It
        under-approximates the true supremum by at most 1/n and is never
        called by production code.
        """
        if n < 1:
            raise ValueError("oracle grid needs n >= 1")
        self.check(x)
        self.check(y)
        zs = self._oracle_grid(n)
        ok = self._mul(zs, np.asarray(x, float)) <= y
        # the t-norm is monotone in z, so the admissible set is a prefix
        return float(zs[ok].max())

    def join(self, values: Iterable[float]) -> float:
        """Finite join; empty join is the bottom 0."""
        arr = np.asarray(list(values), dtype=float)
        if arr.size == 0:
            return BOTTOM
        self.check(arr)
        return float(arr.max())

    def meet(self, values: Iterable[float]) -> float:
        """Finite meet; empty meet is the top 1."""
        arr = np.asarray(list(values), dtype=float)
        if arr.size == 0:
            return UNIT
        self.check(arr)
        return float(arr.min())

    def _oracle_grid(self, n: int) -> np.ndarray:
        return np.arange(n + 1, dtype=float) / n

    def _mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _residuum(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"Quantale({self.family})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Quantale) and other.family == self.family

    def __hash__(self) -> int:
        return hash(self.family)


class _Goedel(Quantale):
    family = "goedel"

    def _mul(self, x, y):
        return np.minimum(x, y)

    def _residuum(self, x, y):
        return np.where(x <= y, 1.0, y)


class _Product(Quantale):
    family = "product"

    def _mul(self, x, y):
        return x * y

    def _residuum(self, x, y):
        # x = 0 falls under x <= y, so the quotient branch never divides by 0
        mask = x > y
        return np.where(mask, y / np.where(mask, x, 1.0), 1.0)


class _Lukasiewicz(Quantale):
    family = "lukasiewicz"

    def _mul(self, x, y):
        out = np.maximum(0.0, x + y - 1.0)
        # x + y - 1 rounds near the unit; the neutral law must be exact
        out = np.where(x == 1.0, y, out)
        return np.where(y == 1.0, x, out)

    def _residuum(self, x, y):
        # evaluated as (1 - x) + y so that the unit residuates exactly
        return np.minimum(1.0, (1.0 - x) + y)


class _Boolean(Quantale):
    """Classical two-valued logic; every operation stays inside {0, 1}."""

    family = "boolean"

    def check(self, x):
        arr = np.asarray(x, dtype=float)
        if arr.size and np.any((arr != 0.0) & (arr != 1.0)):
            raise DomainError("boolean quantale requires values in {0, 1}")

    def _mul(self, x, y):
        return np.minimum(x, y)

    def _residuum(self, x, y):
        return np.where(x <= y, 1.0, 0.0)

    def _oracle_grid(self, n):
        # the carrier has two elements; the sup ranges over them only
        return np.array([0.0, 1.0])


GOEDEL = _Goedel()
PRODUCT = _Product()
LUKASIEWICZ = _Lukasiewicz()
BOOLEAN = _Boolean()

FAMILIES = {
    q.family: q for q in (GOEDEL, PRODUCT, LUKASIEWICZ, BOOLEAN)
}


def quantale(name: str) -> Quantale:
    """Look up a family by its lowercase name as used in CLI flags and files."""
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"unknown quantale family {name!r}; expected one of {sorted(FAMILIES)}"
        ) from None
