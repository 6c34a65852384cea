# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from abc import ABC, abstractmethod
import random
import typing as ty


class AbstractField(ABC):
    """
    Abstract coefficient field. Every exact algorithm in permod (rank,
    determinant, null space, submodule closure, polynomial arithmetic) is
    written against this interface, so finite fields, the rationals and
    cyclotomic fields can be swapped freely.

    Elements of a field are value objects supporting +, -, *, /, unary -,
    == and truth testing (an element is falsy iff it is zero).

    """
    @property
    @abstractmethod
    def characteristic(self) -> int:
        """Returns the characteristic of the field (0 for number fields)"""
        pass

    @property
    def order(self) -> ty.Optional[int]:
        """Returns the number of elements, or None for infinite fields"""
        return None

    @abstractmethod
    def zero(self) -> ty.Any:
        pass

    @abstractmethod
    def one(self) -> ty.Any:
        pass

    @abstractmethod
    def from_int(self, n: int) -> ty.Any:
        """Returns the image of the integer n in the field"""
        pass

    @abstractmethod
    def random_element(self, rng: random.Random) -> ty.Any:
        """Returns a pseudo-random element drawn with <rng>"""
        pass

    def is_zero(self, x: ty.Any) -> bool:
        return not x

    def inverse(self, x: ty.Any) -> ty.Any:
        """Returns the multiplicative inverse of a nonzero element"""
        if self.is_zero(x):
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.one() / x

    def coerce(self, x: ty.Any) -> ty.Any:
        """Converts integers into field elements, leaves elements as is"""
        if isinstance(x, int):
            return self.from_int(x)
        return x

    def elements(self) -> ty.Iterator[ty.Any]:
        """Iterates over all elements in canonical order (finite fields)"""
        raise NotImplementedError(f"{self} is not a finite field")

    def nonzero_random_element(self, rng: random.Random) -> ty.Any:
        x = self.random_element(rng)
        while self.is_zero(x):
            x = self.random_element(rng)
        return x
