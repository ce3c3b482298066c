"""Interfaces shared by the scalar fields and the tableau families."""

from abc import ABC, abstractmethod
from typing import Any


class ScalarField(ABC):
    """Interface for a coefficient field of the diagram algebras.

    Implementations wrap a sympy domain and expose the distinguished
    scalars q, Q together with the quantum integers built from them.
    """

    name: str

    @property
    @abstractmethod
    def zero(self) -> Any:
        """Additive identity."""

    @property
    @abstractmethod
    def one(self) -> Any:
        """Multiplicative identity."""

    @property
    @abstractmethod
    def q(self) -> Any:
        """The Hecke parameter q."""

    @property
    @abstractmethod
    def Q(self) -> Any:
        """The blob parameter Q (equal to q^m after specialization)."""

    @property
    @abstractmethod
    def is_generic(self) -> bool:
        """True for the rational function field, False after specialization."""

    @abstractmethod
    def from_int(self, numerator: int, denominator: int = 1) -> Any:
        """Embed a rational number.

        Args:
            numerator: Numerator
            denominator: Nonzero denominator

        Returns:
            The rational as a field element
        """

    @abstractmethod
    def is_zero(self, x: Any) -> bool:
        """Exact zero test."""

    @abstractmethod
    def format(self, x: Any) -> str:
        """Render a scalar in the text serialization format."""

    def gauss(self, k: int) -> Any:
        """Quantum integer [k] = q^{k-1} + q^{k-3} + ... + q^{-k+1}.

        Negative k gives [k] = -[-k].
        """
        if k < 0:
            return -self.gauss(-k)
        total = self.zero
        for j in range(k):
            total = total + self.q ** (k - 1 - 2 * j)
        return total

    def quantum_m(self) -> Any:
        """[m] = (Q - Q^-1)/(q - q^-1)."""
        return (self.Q - self.Q**-1) / (self.q - self.q**-1)

    def blob_parameter(self) -> Any:
        """y_e = -[m-1]/[m], the value of a decorated loop."""
        q, Q = self.q, self.Q
        return -(Q * q**-1 - Q**-1 * q) / (Q - Q**-1)

    def loop_value(self) -> Any:
        """-[2], the value of an undecorated loop."""
        return -(self.q + self.q**-1)

    def equal(self, x: Any, y: Any) -> bool:
        """Exact equality of two scalars."""
        return self.is_zero(x - y)


class WalkTableau(ABC):
    """A standard tableau encoded by a walk on the Bratteli diagram.

    Both one-line bitableaux (walks on the integers) and two-column
    tableaux (walks on the nonnegative integers) implement this, which
    lets the hook-move machinery be shared.
    """

    @property
    @abstractmethod
    def n(self) -> int:
        """Number of entries."""

    @property
    @abstractmethod
    def sequence(self) -> tuple[int, ...]:
        """Walk values t(0), ..., t(n)."""

    @abstractmethod
    def swap(self, k: int) -> "WalkTableau":
        """Tableau obtained by exchanging the entries k and k+1."""

    @abstractmethod
    def initial(self) -> "WalkTableau":
        """The maximal tableau of the same shape."""
