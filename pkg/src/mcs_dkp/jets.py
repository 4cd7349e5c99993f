"""First-order forward-mode jets for tensor fields on three coordinates.

A :class:`Jet` carries a tensor value and its gradient with the derivative
index first: ``grad[k, ...] = d_k value``.  :func:`contract` is ``np.einsum``
extended by the product rule, which is all that bilinear and trilinear field
expressions need.
"""
from __future__ import annotations

import dataclasses
import string

import numpy as np


@dataclasses.dataclass(frozen=True)
class Jet:
    value: np.ndarray
    grad: np.ndarray

    def __post_init__(self):
        value = np.asarray(self.value, dtype=complex)
        grad = np.asarray(self.grad, dtype=complex)
        if grad.shape != (3,) + value.shape:
            raise ValueError(f"gradient shape {grad.shape} does not match value shape {value.shape}")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "grad", grad)

    @classmethod
    def constant(cls, value) -> "Jet":
        value = np.asarray(value, dtype=complex)
        return cls(value, np.zeros((3,) + value.shape, dtype=complex))

    @property
    def shape(self) -> tuple:
        return self.value.shape

    def __add__(self, other) -> "Jet":
        other = _as_jet(other)
        return Jet(self.value + other.value, self.grad + other.grad)

    __radd__ = __add__

    def __sub__(self, other) -> "Jet":
        other = _as_jet(other)
        return Jet(self.value - other.value, self.grad - other.grad)

    def __rsub__(self, other) -> "Jet":
        return _as_jet(other) - self

    def __neg__(self) -> "Jet":
        return Jet(-self.value, -self.grad)

    def __mul__(self, c) -> "Jet":
        if isinstance(c, Jet):
            return NotImplemented  # products go through contract()
        return Jet(self.value * c, self.grad * c)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Jet":
        return Jet(self.value / c, self.grad / c)

    def transpose(self, *axes) -> "Jet":
        axes = axes or tuple(reversed(range(self.value.ndim)))
        return Jet(self.value.transpose(axes), self.grad.transpose((0,) + tuple(a + 1 for a in axes)))

    def divergence(self, axis: int = 0) -> np.ndarray:
        """Contract the derivative index with value axis ``axis``."""
        return np.trace(self.grad, axis1=0, axis2=axis + 1)


def _as_jet(x) -> Jet:
    return x if isinstance(x, Jet) else Jet.constant(x)


def contract(subscripts: str, *ops) -> Jet:
    """``np.einsum`` over jets and constant arrays, differentiated by Leibniz' rule."""
    if "->" not in subscripts:
        raise ValueError("subscripts need an explicit output ('->')")
    lhs, out = subscripts.split("->")
    inputs = lhs.split(",")
    if len(inputs) != len(ops):
        raise ValueError("number of operands does not match subscripts")
    free = [c for c in string.ascii_letters if c not in subscripts]
    d = free[0]
    values = [op.value if isinstance(op, Jet) else np.asarray(op) for op in ops]
    value = np.einsum(subscripts, *values)
    grad = np.zeros((3,) + np.shape(value), dtype=complex)
    for i, op in enumerate(ops):
        if not isinstance(op, Jet):
            continue
        terms = [(d + s if j == i else s) for j, s in enumerate(inputs)]
        args = [op.grad if j == i else v for j, v in enumerate(values)]
        grad = grad + np.einsum(",".join(terms) + "->" + d + out, *args)
    return Jet(value, grad)
