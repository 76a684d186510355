"""Layers, dimension-checked sequential networks, and the forward pass.

A layer pairs an affine transition matrix (weights plus a trailing bias
column) with a mutability mask and an activation.  Networks are ordered
layer lists; composition is concatenation and the empty list is the
identity on its dimension.  Dimensions are validated at construction so
an ill-typed network is unrepresentable.

The mask never participates in the forward pass; it only decides which
entries a gradient update may touch.  A masked-off entry with a nonzero
weight is a frozen connection, a masked-off zero entry is no connection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .activation import Activation, act_map
from .algebra import Mat, ShapeError, Vec, kleisli_apply

BoolRow = tuple[bool, ...]
BoolMat = tuple[BoolRow, ...]


def full_mask(out_dim: int, in_dim: int) -> BoolMat:
    return tuple((True,) * in_dim for _ in range(out_dim))


@dataclass(frozen=True)
class Layer:
    """One network stage: transition matrix, mutability mask, activation.

    `transition` is out_dim x (in_dim + 1); its last column is the bias.
    `mask` covers the weight columns only; bias mutability is tracked
    separately per output node.  Both default to fully mutable.
    """

    transition: Mat
    activation: Activation
    mask: BoolMat | None = None
    bias_mutable: BoolRow | None = None

    def __post_init__(self) -> None:
        if self.transition.cols < 1:
            raise ShapeError("transition matrix needs at least a bias column")
        k, n = self.out_dim, self.in_dim
        mask = full_mask(k, n) if self.mask is None else tuple(
            tuple(bool(v) for v in row) for row in self.mask
        )
        bias_mutable = (
            (True,) * k
            if self.bias_mutable is None
            else tuple(bool(v) for v in self.bias_mutable)
        )
        if len(mask) != k or any(len(r) != n for r in mask):
            raise ShapeError(f"mask must be {k}x{n} to match transition {k}x{n + 1}")
        if len(bias_mutable) != k:
            raise ShapeError(f"bias_mutable must have length {k}, got {len(bias_mutable)}")
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "bias_mutable", bias_mutable)

    @property
    def in_dim(self) -> int:
        return self.transition.cols - 1

    @property
    def out_dim(self) -> int:
        return self.transition.rows


def make_layer(
    weights: Sequence[Sequence[float]],
    bias: Sequence[float],
    activation: Activation,
    mask: BoolMat | None = None,
    bias_mutable: BoolRow | None = None,
    in_dim: int | None = None,
) -> Layer:
    """Assemble a layer from separate weight rows and a bias vector.

    `in_dim` is only consulted when there are no rows to read it from.
    """
    rows = [
        tuple(float(v) for v in w) + (float(b),)
        for w, b in zip(weights, bias, strict=True)
    ]
    if rows:
        transition = Mat.from_rows(rows)
    else:
        transition = Mat(0, (in_dim or 0) + 1, ())
    return Layer(transition, activation, mask, bias_mutable)


@dataclass(frozen=True)
class Network:
    """A dimension-compatible layer sequence from in_dim to out_dim."""

    layers: tuple[Layer, ...]
    in_dim: int
    out_dim: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "layers", tuple(self.layers))
        if not self.layers:
            if self.in_dim != self.out_dim:
                raise ShapeError(
                    f"empty network must have equal dims, got {self.in_dim}->{self.out_dim}"
                )
            return
        if self.layers[0].in_dim != self.in_dim:
            raise ShapeError(
                f"first layer expects {self.layers[0].in_dim} inputs, "
                f"network declares {self.in_dim}"
            )
        for pos, (cur, nxt) in enumerate(zip(self.layers, self.layers[1:])):
            if cur.out_dim != nxt.in_dim:
                raise ShapeError(
                    f"layer {pos} emits {cur.out_dim} values but layer {pos + 1} "
                    f"expects {nxt.in_dim}"
                )
        if self.layers[-1].out_dim != self.out_dim:
            raise ShapeError(
                f"last layer emits {self.layers[-1].out_dim}, network declares {self.out_dim}"
            )

    @classmethod
    def chain(cls, layers: Sequence[Layer]) -> "Network":
        """Network from a non-empty layer sequence, dims read off the ends."""
        layers = tuple(layers)
        if not layers:
            raise ShapeError("cannot infer dimensions of an empty network; use identity_net")
        return cls(layers, layers[0].in_dim, layers[-1].out_dim)


def identity_net(n: int) -> Network:
    """The empty network on n nodes; forwards states unchanged."""
    return Network((), n, n)


def layer_forward(layer: Layer, x: Vec) -> Vec:
    """One forward step: activation applied to the affine transition."""
    return act_map(layer.activation, kleisli_apply(layer.transition, x))


def net_forward(net: Network, x: Vec) -> Vec:
    """Left fold of layer_forward; the empty network returns x unchanged."""
    if len(x) != net.in_dim:
        raise ShapeError(f"network expects {net.in_dim} inputs, got {len(x)}")
    state = x
    for layer in net.layers:
        state = layer_forward(layer, state)
    return state


def compose(first: Network, second: Network) -> Network:
    """Concatenate layer lists; `first` runs before `second`."""
    if first.out_dim != second.in_dim:
        raise ShapeError(
            f"cannot compose {first.in_dim}->{first.out_dim} with "
            f"{second.in_dim}->{second.out_dim}"
        )
    return Network(first.layers + second.layers, first.in_dim, second.out_dim)
