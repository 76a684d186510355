"""One backward-propagation training step over a whole network, and a
deterministic single-example SGD loop on top of it.

The step runs one forward sweep, caching every intermediate state, then
one backward sweep that turns the output erosion into per-layer error
signals and gradients, reusing each signal to build the erosion one
stage earlier.  All gradients are taken against the original weights;
updates are applied only after the sweep, so the updated network is a
function of (network, input, loss) alone.  That discipline is what makes
the step compose: stepping a concatenated network equals concatenating
the steps of its parts against the appropriately pulled-back losses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import ShapeError, Vec, outer, vec_mat, weights_part
from .backward import Gradient, layer_erosion_vector, masked_update
from .loss import LossPredicate, squared_error, transform_loss, validity
from .network import Network, compose, net_forward, layer_forward


@dataclass(frozen=True)
class BackpropTrace:
    """Intermediates of one step: states a_0..a_m, erosion vectors
    e_0..e_m (e_m at the output, e_0 at the input), and one gradient per
    layer."""

    states: tuple[Vec, ...]
    erosions: tuple[Vec, ...]
    gradients: tuple[Gradient, ...]


@dataclass(frozen=True)
class SgdConfig:
    """Loop bounds for train(); rows are visited in file order, no
    shuffling, one update per row."""

    epochs: int

    def __post_init__(self) -> None:
        if self.epochs < 0:
            raise ValueError(f"epochs must be >= 0, got {self.epochs}")


def backprop_step(
    net: Network, a: Vec, loss: LossPredicate
) -> tuple[Network, BackpropTrace]:
    """Apply one gradient update to every layer of the network.

    Forward sweep caches states; backward sweep computes each layer's
    error signal against the pre-update weights, records its gradient,
    and pushes the erosion one stage back.  Masked updates happen last.
    """
    if len(a) != net.in_dim:
        raise ShapeError(f"network expects {net.in_dim} inputs, got {len(a)}")
    if loss.dim != net.out_dim:
        raise ShapeError(f"loss of dimension {loss.dim} vs network output {net.out_dim}")

    states = [a]
    for layer in net.layers:
        states.append(layer_forward(layer, states[-1]))

    e = loss.erosion(states[-1])
    erosions = [e]
    grads_rev: list[Gradient] = []
    updated_rev = []
    for idx in range(len(net.layers) - 1, -1, -1):
        layer = net.layers[idx]
        s = layer_erosion_vector(layer, states[idx], e)
        g = Gradient(outer(s, states[idx] + (1.0,)))
        grads_rev.append(g)
        updated_rev.append(masked_update(layer, g))
        e = vec_mat(s, weights_part(layer.transition))
        erosions.append(e)

    trace = BackpropTrace(
        tuple(states), tuple(reversed(erosions)), tuple(reversed(grads_rev))
    )
    new_net = Network(tuple(reversed(updated_rev)), net.in_dim, net.out_dim)
    return new_net, trace


def functoriality_check(
    first: Network,
    second: Network,
    a: Vec,
    loss: LossPredicate,
    tol: float = 1e-12,
) -> bool:
    """Does stepping the composite equal composing the two steps?

    The left step of the pair sees the loss pulled back through the
    right part; the right step sees the state forwarded through the left
    part.  True iff every updated transition entry matches within tol
    and masks/activations are identical.
    """
    whole, _ = backprop_step(compose(first, second), a, loss)
    left, _ = backprop_step(first, a, transform_loss(second, loss))
    right, _ = backprop_step(second, net_forward(first, a), loss)
    split = compose(left, right)

    for got, want in zip(whole.layers, split.layers, strict=True):
        if got.activation != want.activation:
            return False
        if got.mask != want.mask or got.bias_mutable != want.bias_mutable:
            return False
        for x, y in zip(got.transition.entries, want.transition.entries):
            if abs(x - y) > tol:
                return False
    return True


def train(
    net: Network,
    dataset: Sequence[tuple[Vec, Vec]],
    rate: float,
    cfg: SgdConfig,
) -> tuple[Network, list[float]]:
    """Run single-example gradient steps over the dataset, epoch by epoch.

    Each row (input, target) builds a squared-error loss with the rate
    folded in; the loss of the current network on the row is recorded
    before its update applies.  Deterministic: fixed order, no shuffling.
    """
    if not dataset:
        raise ValueError("dataset is empty")
    if not rate > 0.0:
        raise ValueError(f"learning rate must be > 0, got {rate!r}")
    for row, (x, t) in enumerate(dataset):
        if len(x) != net.in_dim or len(t) != net.out_dim:
            raise ShapeError(
                f"row {row}: expected {net.in_dim} inputs and {net.out_dim} targets, "
                f"got {len(x)} and {len(t)}"
            )

    losses: list[float] = []
    for _ in range(cfg.epochs):
        for x, t in dataset:
            loss = squared_error(t, rate)
            net, trace = backprop_step(net, x, loss)
            losses.append(validity(trace.states[-1], loss))
    return net, losses
