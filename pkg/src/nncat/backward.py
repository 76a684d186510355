"""Backward-pass primitives: erosion transformation, layer gradients,
masked updates.

The central quantity is the per-layer error signal: the output erosion
weighted by the activation slope at each pre-activation.  A layer's
gradient is the outer product of that signal with the layer input
(extended by 1 for the bias), which makes single-layer gradients rank
one by construction.  Pushing the signal through the layer's weight
columns turns an output erosion into an input erosion, which is what a
multi-layer backward sweep iterates.

Updates subtract the gradient only at mutable positions; frozen entries
are returned untouched, bit for bit, so arithmetic cannot perturb them.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import partial
from typing import TYPE_CHECKING, Callable

from .algebra import Mat, ShapeError, Vec, hadamard, kleisli_apply, outer, vec_mat, weights_part
from .activation import act_deriv_map
from .network import Layer, Network, layer_forward

if TYPE_CHECKING:
    from .loss import LossPredicate

ErosionFn = Callable[[Vec], Vec]


@dataclass(frozen=True)
class Gradient:
    """A gradient with the same shape as a layer's transition matrix.

    The last column is the bias gradient.  Analytic single-layer
    gradients have rank one: every column is the bias column scaled by
    the corresponding input coordinate.
    """

    matrix: Mat


def _check_layer_input(layer: Layer, a: Vec) -> None:
    if len(a) != layer.in_dim:
        raise ShapeError(f"layer expects {layer.in_dim} inputs, got {len(a)}")


def _erosion_vector_generic(layer: Layer, a: Vec, e_out: Vec) -> Vec:
    """Error signal via the activation derivative at the pre-activation."""
    z = kleisli_apply(layer.transition, a)
    return hadamard(e_out, act_deriv_map(layer.activation, z))


def layer_erosion_vector(layer: Layer, a: Vec, e_out: Vec) -> Vec:
    """Per-output error signal for a layer at input `a`.

    `e_out` must be the output loss's erosion already evaluated at the
    layer's output.  For sigmoid layers the activation slope is recovered
    from the output itself (y * (1 - y)) instead of re-deriving it, the
    usual shortcut; both routes agree to well below 1e-12.
    """
    _check_layer_input(layer, a)
    if len(e_out) != layer.out_dim:
        raise ShapeError(f"erosion has length {len(e_out)}, layer emits {layer.out_dim}")
    if layer.activation.tag == "sigmoid":
        y = layer_forward(layer, a)
        return hadamard(hadamard(e_out, y), tuple(1.0 - v for v in y))
    return _erosion_vector_generic(layer, a, e_out)


def layer_gradient(layer: Layer, a: Vec, loss: "LossPredicate") -> Gradient:
    """Gradient of (loss after this layer) in the transition matrix.

    Outer product of the error signal with (a, 1); the trailing 1 routes
    the signal into the bias column.
    """
    _check_layer_input(layer, a)
    if loss.dim != layer.out_dim:
        raise ShapeError(f"loss of dimension {loss.dim} vs layer output {layer.out_dim}")
    e_out = loss.erosion(layer_forward(layer, a))
    s = layer_erosion_vector(layer, a, e_out)
    return Gradient(outer(s, a + (1.0,)))


def erosion_transform_layer(layer: Layer, erosion: ErosionFn, x: Vec) -> Vec:
    """Turn an erosion on the layer's outputs into one on its inputs.

    The error signal at x is pushed through the weight columns (the bias
    column does not depend on the input and drops out).
    """
    _check_layer_input(layer, x)
    e_out = erosion(layer_forward(layer, x))
    s = layer_erosion_vector(layer, x, e_out)
    return vec_mat(s, weights_part(layer.transition))


def erosion_transform_net(net: Network, erosion: ErosionFn, x: Vec) -> Vec:
    """Erosion transformation through a whole network, output to input.

    Folds erosion_transform_layer from the last layer to the first; the
    empty network applies the erosion directly.  Forward states are
    recomputed from x, so the result is a pure function of (net, x).
    """
    if len(x) != net.in_dim:
        raise ShapeError(f"network expects {net.in_dim} inputs, got {len(x)}")
    fn = erosion
    for layer in reversed(net.layers):
        fn = partial(erosion_transform_layer, layer, fn)
    return fn(x)


def masked_update(layer: Layer, g: Gradient) -> Layer:
    """Subtract the gradient at mutable positions; freeze the rest.

    Frozen entries are copied bitwise rather than updated with a zeroed
    gradient, so no arithmetic (signed zeros, rounding) can touch them.
    """
    t = layer.transition
    m = g.matrix
    if (m.rows, m.cols) != (t.rows, t.cols):
        raise ShapeError(
            f"gradient is {m.rows}x{m.cols}, transition is {t.rows}x{t.cols}"
        )
    n = layer.in_dim
    new_entries = []
    for j in range(t.rows):
        base = j * t.cols
        row_mask = layer.mask[j]
        for i in range(n):
            old = t.entries[base + i]
            new_entries.append(old - m.entries[base + i] if row_mask[i] else old)
        old_bias = t.entries[base + n]
        new_entries.append(
            old_bias - m.entries[base + n] if layer.bias_mutable[j] else old_bias
        )
    return replace(layer, transition=Mat(t.rows, t.cols, tuple(new_entries)))
