"""Built-in demo: the classic two-layer worked example from Matt Mazur's
step-by-step backpropagation walkthrough (with biases updated too).

The network, input, target and rate are embedded, as are the values the
run must reproduce: both forward states and both updated transition
matrices, to 8 decimals.  The command recomputes everything, flags each
value against the embedded constant, and fails if any differ.
"""

from __future__ import annotations

import sys
from typing import TextIO

from .backprop import backprop_step
from .loss import LossPredicate, squared_error
from .network import Network, make_layer
from .activation import SIGMOID

INPUT = (0.05, 0.1)
TARGET = (0.01, 0.99)
RATE = 0.5

FIRST_WEIGHTS = ((0.15, 0.2), (0.25, 0.3))
FIRST_BIAS = (0.35, 0.35)
SECOND_WEIGHTS = ((0.4, 0.45), (0.5, 0.55))
SECOND_BIAS = (0.6, 0.6)

# Values the run must reproduce, to within CHECK_TOLERANCE each.
GOLDEN = {
    "hidden": (0.59326999, 0.59688438),
    "output": (0.75136507, 0.77292847),
    "updated first": (
        (0.14978072, 0.19956143, 0.34561432),
        (0.24975114, 0.29950229, 0.34502287),
    ),
    "updated second": (
        (0.35891648, 0.40866619, 0.53075072),
        (0.51130127, 0.56137012, 0.61904912),
    ),
}
CHECK_TOLERANCE = 1e-8


def mazur_network() -> Network:
    return Network.chain(
        [
            make_layer(FIRST_WEIGHTS, FIRST_BIAS, SIGMOID),
            make_layer(SECOND_WEIGHTS, SECOND_BIAS, SIGMOID),
        ]
    )


def mazur_loss() -> LossPredicate:
    return squared_error(TARGET, RATE)


def _flag_vector(out: TextIO, label: str, got, want) -> bool:
    ok = True
    for i, (g, w) in enumerate(zip(got, want)):
        match = abs(g - w) <= CHECK_TOLERANCE
        ok &= match
        out.write(
            f"{label}[{i}]  {g:.8f}  expected {w:.8f}  "
            f"{'ok' if match else 'MISMATCH'}\n"
        )
    return ok


def run_demo(out: TextIO | None = None) -> int:
    """Recompute the worked example and check every embedded constant.

    Returns 0 when all values match, 1 otherwise.
    """
    out = out or sys.stdout
    net = mazur_network()
    loss = mazur_loss()

    updated, trace = backprop_step(net, INPUT, loss)
    hidden, output = trace.states[1], trace.states[2]

    out.write(f"two-layer sigmoid network, input {INPUT}, target {TARGET}, rate {RATE}\n")
    ok = _flag_vector(out, "hidden state", hidden, GOLDEN["hidden"])
    ok &= _flag_vector(out, "output state", output, GOLDEN["output"])

    out.write("gradients (rate folded into the loss):\n")
    for name, grad in zip(("first", "second"), trace.gradients):
        for row in grad.matrix.to_rows():
            out.write(f"  grad {name}  " + "  ".join(f"{v:.8f}" for v in row) + "\n")

    for name, layer in zip(("updated first", "updated second"), updated.layers):
        for j, row in enumerate(layer.transition.to_rows()):
            ok &= _flag_vector(out, f"{name}[{j}]", row, GOLDEN[name][j])

    out.write("result: all values match\n" if ok else "result: MISMATCH against embedded constants\n")
    return 0 if ok else 1
