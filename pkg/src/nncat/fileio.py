"""File formats: JSON network files, flat CSV datasets, loss traces.

Network files are a single JSON document because masks, biases and
activation tags need nesting; weights round-trip bitwise since JSON
serialization uses shortest-round-trip decimal literals.  Datasets stay
headerless CSV, n input columns then k target columns, with n and k
supplied by the network in use.  Trace files are "step,loss" rows with
the loss fixed at 8 decimals.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Sequence

from .activation import activation_from_tag
from .algebra import Vec
from .network import Layer, Network, identity_net, make_layer


class FileFormatError(ValueError):
    """A network or dataset file does not match the expected format."""


def network_to_json(net: Network) -> dict:
    layers = []
    for layer in net.layers:
        t = layer.transition
        n = layer.in_dim
        layers.append(
            {
                "weights": [list(t.row(j)[:n]) for j in range(t.rows)],
                "bias": [t[j, n] for j in range(t.rows)],
                "mask": [list(row) for row in layer.mask],
                "bias_mutable": list(layer.bias_mutable),
                "activation": layer.activation.tag,
            }
        )
    return {"in_dim": net.in_dim, "layers": layers}


def serialize_network(net: Network) -> str:
    """Deterministic JSON text for a network; parse undoes it bitwise."""
    return json.dumps(network_to_json(net), indent=2, sort_keys=True) + "\n"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FileFormatError(message)


def network_from_json(doc: object) -> Network:
    _require(isinstance(doc, dict), "top level must be a JSON object")
    assert isinstance(doc, dict)
    raw_layers = doc.get("layers")
    _require(isinstance(raw_layers, list), 'missing or invalid "layers" array')
    declared = doc.get("in_dim")
    if declared is not None:
        _require(
            isinstance(declared, int) and not isinstance(declared, bool) and declared >= 0,
            '"in_dim" must be a count',
        )
    if not raw_layers:
        _require(declared is not None, 'empty "layers" needs an explicit "in_dim"')
        return identity_net(declared)

    layers: list[Layer] = []
    prev_dim = declared
    for pos, entry in enumerate(raw_layers):
        where = f"layer {pos}"
        _require(isinstance(entry, dict), f"{where}: must be an object")
        weights = entry.get("weights")
        bias = entry.get("bias")
        _require(isinstance(weights, list), f'{where}: missing "weights"')
        _require(isinstance(bias, list), f'{where}: missing "bias"')
        _require(
            len(weights) == len(bias),
            f"{where}: {len(weights)} weight rows vs {len(bias)} bias entries",
        )
        for row in weights:
            _require(isinstance(row, list), f"{where}: weight rows must be arrays")
        if weights:
            n = len(weights[0])
        elif prev_dim is not None:
            n = prev_dim
        else:
            raise FileFormatError(f"{where}: zero-row weights need a declared in_dim")
        if prev_dim is not None and n != prev_dim:
            raise FileFormatError(
                f"{where}: expects {n} inputs but previous stage provides {prev_dim}"
            )
        for value in bias + [v for row in weights for v in row]:
            _require(
                isinstance(value, (int, float))
                and not isinstance(value, bool)
                and math.isfinite(value),
                f"{where}: entries must be finite numbers",
            )
        tag = entry.get("activation")
        _require(isinstance(tag, str), f'{where}: missing "activation" tag')
        try:
            activation = activation_from_tag(tag)
        except ValueError as exc:
            raise FileFormatError(f"{where}: {exc}") from None

        mask = entry.get("mask")
        if mask is not None:
            _require(
                isinstance(mask, list)
                and len(mask) == len(bias)
                and all(
                    isinstance(row, list)
                    and len(row) == n
                    and all(isinstance(v, bool) for v in row)
                    for row in mask
                ),
                f"{where}: mask must be a {len(bias)}x{n} boolean array",
            )
            mask = tuple(tuple(row) for row in mask)
        bias_mutable = entry.get("bias_mutable")
        if bias_mutable is not None:
            _require(
                isinstance(bias_mutable, list)
                and len(bias_mutable) == len(bias)
                and all(isinstance(v, bool) for v in bias_mutable),
                f"{where}: bias_mutable must be a length-{len(bias)} boolean array",
            )
            bias_mutable = tuple(bias_mutable)

        try:
            layers.append(make_layer(weights, bias, activation, mask, bias_mutable, in_dim=n))
        except ValueError as exc:
            raise FileFormatError(f"{where}: {exc}") from None
        prev_dim = len(bias)

    try:
        return Network.chain(layers)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from None


def parse_network(text: str) -> Network:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from None
    return network_from_json(doc)


def read_network(path: str | Path) -> Network:
    try:
        return parse_network(Path(path).read_text())
    except FileFormatError as exc:
        raise FileFormatError(f"{path}: {exc}") from None


def write_network(path: str | Path, net: Network) -> None:
    Path(path).write_text(serialize_network(net))


def parse_vector(text: str) -> Vec:
    """Comma-separated decimal literals -> vector; rejects non-finite."""
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    out = []
    for pos, part in enumerate(parts):
        try:
            value = float(part)
        except ValueError:
            raise FileFormatError(f"entry {pos} is not a number: {part!r}") from None
        if not math.isfinite(value):
            raise FileFormatError(f"entry {pos} is not finite: {part!r}")
        out.append(value)
    return tuple(out)


def read_dataset(path: str | Path, in_dim: int, out_dim: int) -> list[tuple[Vec, Vec]]:
    """Parse CSV rows of in_dim inputs followed by out_dim targets."""
    rows: list[tuple[Vec, Vec]] = []
    width = in_dim + out_dim
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            values = parse_vector(line)
        except FileFormatError as exc:
            raise FileFormatError(f"{path}:{lineno}: {exc}") from None
        if len(values) != width:
            raise FileFormatError(
                f"{path}:{lineno}: expected {width} values "
                f"({in_dim} inputs + {out_dim} targets), got {len(values)}"
            )
        rows.append((values[:in_dim], values[in_dim:]))
    return rows


def write_trace(path: str | Path, losses: Sequence[float]) -> None:
    """Rows "step,loss", step counting from 1, loss at 8 decimals."""
    lines = [f"{step},{value:.8f}" for step, value in enumerate(losses, start=1)]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))
