import random

import pytest

from nncat.activation import IDENTITY, SIGMOID
from nncat.algebra import Mat, ShapeError
from nncat.network import (
    Layer,
    Network,
    compose,
    full_mask,
    identity_net,
    layer_forward,
    make_layer,
    net_forward,
)
from nncat.randnet import random_network, random_state

from helpers import (
    FIRST_BIAS,
    FIRST_WEIGHTS,
    GOLD_HIDDEN,
    GOLD_OUTPUT,
    SECOND_BIAS,
    SECOND_WEIGHTS,
    TOL8,
    mazur_network,
)


class TestLayerConstruction:
    def test_dims_read_from_transition(self):
        layer = make_layer(FIRST_WEIGHTS, FIRST_BIAS, SIGMOID)
        assert (layer.in_dim, layer.out_dim) == (2, 2)
        assert layer.mask == full_mask(2, 2)
        assert layer.bias_mutable == (True, True)

    def test_mask_shape_checked(self):
        with pytest.raises(ShapeError, match="mask"):
            make_layer(FIRST_WEIGHTS, FIRST_BIAS, SIGMOID, mask=((True,),))

    def test_bias_mutable_length_checked(self):
        with pytest.raises(ShapeError, match="bias_mutable"):
            make_layer(FIRST_WEIGHTS, FIRST_BIAS, SIGMOID, bias_mutable=(True,))

    def test_transition_needs_bias_column(self):
        with pytest.raises(ShapeError):
            Layer(Mat(2, 0, ()), SIGMOID)

    def test_weights_bias_row_mismatch(self):
        with pytest.raises(ValueError):
            make_layer(FIRST_WEIGHTS, (0.35,), SIGMOID)

    def test_zero_output_layer(self):
        layer = make_layer([], [], SIGMOID, in_dim=3)
        assert (layer.in_dim, layer.out_dim) == (3, 0)

    def test_zero_input_layer(self):
        layer = make_layer([(), ()], (0.5, -0.5), IDENTITY)
        assert (layer.in_dim, layer.out_dim) == (0, 2)


class TestNetworkConstruction:
    def test_chain_reads_end_dims(self):
        net = mazur_network()
        assert (net.in_dim, net.out_dim) == (2, 2)
        assert len(net.layers) == 2

    def test_incompatible_layers_rejected(self):
        wide = make_layer([(1.0, 2.0, 3.0)], (0.0,), SIGMOID)  # 3 -> 1
        with pytest.raises(ShapeError, match="layer 0"):
            Network.chain([mazur_network().layers[0], wide])

    def test_declared_dims_checked(self):
        layer = make_layer(FIRST_WEIGHTS, FIRST_BIAS, SIGMOID)
        with pytest.raises(ShapeError):
            Network((layer,), 3, 2)
        with pytest.raises(ShapeError):
            Network((layer,), 2, 3)

    def test_empty_needs_equal_dims(self):
        with pytest.raises(ShapeError):
            Network((), 2, 3)

    def test_chain_rejects_empty(self):
        with pytest.raises(ShapeError):
            Network.chain([])


class TestLayerForward:
    def test_worked_example_first_layer(self):
        layer = make_layer(FIRST_WEIGHTS, FIRST_BIAS, SIGMOID)
        assert layer_forward(layer, (0.05, 0.1)) == pytest.approx(GOLD_HIDDEN, abs=TOL8)

    def test_worked_example_second_layer(self):
        layer = make_layer(SECOND_WEIGHTS, SECOND_BIAS, SIGMOID)
        assert layer_forward(layer, GOLD_HIDDEN) == pytest.approx(GOLD_OUTPUT, abs=TOL8)

    def test_identity_layer_passthrough(self):
        layer = make_layer(((1.0, 0.0), (0.0, 1.0)), (0.0, 0.0), IDENTITY)
        x = (3.25, -1.5)
        assert layer_forward(layer, x) == x

    def test_wrong_input_length(self):
        layer = make_layer(FIRST_WEIGHTS, FIRST_BIAS, SIGMOID)
        with pytest.raises(ShapeError):
            layer_forward(layer, (1.0, 2.0, 3.0))

    def test_output_length_is_out_dim(self):
        rng = random.Random(6006)
        for _ in range(20):
            net = random_network(rng, rng.randint(1, 4), rng.randint(1, 4))
            for layer in net.layers:
                out = layer_forward(layer, random_state(rng, layer.in_dim))
                assert len(out) == layer.out_dim

    def test_degenerate_widths(self):
        collapse = make_layer([], [], SIGMOID, in_dim=2)  # 2 -> 0
        assert layer_forward(collapse, (1.0, 2.0)) == ()
        expand = make_layer([(), ()], (0.0, 1.0), IDENTITY)  # 0 -> 2
        assert layer_forward(expand, ()) == (0.0, 1.0)


class TestNetForward:
    def test_worked_example_network(self):
        assert net_forward(mazur_network(), (0.05, 0.1)) == pytest.approx(
            GOLD_OUTPUT, abs=TOL8
        )

    def test_empty_network_is_identity(self):
        x = (1.0, -2.0, 0.5)
        assert net_forward(identity_net(3), x) == x

    def test_functor_law_bitwise(self):
        rng = random.Random(7007)
        for _ in range(30):
            mid = rng.randint(1, 4)
            first = random_network(rng, rng.randint(1, 4), mid)
            second = random_network(rng, mid, rng.randint(1, 4))
            x = random_state(rng, first.in_dim)
            assert net_forward(compose(first, second), x) == net_forward(
                second, net_forward(first, x)
            )

    def test_mask_never_read_by_forward(self):
        layer = make_layer(FIRST_WEIGHTS, FIRST_BIAS, SIGMOID)
        frozen = make_layer(
            FIRST_WEIGHTS,
            FIRST_BIAS,
            SIGMOID,
            mask=((False, False), (False, False)),
            bias_mutable=(False, False),
        )
        x = (0.05, 0.1)
        assert layer_forward(layer, x) == layer_forward(frozen, x)


class TestCompose:
    def test_worked_example_shape(self):
        first = Network.chain([make_layer(FIRST_WEIGHTS, FIRST_BIAS, SIGMOID)])
        second = Network.chain([make_layer(SECOND_WEIGHTS, SECOND_BIAS, SIGMOID)])
        assert compose(first, second).layers == mazur_network().layers

    def test_identity_laws(self):
        net = mazur_network()
        assert compose(identity_net(2), net) == net
        assert compose(net, identity_net(2)) == net

    def test_associativity(self):
        rng = random.Random(8008)
        for _ in range(10):
            a = random_network(rng, 2, 3)
            b = random_network(rng, 3, 2)
            c = random_network(rng, 2, 4)
            assert compose(compose(a, b), c) == compose(a, compose(b, c))

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            compose(random_network(random.Random(0), 2, 3), identity_net(2))


class TestIdentityNet:
    def test_forward(self):
        x = (1.0, 2.0, 3.0, 4.0)
        assert net_forward(identity_net(4), x) == x

    def test_composes_to_itself(self):
        assert compose(identity_net(2), identity_net(2)) == identity_net(2)

    def test_zero_dimension(self):
        assert net_forward(identity_net(0), ()) == ()
