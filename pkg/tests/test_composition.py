"""Pairwise composition (both models) and tree-driven composition."""

import numpy as np
import pytest

from tripsem.composition import (
    CompositionConfig,
    compose_baseline,
    compose_improved,
    compose_pair,
    compose_tree,
)
from tripsem.core import (
    FunctionMatrix,
    LexicalEntry,
    NegationOperator,
    SegmentLayout,
    SemanticVector,
    make_negation_matrix,
)
from tripsem.errors import (
    DegenerateWeightsError,
    DimensionError,
    TreeArityError,
    UnknownTokenError,
)
from tripsem.lexicon import Lexicon, init_random, set_function_word
from tripsem.numerics import DenseMatrix
from tripsem.treeio import ParseTree, binarize, parse_bracketed

LAY211 = SegmentLayout(2, 1, 1)
DEFAULT = CompositionConfig()


def entry(token, values, matrix, alpha=1.0, layout=LAY211):
    return LexicalEntry(
        token,
        SemanticVector(values, layout),
        FunctionMatrix(matrix, layout),
        alpha,
    )


@pytest.fixture
def not_and_blue():
    j = make_negation_matrix(NegationOperator(0.5, LAY211))
    a = LexicalEntry("not", SemanticVector.zeros(LAY211), j, 0.0)
    b = entry("blue", [1.0, 2.0, 3.0, 4.0], np.eye(4) + 0.25)
    return a, b


class TestConfig:
    def test_defaults(self):
        assert DEFAULT.model == "baseline"
        assert DEFAULT.nonlinearity == "identity"
        assert DEFAULT.W_v is None and DEFAULT.W_M is None
        assert DEFAULT.z_zero_policy == "error"

    def test_rejects_unknown_choices(self):
        with pytest.raises(ValueError):
            CompositionConfig(model="quadratic")
        with pytest.raises(ValueError):
            CompositionConfig(nonlinearity="relu")
        with pytest.raises(ValueError):
            CompositionConfig(z_zero_policy="whatever")


class TestComposeBaseline:
    def test_identity_matrices_add_vectors(self):
        a = entry("a", [1.0, 0.0, 0.0, 0.0], np.eye(4))
        b = entry("b", [0.0, 1.0, 0.0, 0.0], np.eye(4))
        p = compose_baseline(a, b, DEFAULT)
        assert p.v.values.tolist() == [1.0, 1.0, 0.0, 0.0]
        assert np.array_equal(p.M.entries, 2.0 * np.eye(4))

    def test_negation_preset_applies_j_mu(self, not_and_blue):
        a, b = not_and_blue
        p = compose_baseline(a, b, DEFAULT)
        assert p.v.values.tolist() == [1.0, 2.0, 3.0, -2.0]

    def test_negation_matrix_leaks_into_parent(self, not_and_blue):
        # additive W_M propagates J_mu beyond its own composition step
        a, b = not_and_blue
        p = compose_baseline(a, b, DEFAULT)
        assert np.array_equal(p.M.entries, a.M.entries + b.M.entries)

    def test_alpha_is_max(self):
        a = entry("a", [1.0, 0.0, 0.0, 0.0], np.eye(4), alpha=0.25)
        b = entry("b", [0.0, 1.0, 0.0, 0.0], np.eye(4), alpha=2.0)
        assert compose_baseline(a, b, DEFAULT).alpha == 2.0

    def test_layout_mismatch(self):
        a = entry("a", [1.0, 0.0, 0.0, 0.0], np.eye(4))
        other = SegmentLayout(1, 2, 1)
        b = entry("b", [1.0, 0.0, 0.0, 0.0], np.eye(4), layout=other)
        with pytest.raises(DimensionError):
            compose_baseline(a, b, DEFAULT)

    def test_wrong_model_config_rejected(self):
        a = entry("a", [1.0, 0.0, 0.0, 0.0], np.eye(4))
        with pytest.raises(ValueError):
            compose_baseline(a, a, CompositionConfig(model="improved"))

    def test_general_w_matrices_act_blockwise(self):
        rng = np.random.default_rng(0)
        a = entry("a", rng.standard_normal(4), rng.standard_normal((4, 4)))
        b = entry("b", rng.standard_normal(4), rng.standard_normal((4, 4)))
        p_blk, q_blk = rng.standard_normal((4, 4)), rng.standard_normal((4, 4))
        w = DenseMatrix(np.hstack([p_blk, q_blk]))
        cfg = CompositionConfig(W_v=w, W_M=w)
        p = compose_baseline(a, b, cfg)
        ma, mb = a.M.entries, b.M.entries
        va, vb = a.v.values, b.v.values
        np.testing.assert_allclose(
            p.v.values, p_blk @ (ma @ vb) + q_blk @ (mb @ va), rtol=1e-13
        )
        np.testing.assert_allclose(p.M.entries, p_blk @ ma + q_blk @ mb, rtol=1e-13)

    def test_bad_w_shape_rejected(self):
        a = entry("a", [1.0, 0.0, 0.0, 0.0], np.eye(4))
        with pytest.raises(DimensionError):
            compose_baseline(a, a, CompositionConfig(W_v=DenseMatrix(np.eye(4))))

    def test_tanh_contrast_bounds_the_vector(self):
        a = entry("a", [9.0, 9.0, 9.0, 9.0], np.eye(4))
        b = entry("b", [9.0, 9.0, 9.0, 9.0], np.eye(4))
        p = compose_baseline(a, b, CompositionConfig(nonlinearity="tanh-contrast"))
        assert np.all(np.abs(p.v.values) <= 1.0)
        # and the matrix path is untouched by the nonlinearity
        assert np.array_equal(p.M.entries, 2.0 * np.eye(4))


class TestComposeImproved:
    def test_zero_alpha_function_word_does_not_leak(self, not_and_blue):
        a, b = not_and_blue
        p = compose_improved(a, b, CompositionConfig(model="improved"))
        assert np.array_equal(p.M.entries, b.M.entries)  # exactly M_b

    def test_equal_alphas_average_matrices(self):
        a = entry("a", [1.0, 0.0, 0.0, 0.0], 2.0 * np.eye(4))
        b = entry("b", [0.0, 1.0, 0.0, 0.0], 4.0 * np.eye(4))
        p = compose_improved(a, b, CompositionConfig(model="improved"))
        assert np.array_equal(p.M.entries, 3.0 * np.eye(4))

    def test_weights_sum_to_exactly_one(self):
        # alpha ratios that do not divide evenly still form a partition of 1
        rng = np.random.default_rng(21)
        for _ in range(50):
            aa, ab = rng.uniform(0.01, 3.0, size=2)
            z = aa + ab
            wa = aa / z
            assert wa + (1.0 - wa) == 1.0

    def test_vector_rule_matches_baseline(self, not_and_blue):
        a, b = not_and_blue
        base = compose_baseline(a, b, DEFAULT)
        imp = compose_improved(a, b, CompositionConfig(model="improved"))
        assert np.array_equal(base.v.values, imp.v.values)

    def test_alpha_is_max(self, not_and_blue):
        a, b = not_and_blue
        p = compose_improved(a, b, CompositionConfig(model="improved"))
        assert p.alpha == 1.0

    def test_both_alphas_zero_errors_by_default(self):
        a = entry("a", [1.0, 0.0, 0.0, 0.0], np.eye(4), alpha=0.0)
        b = entry("b", [0.0, 1.0, 0.0, 0.0], np.eye(4), alpha=0.0)
        with pytest.raises(DegenerateWeightsError):
            compose_improved(a, b, CompositionConfig(model="improved"))

    def test_equal_weights_fallback(self):
        a = entry("a", [1.0, 0.0, 0.0, 0.0], 2.0 * np.eye(4), alpha=0.0)
        b = entry("b", [0.0, 1.0, 0.0, 0.0], 4.0 * np.eye(4), alpha=0.0)
        cfg = CompositionConfig(model="improved", z_zero_policy="equal-weights")
        p = compose_improved(a, b, cfg)
        assert np.array_equal(p.M.entries, 3.0 * np.eye(4))
        assert p.alpha == 0.0


def test_compose_pair_dispatches_on_model(not_and_blue):
    a, b = not_and_blue
    assert np.array_equal(
        compose_pair(a, b, DEFAULT).M.entries,
        compose_baseline(a, b, DEFAULT).M.entries,
    )
    cfg = CompositionConfig(model="improved")
    assert np.array_equal(
        compose_pair(a, b, cfg).M.entries, compose_improved(a, b, cfg).M.entries
    )


@pytest.fixture
def sentence_lexicon():
    lex = init_random(["this", "car", "is", "blue"], LAY211, seed=13, noise=0.2)
    return set_function_word(lex, "not", "negation", mu=0.5)


class TestComposeTree:
    def test_single_leaf_returns_entry(self, sentence_lexicon):
        root = compose_tree(ParseTree.leaf("N", "car"), sentence_lexicon, DEFAULT)
        assert root == sentence_lexicon["car"]

    def test_not_blue_subtree(self, sentence_lexicon):
        tree = parse_bracketed("(ADJP (RB not) (JJ blue))")
        root = compose_tree(tree, sentence_lexicon, DEFAULT)
        j_mu = make_negation_matrix(NegationOperator(0.5, LAY211)).entries
        np.testing.assert_array_equal(
            root.v.values, j_mu @ sentence_lexicon["blue"].v.values
        )

    @pytest.mark.parametrize("model", ["baseline", "improved"])
    def test_matches_hand_unrolled_sentence(self, sentence_lexicon, model):
        """Fully unrolled evaluation of the five-leaf sentence tree."""
        lex = sentence_lexicon
        cfg = CompositionConfig(model=model)
        tree = binarize(
            parse_bracketed(
                "(S (NP (Det this) (N car)) (VP (VBZ is) (RB not) (ADJP (JJ blue))))"
            )
        )
        root = compose_tree(tree, lex, cfg)

        def pair(x, y):
            ma, mb = x.M.entries, y.M.entries
            va, vb = x.v.values, y.v.values
            v = ma @ vb + mb @ va
            if model == "baseline":
                m = ma + mb
            else:
                z = x.alpha + y.alpha
                m = (x.alpha / z) * ma + (y.alpha / z) * mb
            return LexicalEntry(
                "p",
                SemanticVector(v, LAY211),
                FunctionMatrix(m, LAY211),
                max(x.alpha, y.alpha),
            )

        np_node = pair(lex["this"], lex["car"])
        not_blue = pair(lex["not"], lex["blue"])
        vp = pair(lex["is"], not_blue)
        expected = pair(np_node, vp)

        np.testing.assert_allclose(root.v.values, expected.v.values, rtol=1e-12)
        np.testing.assert_allclose(root.M.entries, expected.M.entries, rtol=1e-12)
        assert root.alpha == expected.alpha

    def test_unknown_token_named_in_error(self, sentence_lexicon):
        tree = parse_bracketed("(S (N car) (N spaceship))")
        with pytest.raises(UnknownTokenError) as err:
            compose_tree(tree, sentence_lexicon, DEFAULT)
        assert "spaceship" in str(err.value)

    def test_nonbinary_node_rejected(self, sentence_lexicon):
        tree = parse_bracketed("(S (N this) (N car) (N is))")
        with pytest.raises(TreeArityError):
            compose_tree(tree, sentence_lexicon, DEFAULT)


class TestRootMatrixPropagation:
    """How far a leaf's matrix reaches under each model."""

    def _compose(self, lex, cfg):
        tree = binarize(
            parse_bracketed(
                "(S (NP (Det this) (N car)) (VP (VBZ is) (RB not) (ADJP (JJ blue))))"
            )
        )
        return compose_tree(tree, lex, cfg)

    def test_improved_root_m_ignores_zero_alpha_leaf(self, sentence_lexicon):
        cfg = CompositionConfig(model="improved")
        base = self._compose(sentence_lexicon, cfg)
        swapped = sentence_lexicon.with_entry(
            LexicalEntry(
                "not",
                sentence_lexicon["not"].v,
                FunctionMatrix(np.random.default_rng(4).standard_normal((4, 4)), LAY211),
                0.0,
            )
        )
        other = self._compose(swapped, cfg)
        np.testing.assert_allclose(
            other.M.entries, base.M.entries, rtol=0.0, atol=1e-12
        )

    def test_baseline_root_m_shifts_by_exactly_delta(self, sentence_lexicon):
        base = self._compose(sentence_lexicon, DEFAULT)
        delta = np.random.default_rng(6).standard_normal((4, 4))
        shifted = sentence_lexicon.with_entry(
            LexicalEntry(
                "not",
                sentence_lexicon["not"].v,
                FunctionMatrix(sentence_lexicon["not"].M.entries + delta, LAY211),
                0.0,
            )
        )
        other = self._compose(shifted, DEFAULT)
        np.testing.assert_allclose(
            other.M.entries - base.M.entries, delta, rtol=0.0, atol=1e-12
        )
