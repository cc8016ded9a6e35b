"""Negation constraint fitting and the diagnostic reports built on it.

The central question: can a single lexical entry (M_not, v_not) make the
composition model behave like the idealized negation operator on every
word it is applied to? For a sample word ``a`` the requirements are

* value, once:   f_v(not, a) = J_mu v_a
* value, twice:  f_v(not, f_v(not, a)) = J_nu J_mu v_a
* function, once and twice: the function of the composed term stays M_a

Under the baseline model with default weights these become linear
constraints on (M_not, v_not) and the two families contradict each other:
the value rows force M_not to be the scaled partial inversion while the
function rows force M_not = 0. The joint least-squares fit therefore has a
strictly positive residual, which ``fit_negation_baseline`` exhibits. The
alpha-weighted model clears its function constraints of the Z denominator
and satisfies everything exactly with alpha_not = 0, which
``fit_negation_improved`` recovers.

Two linearizations keep the systems linear, mirroring the order of the
underlying derivation:

* The twice-negated value rows treat the inner composed term as having the
  value and function the requirements assign it (v = J_mu v_a, M = M_a),
  so the outer step contributes rows M_not (J_mu v_a) + M_a v_not =
  J_nu J_mu v_a. The function of the inner term is exactly computable
  without such a substitution, giving rows 2 M_not = 0.
* The improved fit solves the value block first, then the alpha_not rows
  (alpha_not * M_not_hat = 0 and alpha_not * M_a = 0, the Z-cleared forms)
  with the fitted matrix substituted.

Unknowns are ordered [vec(M_not) row-major, then v_not], and rows are
ordered value-before-function with samples in input order, so fits are
bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .composition import CompositionConfig, compose_tree
from .core import (
    FunctionMatrix,
    LexicalEntry,
    NegationOperator,
    SegmentLayout,
    SemanticVector,
    make_negation_matrix,
    negate_vector,
)
from .errors import DimensionError
from .lexicon import Lexicon
from .numerics import DenseMatrix, cosine, least_squares
from .treeio import ParseTree, binarize

__all__ = [
    "FitResult",
    "SampleSet",
    "fit_negation_baseline",
    "fit_negation_improved",
    "DoubleNegationReport",
    "check_double_negation",
    "ScopeInvarianceReport",
    "scope_invariance_report",
    "domain_similarity",
    "value_similarity",
    "default_demo_samples",
    "DEMO_LAYOUT",
    "DEMO_SEED",
    "DEMO_NOISE",
    "DEMO_COUNT",
]

CONSTRAINT_FAMILIES = ("both", "value", "function")

DEMO_LAYOUT = SegmentLayout(4, 2, 2)
DEMO_SEED = 0
DEMO_NOISE = 0.1
DEMO_COUNT = 50


@dataclass(frozen=True)
class FitResult:
    """Least-squares solution of a negation constraint system.

    ``residual_value`` and ``residual_function`` are the 2-norms of the
    residuals over the value and function row families;
    ``residual_total`` is their quadrature sum. ``alpha_not_hat`` is None
    for baseline fits, which have no propagation-weight unknown.
    """

    M_not_hat: FunctionMatrix
    v_not_hat: SemanticVector
    alpha_not_hat: float | None
    residual_value: float
    residual_function: float
    residual_total: float


@dataclass(frozen=True, eq=False)
class SampleSet:
    """Sample words quantified over by the constraint system.

    Every entry must have a nonzero vector and a function matrix that is
    neither the zero matrix nor the identity, so the "varies and is
    non-zero" assumption behind the derivation actually holds.
    """

    entries: tuple[LexicalEntry, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("sample set must be nonempty")
        layout = entries[0].layout
        eye = np.eye(layout.n)
        for entry in entries:
            if entry.layout != layout:
                raise DimensionError(
                    f"sample {entry.token!r} has layout {entry.layout}, "
                    f"expected {layout}"
                )
            if not np.any(entry.v.values):
                raise ValueError(f"sample {entry.token!r} has a zero vector")
            if not np.any(entry.M.entries):
                raise ValueError(f"sample {entry.token!r} has a zero function matrix")
            if np.array_equal(entry.M.entries, eye):
                raise ValueError(f"sample {entry.token!r} has the identity as function matrix")
        object.__setattr__(self, "entries", entries)

    @property
    def layout(self) -> SegmentLayout:
        return self.entries[0].layout

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def from_lexicon(cls, lex: Lexicon) -> "SampleSet":
        """Build from a lexicon's qualifying content words.

        Entries violating the sample assumptions (zero vector, zero or
        identity matrix - e.g. function-word presets) are skipped.
        """
        eye = np.eye(lex.layout.n)
        picked = [
            e
            for e in lex
            if np.any(e.v.values)
            and np.any(e.M.entries)
            and not np.array_equal(e.M.entries, eye)
        ]
        if not picked:
            raise ValueError("lexicon has no entries satisfying the sample assumptions")
        return cls(tuple(picked))


def default_demo_samples(
    count: int = DEMO_COUNT,
    layout: SegmentLayout = DEMO_LAYOUT,
    seed: int = DEMO_SEED,
    noise: float = DEMO_NOISE,
) -> SampleSet:
    """Seeded demonstration samples: v uniform in [-1, 1], M = I + noise * G.

    Draws violating the sample assumptions are redrawn (vector first, then
    matrix, each until valid), so the set is deterministic in
    (count, layout, seed, noise).
    """
    n = layout.n
    rng = np.random.default_rng(seed)
    eye = np.eye(n)
    entries = []
    for i in range(count):
        while True:
            v = rng.uniform(-1.0, 1.0, n)
            if np.any(v):
                break
        while True:
            m = eye + noise * rng.standard_normal((n, n))
            if np.any(m) and not np.array_equal(m, eye):
                break
        entries.append(
            LexicalEntry(
                f"w{i:02d}", SemanticVector(v, layout), FunctionMatrix(m, layout), 1.0
            )
        )
    return SampleSet(tuple(entries))


# ---------------------------------------------------------------------------
# constraint systems


def _check_fit_inputs(samples: SampleSet, op: NegationOperator, op2: NegationOperator):
    if op.layout != samples.layout or op2.layout != samples.layout:
        raise DimensionError(
            f"operator layouts {op.layout} / {op2.layout} do not match "
            f"sample layout {samples.layout}"
        )


def _value_blocks(
    samples: SampleSet, j_mu: np.ndarray, j_nu: np.ndarray
) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Rows for the once- and twice-negated value requirements.

    With x = [vec(M_not); v_not], the requirement M_not w + M_a v_not = t
    has design block [kron(I, w^T), M_a].
    """
    n = samples.layout.n
    eye = np.eye(n)
    rows, targets = [], []
    for entry in samples.entries:
        v_a = entry.v.values
        m_a = entry.M.entries
        once = j_mu @ v_a
        rows.append(np.hstack([np.kron(eye, v_a[None, :]), m_a]))
        targets.append(once)
        rows.append(np.hstack([np.kron(eye, once[None, :]), m_a]))
        targets.append(j_nu @ once)
    return rows, targets


def _function_blocks_baseline(samples: SampleSet) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Rows forcing M_not = 0 (once) and 2 M_not = 0 (twice), per sample."""
    n = samples.layout.n
    single = np.hstack([np.eye(n * n), np.zeros((n * n, n))])
    double = np.hstack([2.0 * np.eye(n * n), np.zeros((n * n, n))])
    zero = np.zeros(n * n)
    rows, targets = [], []
    for _ in samples.entries:
        rows.append(single)
        targets.append(zero)
        rows.append(double)
        targets.append(zero)
    return rows, targets


def _solve(
    rows: list[np.ndarray], targets: list[np.ndarray], n_value_rows: int
) -> tuple[np.ndarray, float, float, float]:
    design = DenseMatrix(np.vstack(rows))
    b = np.concatenate(targets)
    x, _ = least_squares(design, b)
    residual = design.data @ x - b
    res_value = float(np.linalg.norm(residual[:n_value_rows]))
    res_function = float(np.linalg.norm(residual[n_value_rows:]))
    return x, res_value, res_function, float(np.linalg.norm(residual))


def fit_negation_baseline(
    samples: SampleSet,
    op: NegationOperator,
    op2: NegationOperator,
    constraints: str = "both",
) -> FitResult:
    """Joint least-squares fit of (M_not, v_not) under the baseline model.

    ``constraints`` selects which requirement families enter the system:
    "value", "function", or "both" (default). With both active the system
    is inconsistent for any valid layout, so the residual is strictly
    positive: there is no baseline entry that negates every sample and
    leaves every sample's function alone.
    """
    if constraints not in CONSTRAINT_FAMILIES:
        raise ValueError(
            f"constraints must be one of {CONSTRAINT_FAMILIES}, got {constraints!r}"
        )
    _check_fit_inputs(samples, op, op2)
    layout = samples.layout
    n = layout.n
    j_mu = make_negation_matrix(op).entries
    j_nu = make_negation_matrix(op2).entries

    rows: list[np.ndarray] = []
    targets: list[np.ndarray] = []
    n_value_rows = 0
    if constraints in ("both", "value"):
        value_rows, value_targets = _value_blocks(samples, j_mu, j_nu)
        rows += value_rows
        targets += value_targets
        n_value_rows = sum(block.shape[0] for block in value_rows)
    if constraints in ("both", "function"):
        fn_rows, fn_targets = _function_blocks_baseline(samples)
        rows += fn_rows
        targets += fn_targets

    x, res_value, res_function, res_total = _solve(rows, targets, n_value_rows)
    return FitResult(
        M_not_hat=FunctionMatrix(x[: n * n].reshape(n, n), layout),
        v_not_hat=SemanticVector(x[n * n :], layout),
        alpha_not_hat=None,
        residual_value=res_value,
        residual_function=res_function,
        residual_total=res_total,
    )


def fit_negation_improved(
    samples: SampleSet, op: NegationOperator, op2: NegationOperator
) -> FitResult:
    """Fit (M_not, v_not, alpha_not) under the alpha-weighted model.

    The vector rule is unchanged, so the value block is identical to the
    baseline's and is solved first. The function requirements, cleared of
    the Z denominator, reduce to alpha_not * M_not = 0 and
    alpha_not * M_a = 0; with the fitted M_not substituted they are linear
    in alpha_not and are satisfied exactly by alpha_not = 0, so the whole
    system is consistent and the total residual vanishes (up to solver
    tolerance) whenever the two operators agree.
    """
    _check_fit_inputs(samples, op, op2)
    for entry in samples.entries:
        if entry.alpha <= 0.0:
            raise ValueError(
                f"sample {entry.token!r} has alpha = {entry.alpha}; improved-model "
                "samples must have alpha > 0"
            )
    layout = samples.layout
    n = layout.n
    j_mu = make_negation_matrix(op).entries
    j_nu = make_negation_matrix(op2).entries

    value_rows, value_targets = _value_blocks(samples, j_mu, j_nu)
    n_value_rows = sum(block.shape[0] for block in value_rows)
    x, res_value, _, _ = _solve(value_rows, value_targets, n_value_rows)
    m_not_hat = x[: n * n].reshape(n, n)
    v_not_hat = x[n * n :]

    # One unknown (alpha_not); rows per sample for both Z-cleared forms.
    columns = []
    for entry in samples.entries:
        columns.append(m_not_hat.reshape(-1))
        columns.append(entry.M.entries.reshape(-1))
    design = DenseMatrix(np.concatenate(columns)[:, None])
    alpha_sol, res_function = least_squares(design, np.zeros(design.rows))
    alpha_not = float(alpha_sol[0])
    if alpha_not == 0.0:
        alpha_not = 0.0  # normalize -0.0 so reports print "0.0"

    return FitResult(
        M_not_hat=FunctionMatrix(m_not_hat, layout),
        v_not_hat=SemanticVector(v_not_hat, layout),
        alpha_not_hat=alpha_not,
        residual_value=res_value,
        residual_function=res_function,
        residual_total=math.hypot(res_value, res_function),
    )


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True, eq=False)
class DoubleNegationReport:
    """Once- and twice-negated vectors plus the properties they exhibit."""

    original: SemanticVector
    once: SemanticVector
    twice: SemanticVector
    domain_unchanged: bool
    signs_restored: bool
    diminutive: bool


def check_double_negation(
    entry: LexicalEntry, op: NegationOperator, op2: NegationOperator
) -> DoubleNegationReport:
    """Negate twice and report what happened to each segment.

    ``domain_unchanged``: domain and stable segments are bitwise identical
    across all three vectors. ``signs_restored``: the twice-negated
    inverted segment has the original signs. ``diminutive``: every nonzero
    inverted entry strictly shrank in magnitude (false at mu = nu = 1,
    where double inversion restores the vector exactly).
    """
    original = entry.v
    once = negate_vector(original, op)
    twice = negate_vector(once, op2)
    layout = original.layout
    keep = slice(0, layout.d_domain + layout.d_stable)
    domain_unchanged = np.array_equal(
        original.values[keep], once.values[keep]
    ) and np.array_equal(original.values[keep], twice.values[keep])
    orig_inv = original.values[layout.inverted_slice]
    twice_inv = twice.values[layout.inverted_slice]
    signs_restored = bool(np.all(np.sign(twice_inv) == np.sign(orig_inv)))
    nonzero = orig_inv != 0.0
    diminutive = bool(np.all(np.abs(twice_inv[nonzero]) < np.abs(orig_inv[nonzero])))
    return DoubleNegationReport(
        original=original,
        once=once,
        twice=twice,
        domain_unchanged=bool(domain_unchanged),
        signs_restored=signs_restored,
        diminutive=diminutive,
    )


@dataclass(frozen=True)
class ScopeInvarianceReport:
    """Root-matrix response to perturbing the negation word's function.

    ``delta`` is the Frobenius norm of the root-matrix difference between
    composing with M_not and with M_not + perturbation. Under the improved
    model with alpha_not = 0 the perturbation cannot leave the negation's
    own composition step and delta is 0; under the baseline default it
    propagates additively and delta equals the perturbation norm.
    """

    model: str
    delta: float
    perturbation_norm: float


def scope_invariance_report(
    tree: ParseTree,
    lexicon: Lexicon,
    cfg: CompositionConfig,
    perturbation: FunctionMatrix,
    token: str = "not",
) -> ScopeInvarianceReport:
    """Measure how far a change to the negation word's matrix travels.

    The tree is right-binarized internally, so the raw n-ary parse can be
    passed in. It must contain exactly one ``token`` leaf.
    """
    if perturbation.layout != lexicon.layout:
        raise DimensionError(
            f"perturbation layout {perturbation.layout} does not match "
            f"lexicon layout {lexicon.layout}"
        )
    not_leaves = [leaf for leaf in tree.leaves() if leaf.token == token]
    if len(not_leaves) != 1:
        raise ValueError(
            f"tree must contain exactly one {token!r} leaf, found {len(not_leaves)}"
        )
    binary = binarize(tree)
    base_entry = lexicon[token]
    root = compose_tree(binary, lexicon, cfg)
    perturbed_entry = LexicalEntry(
        base_entry.token,
        base_entry.v,
        FunctionMatrix(base_entry.M.entries + perturbation.entries, lexicon.layout),
        base_entry.alpha,
    )
    root_perturbed = compose_tree(binary, lexicon.with_entry(perturbed_entry), cfg)
    delta = float(np.linalg.norm(root_perturbed.M.entries - root.M.entries))
    return ScopeInvarianceReport(
        model=cfg.model,
        delta=delta,
        perturbation_norm=float(np.linalg.norm(perturbation.entries)),
    )


# ---------------------------------------------------------------------------
# dual-space similarity


def _semantic_values(x: LexicalEntry | SemanticVector) -> tuple[np.ndarray, SegmentLayout]:
    if isinstance(x, LexicalEntry):
        return x.v.values, x.layout
    return x.values, x.layout


def domain_similarity(a: LexicalEntry | SemanticVector, b: LexicalEntry | SemanticVector) -> float:
    """Cosine over the domain segments only."""
    va, la = _semantic_values(a)
    vb, lb = _semantic_values(b)
    if la != lb:
        raise DimensionError(f"layout mismatch: {la} vs {lb}")
    return cosine(va[la.domain_slice], vb[la.domain_slice])


def value_similarity(a: LexicalEntry | SemanticVector, b: LexicalEntry | SemanticVector) -> float:
    """Cosine over the joint stable+inverted (value) segments."""
    va, la = _semantic_values(a)
    vb, lb = _semantic_values(b)
    if la != lb:
        raise DimensionError(f"layout mismatch: {la} vs {lb}")
    return cosine(va[la.d_domain :], vb[la.d_domain :])
