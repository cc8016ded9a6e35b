"""Command-line interface.

Subcommands: lexicon-init, negate, compose, sim, verify. Reports are plain
text, one ``<command> <key>: <value>`` pair per line, with floats printed
as shortest round-trip decimals (so repeated runs are byte-identical and
reports can be diffed in tests). Exit status is 0 on success, 1 when a
verify check fails, and 2 on usage errors (bad flags, missing files,
unknown words, layout mismatches), which also print a one-line
``tripsem: ...`` diagnostic to stderr.

verify checks and their pass conditions:

* ``contradiction``: joint baseline fit has residual_total above the
  solver-noise threshold (the inconsistency is the point), while the
  value-only fit recovers (J_mu, 0) and the function-only fit recovers
  M_not = 0, each within 1e-9.
* ``improved-fit``: alpha_not, the M_not error against J_mu, the v_not
  norm, and residual_total are all within 1e-9.
* ``double-negation``: domain_unchanged and signs_restored hold for every
  lexicon word, and diminutive holds for every word with a nonzero
  inverted segment (when mu_default < 1).
* ``scope --tree FILE``: with a seeded perturbation of the "not" matrix,
  the improved-model root-M delta is <= 1e-12 and the baseline delta
  equals the perturbation norm within 1e-12 relative.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .analysis import (
    SampleSet,
    check_double_negation,
    fit_negation_baseline,
    fit_negation_improved,
    scope_invariance_report,
)
from .composition import MODELS, CompositionConfig, compose_tree
from .core import (
    FunctionMatrix,
    NegationOperator,
    SegmentLayout,
    make_negation_matrix,
    negate_vector,
    split_segments,
)
from .errors import TripsemError
from .lexicon import Lexicon, init_random, load, save, set_function_word
from .treeio import binarize, parse_forest

__all__ = ["run", "main"]

VERIFY_CHECKS = ("contradiction", "improved-fit", "double-negation", "scope")

# Fit results below FIT_TOL count as exact; contradiction residuals must
# clear RESIDUAL_FLOOR, far above lstsq noise on these problem sizes.
FIT_TOL = 1e-9
RESIDUAL_FLOOR = 1e-6
SCOPE_TOL = 1e-12


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(prefix: str, key: str, value) -> None:
    print(f"{prefix} {key}: {_fmt(value)}".rstrip())


def _emit_segments(prefix: str, key: str, vector) -> None:
    names = ("domain", "stable", "inverted")
    for name, segment in zip(names, split_segments(vector)):
        joined = " ".join(repr(float(x)) for x in segment)
        _emit(prefix, f"{key}.{name}", joined)


def _parse_layout(text: str) -> SegmentLayout:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"layout must be D,S,I (three integers), got {text!r}")
    try:
        d, s, i = (int(p.strip()) for p in parts)
    except ValueError:
        raise ValueError(f"layout must be D,S,I (three integers), got {text!r}") from None
    return SegmentLayout(d, s, i)


def _read_words(path: str) -> list[str]:
    tokens = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens.append(line)
    if not tokens:
        raise ValueError(f"no words found in {path}")
    return tokens


def _read_one_tree(path: str):
    trees = parse_forest(Path(path).read_text(encoding="utf-8"))
    if len(trees) != 1:
        raise ValueError(f"{path} must contain exactly one tree, found {len(trees)}")
    return trees[0]


# ---------------------------------------------------------------------------
# subcommands


def _cmd_lexicon_init(args) -> int:
    tokens = _read_words(args.words)
    layout = _parse_layout(args.layout)
    lex = init_random(tokens, layout, args.seed, args.noise, mu_default=args.not_mu)
    lex = set_function_word(lex, "not", "negation", mu=args.not_mu)
    save(lex, args.out)
    prefix = "lexicon-init"
    _emit(prefix, "words", len(lex))
    _emit(prefix, "layout", args.layout)
    _emit(prefix, "seed", args.seed)
    _emit(prefix, "noise", float(args.noise))
    _emit(prefix, "not_mu", float(args.not_mu))
    _emit(prefix, "out", args.out)
    return 0


def _cmd_negate(args) -> int:
    lex = load(args.lexicon)
    entry = lex[args.word]
    mu = lex.mu_default if args.mu is None else args.mu
    op = NegationOperator(mu, lex.layout)
    negated = negate_vector(entry.v, op)
    prefix = "negate"
    _emit(prefix, "word", args.word)
    _emit(prefix, "mu", float(mu))
    _emit_segments(prefix, "original", entry.v)
    _emit_segments(prefix, "negated", negated)
    return 0


def _cmd_compose(args) -> int:
    lex = load(args.lexicon)
    tree = binarize(_read_one_tree(args.tree), strategy=args.binarize)
    cfg = CompositionConfig(model=args.model)
    root = compose_tree(tree, lex, cfg)
    prefix = "compose"
    _emit(prefix, "model", args.model)
    _emit(prefix, "tree", args.tree)
    _emit_segments(prefix, "root.v", root.v)
    _emit(prefix, "root.M.frobenius", root.M.frobenius_norm())
    _emit(prefix, "root.alpha", float(root.alpha))
    return 0


def _cmd_sim(args) -> int:
    from .analysis import domain_similarity, value_similarity

    lex = load(args.lexicon)
    a, b = lex[args.a], lex[args.b]
    if args.region == "domain":
        value = domain_similarity(a, b)
    elif args.region == "value":
        value = value_similarity(a, b)
    else:
        from .numerics import cosine

        value = cosine(a.v.values, b.v.values)
    prefix = "sim"
    _emit(prefix, "a", args.a)
    _emit(prefix, "b", args.b)
    _emit(prefix, "region", args.region)
    _emit(prefix, "cosine", value)
    return 0


def _verify_contradiction(lex: Lexicon, prefix: str) -> bool:
    samples = SampleSet.from_lexicon(lex)
    op = NegationOperator(lex.mu_default, lex.layout)
    j_mu = make_negation_matrix(op).entries
    joint = fit_negation_baseline(samples, op, op)
    value_only = fit_negation_baseline(samples, op, op, constraints="value")
    function_only = fit_negation_baseline(samples, op, op, constraints="function")

    value_m_error = float(np.linalg.norm(value_only.M_not_hat.entries - j_mu))
    value_v_error = float(np.linalg.norm(value_only.v_not_hat.values))
    function_m_error = float(np.linalg.norm(function_only.M_not_hat.entries))

    _emit(prefix, "samples", len(samples))
    _emit(prefix, "mu", float(lex.mu_default))
    _emit(prefix, "residual_value", joint.residual_value)
    _emit(prefix, "residual_function", joint.residual_function)
    _emit(prefix, "residual_total", joint.residual_total)
    _emit(prefix, "residual_floor", RESIDUAL_FLOOR)
    _emit(prefix, "value_only.m_error", value_m_error)
    _emit(prefix, "value_only.v_error", value_v_error)
    _emit(prefix, "value_only.residual", value_only.residual_value)
    _emit(prefix, "function_only.m_error", function_m_error)
    _emit(prefix, "function_only.residual", function_only.residual_function)
    return (
        joint.residual_total > RESIDUAL_FLOOR
        and value_m_error <= FIT_TOL
        and value_v_error <= FIT_TOL
        and value_only.residual_value <= FIT_TOL
        and function_m_error <= FIT_TOL
        and function_only.residual_function <= FIT_TOL
    )


def _verify_improved_fit(lex: Lexicon, prefix: str) -> bool:
    samples = SampleSet.from_lexicon(lex)
    op = NegationOperator(lex.mu_default, lex.layout)
    j_mu = make_negation_matrix(op).entries
    fit = fit_negation_improved(samples, op, op)
    m_error = float(np.linalg.norm(fit.M_not_hat.entries - j_mu))
    v_error = float(np.linalg.norm(fit.v_not_hat.values))
    _emit(prefix, "samples", len(samples))
    _emit(prefix, "mu", float(lex.mu_default))
    _emit(prefix, "alpha_not", fit.alpha_not_hat)
    _emit(prefix, "m_error", m_error)
    _emit(prefix, "v_error", v_error)
    _emit(prefix, "residual_total", fit.residual_total)
    _emit(prefix, "tolerance", FIT_TOL)
    return (
        abs(fit.alpha_not_hat) <= FIT_TOL
        and m_error <= FIT_TOL
        and v_error <= FIT_TOL
        and fit.residual_total <= FIT_TOL
    )


def _verify_double_negation(lex: Lexicon, prefix: str) -> bool:
    op = NegationOperator(lex.mu_default, lex.layout)
    expect_diminutive = lex.mu_default * lex.mu_default < 1.0
    all_domain, all_signs, all_dim = True, True, True
    checked_dim = 0
    for entry in lex:
        report = check_double_negation(entry, op, op)
        all_domain = all_domain and report.domain_unchanged
        all_signs = all_signs and report.signs_restored
        if np.any(entry.v.values[lex.layout.inverted_slice]):
            checked_dim += 1
            all_dim = all_dim and report.diminutive
    _emit(prefix, "mu", float(lex.mu_default))
    _emit(prefix, "nu", float(lex.mu_default))
    _emit(prefix, "words", len(lex))
    _emit(prefix, "words_with_inverted_mass", checked_dim)
    _emit(prefix, "domain_unchanged", all_domain)
    _emit(prefix, "signs_restored", all_signs)
    _emit(prefix, "diminutive", all_dim)
    return all_domain and all_signs and (all_dim or not expect_diminutive)


def _verify_scope(lex: Lexicon, tree_path: str, prefix: str) -> bool:
    tree = _read_one_tree(tree_path)
    n = lex.layout.n
    rng = np.random.default_rng(0)
    perturbation = FunctionMatrix(rng.standard_normal((n, n)), lex.layout)
    baseline = scope_invariance_report(
        tree, lex, CompositionConfig(model="baseline"), perturbation
    )
    improved = scope_invariance_report(
        tree, lex, CompositionConfig(model="improved"), perturbation
    )
    p_norm = baseline.perturbation_norm
    baseline_error = abs(baseline.delta - p_norm)
    _emit(prefix, "tree", tree_path)
    _emit(prefix, "perturbation_norm", p_norm)
    _emit(prefix, "baseline.delta", baseline.delta)
    _emit(prefix, "baseline.error", baseline_error)
    _emit(prefix, "improved.delta", improved.delta)
    _emit(prefix, "tolerance", SCOPE_TOL)
    return (
        improved.delta <= SCOPE_TOL
        and baseline_error <= SCOPE_TOL * max(1.0, p_norm)
    )


def _cmd_verify(args) -> int:
    if args.check == "scope" and args.tree is None:
        raise ValueError("verify scope requires --tree")
    lex = load(args.lexicon)
    prefix = "verify"
    _emit(prefix, "check", args.check)
    _emit(prefix, "lexicon", args.lexicon)
    if args.check == "contradiction":
        ok = _verify_contradiction(lex, prefix)
    elif args.check == "improved-fit":
        ok = _verify_improved_fit(lex, prefix)
    elif args.check == "double-negation":
        ok = _verify_double_negation(lex, prefix)
    else:
        ok = _verify_scope(lex, args.tree, prefix)
    _emit(prefix, "result", "PASS" if ok else "FAIL")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripsem",
        description="Tripartite semantic vectors: negation, composition, fitting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lexicon-init", help="write a seeded random lexicon")
    p.add_argument("--words", required=True, help="word list, one token per line")
    p.add_argument("--out", required=True, help="output lexicon path")
    p.add_argument("--layout", default="4,2,2", help="segment sizes D,S,I")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--noise", type=float, default=0.1)
    p.add_argument("--not-mu", type=float, default=0.5, dest="not_mu")
    p.set_defaults(func=_cmd_lexicon_init)

    p = sub.add_parser("negate", help="negate one word's vector")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--mu", type=float, default=None)
    p.set_defaults(func=_cmd_negate)

    p = sub.add_parser("compose", help="compose a bracketed tree bottom-up")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--tree", required=True)
    p.add_argument("--model", choices=MODELS, default="baseline")
    p.add_argument("--binarize", choices=("right", "left"), default="right")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("sim", help="cosine similarity between two words")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--region", choices=("domain", "value", "full"), default="full")
    p.set_defaults(func=_cmd_sim)

    p = sub.add_parser("verify", help="run a negation analysis check")
    p.add_argument("check", choices=VERIFY_CHECKS)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--tree", default=None, help="tree file (scope check only)")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (TripsemError, OSError, ValueError) as exc:
        print(f"tripsem: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
