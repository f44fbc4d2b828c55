"""Experiment harness and command line interface.

Every command is deterministic given its base seed: run r of an averaged
experiment permutes the corpus with seed base_seed + r.  Runs are
independent (each owns private count tables), so they can execute on a
process pool; set SEGDISC_THREADS to bound the pool (default 1, serial).
Aggregation folds run results in run-id order, so the pool size never
changes any output.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import random
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .corpus import CorpusError, load_corpus, permute, split_at
from .estimator import word_score
from .evaluation import BlockScores, random_baseline, score_blocks, score_utterance
from .segmenter import LearnerConfig, process_utterance, segment, train_utterance
from .tables import CountTables, PhonemeMode

CSV_FIELDS = ["run_id", "block_index", "utterances", "precision", "recall",
              "lexicon_precision", "model", "phoneme_mode", "train_fraction"]


@dataclass
class ExperimentSpec:
    command: str
    corpus_path: str | None = None
    order: int = 1
    runs: int = 1
    base_seed: int = 0
    block_size: int | None = None
    train_fraction: float = 0.0
    sweep_step: int = 100
    sweep_cap: float = 0.75
    phoneme_mode: PhonemeMode = PhonemeMode.LEXICON
    require_vowel: bool = False
    baseline: bool = False
    no_permute: bool = False
    lexicon_seen_only: bool = False
    out_path: str | None = None

    def learner_config(self) -> LearnerConfig:
        return LearnerConfig(self.order, self.phoneme_mode, self.require_vowel)

    def model_name(self) -> str:
        return "random" if self.baseline else f"{self.order}-gram"

    def validate(self) -> None:
        if self.runs < 1:
            raise ValueError(f"runs must be at least 1, got {self.runs}")
        if self.block_size is not None and self.block_size < 1:
            raise ValueError(f"block size must be at least 1, got {self.block_size}")
        if self.sweep_step < 1:
            raise ValueError(f"sweep step must be at least 1 utterance, got {self.sweep_step}")
        if not 0.0 <= self.train_fraction <= 1.0:
            raise ValueError(f"train fraction must be in [0, 1], got {self.train_fraction}")
        if not 0.0 <= self.sweep_cap <= 1.0:
            raise ValueError(f"sweep cap must be in [0, 1], got {self.sweep_cap}")


@dataclass(frozen=True)
class BlockSummary:
    block_index: int
    runs: int
    precision_mean: float
    precision_std: float
    recall_mean: float
    recall_std: float
    lexicon_precision_mean: float
    lexicon_precision_std: float


@dataclass(frozen=True)
class PermuteAverageResult:
    per_run: tuple[tuple[int, tuple[BlockScores, ...]], ...]
    summary: tuple[BlockSummary, ...]


@dataclass(frozen=True)
class SweepPoint:
    train_utterances: int
    train_fraction: float
    runs: int
    precision_mean: float
    precision_std: float
    recall_mean: float
    recall_std: float
    lexicon_precision_mean: float
    lexicon_precision_std: float


@dataclass(frozen=True)
class SweepResult:
    per_run: tuple[tuple[int, int, BlockScores], ...]
    points: tuple[SweepPoint, ...]
    corpus_size: int


@dataclass(frozen=True)
class Mismatch:
    index: int
    predicted: tuple[str, ...]
    target: tuple[str, ...]


@dataclass(frozen=True)
class FullyTrainedReport:
    utterances: int
    mismatches: tuple[Mismatch, ...]
    precision: float
    recall: float


@dataclass(frozen=True)
class ScenarioOutcome:
    isolated_count: int
    split: bool
    whole_neglog: float
    parts_neglog: float


@dataclass(frozen=True)
class ScenarioReport:
    outcomes: tuple[ScenarioOutcome, ...]
    first_split: int | None
    whole_neglog: float | None
    parts_neglog: float | None


@dataclass(frozen=True)
class GrowthCurve:
    source: str
    points: tuple[tuple[float, float], ...]
    k: float


@dataclass(frozen=True)
class MatrixCell:
    order: int
    phoneme_mode: str
    precision: float
    recall: float
    lexicon_precision: float


def _worker_count(n_jobs: int) -> int:
    env = os.environ.get("SEGDISC_THREADS")
    workers = int(env) if env else 1
    return max(1, min(workers, n_jobs))


def _map_jobs(fn, jobs):
    workers = _worker_count(len(jobs))
    if workers == 1:
        return [fn(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def _learn_and_score(corpus, cfg, block_size, reference_lexicon, *,
                     baseline=False, rng=None, lexicon_seen_only=False,
                     initial_lexicon=None, tables=None):
    """One incremental pass over `corpus`, scoring predictions in blocks."""
    if tables is None:
        tables = CountTables()

    def predictions():
        for utterance in corpus:
            if baseline:
                seg = random_baseline(utterance.raw, len(utterance.words) - 1, rng)
            else:
                seg = process_utterance(tables, utterance.raw, cfg)
            yield seg, utterance.words

    blocks = score_blocks(predictions(), block_size, reference_lexicon,
                          initial_lexicon=initial_lexicon,
                          seen_reference_only=lexicon_seen_only)
    return tables, blocks


def _mean_std(values) -> tuple[float, float]:
    values = list(values)
    mean = statistics.fmean(values)
    std = statistics.stdev(values) if len(values) > 1 else 0.0
    return mean, std


def _summarize_blocks(per_run) -> tuple[BlockSummary, ...]:
    by_index: dict[int, list[BlockScores]] = {}
    for _, blocks in per_run:
        for block in blocks:
            by_index.setdefault(block.block_index, []).append(block)
    summary = []
    for index in sorted(by_index):
        group = by_index[index]
        p_mean, p_std = _mean_std(b.precision for b in group)
        r_mean, r_std = _mean_std(b.recall for b in group)
        l_mean, l_std = _mean_std(b.lexicon_precision for b in group)
        summary.append(BlockSummary(index, len(group), p_mean, p_std,
                                    r_mean, r_std, l_mean, l_std))
    return tuple(summary)


def _permute_job(args):
    corpus, run_id, seed, cfg, block_size, baseline, no_permute, seen_only = args
    ordered = corpus if no_permute else permute(corpus, seed)
    rng = random.Random(seed) if baseline else None
    _, blocks = _learn_and_score(ordered, cfg, block_size, corpus.lexicon(),
                                 baseline=baseline, rng=rng,
                                 lexicon_seen_only=seen_only)
    return run_id, tuple(blocks)


def run_permute_average(spec: ExperimentSpec) -> PermuteAverageResult:
    """Incremental runs over `runs` corpus permutations, scored in blocks."""
    corpus = load_corpus(spec.corpus_path)
    cfg = spec.learner_config()
    block_size = spec.block_size or 100
    jobs = [(corpus, r, spec.base_seed + r, cfg, block_size, spec.baseline,
             spec.no_permute, spec.lexicon_seen_only)
            for r in range(spec.runs)]
    per_run = tuple(sorted(_map_jobs(_permute_job, jobs)))
    return PermuteAverageResult(per_run, _summarize_blocks(per_run))


def run_eval(spec: ExperimentSpec) -> PermuteAverageResult:
    """Single pass in corpus order; optionally reserve an initial training
    fraction whose reference segmentations are committed before testing."""
    corpus = load_corpus(spec.corpus_path)
    cfg = spec.learner_config()
    block_size = spec.block_size or 500
    n_train = int(spec.train_fraction * len(corpus))
    train, test = split_at(corpus, n_train)
    tables = CountTables()
    for utterance in train:
        train_utterance(tables, utterance.words, cfg)
    rng = random.Random(spec.base_seed) if spec.baseline else None
    _, blocks = _learn_and_score(
        test, cfg, block_size, corpus.lexicon(),
        baseline=spec.baseline, rng=rng,
        lexicon_seen_only=spec.lexicon_seen_only,
        initial_lexicon=set(tables.unigrams) if n_train else None,
        tables=tables)
    per_run = ((0, tuple(blocks)),)
    return PermuteAverageResult(per_run, _summarize_blocks(per_run))


def _sweep_job(args):
    corpus, run_id, seed, cfg, counts, seen_only = args
    ordered = permute(corpus, seed)
    reference_lexicon = corpus.lexicon()
    results = []
    for count in counts:
        train, test = split_at(ordered, count)
        tables = CountTables()
        for utterance in train:
            train_utterance(tables, utterance.words, cfg)
        _, blocks = _learn_and_score(
            test, cfg, None, reference_lexicon,
            lexicon_seen_only=seen_only,
            initial_lexicon=set(tables.unigrams) if count else None,
            tables=tables)
        results.append((count, blocks[0]))
    return run_id, results


def run_train_sweep(spec: ExperimentSpec) -> SweepResult:
    """Supervised training on growing initial segments, scored on the rest.

    Each point trains on the first `count` utterances of a permutation and
    scores the remainder as one block; points are averaged over `runs`
    permutations (seeds base_seed + r).
    """
    corpus = load_corpus(spec.corpus_path)
    cfg = spec.learner_config()
    n = len(corpus)
    cap = int(spec.sweep_cap * n)
    counts = [c for c in range(0, cap + 1, spec.sweep_step) if c < n]
    jobs = [(corpus, r, spec.base_seed + r, cfg, counts, spec.lexicon_seen_only)
            for r in range(spec.runs)]
    results = sorted(_map_jobs(_sweep_job, jobs))
    per_run = tuple((run_id, count, block)
                    for run_id, rows in results for count, block in rows)
    points = []
    for i, count in enumerate(counts):
        group = [rows[i][1] for _, rows in results]
        p_mean, p_std = _mean_std(b.precision for b in group)
        r_mean, r_std = _mean_std(b.recall for b in group)
        l_mean, l_std = _mean_std(b.lexicon_precision for b in group)
        points.append(SweepPoint(count, count / n, len(group), p_mean, p_std,
                                 r_mean, r_std, l_mean, l_std))
    return SweepResult(per_run, tuple(points), n)


def run_fully_trained(spec: ExperimentSpec) -> FullyTrainedReport:
    """Train on the reference corpus, then test on a second copy of it.

    The test copy is processed the normal incremental way (segment, then
    commit the inferred words).  Mis-segmented utterances are reported
    with their 1-based position in the corpus.
    """
    corpus = load_corpus(spec.corpus_path)
    cfg = spec.learner_config()
    tables = CountTables()
    for utterance in corpus:
        train_utterance(tables, utterance.words, cfg)
    mismatches = []
    correct = predicted = reference = 0
    for index, utterance in enumerate(corpus, start=1):
        seg = process_utterance(tables, utterance.raw, cfg)
        if seg.words != utterance.words:
            mismatches.append(Mismatch(index, seg.words, utterance.words))
        c, p, r = score_utterance(seg, utterance.words)
        correct += c
        predicted += p
        reference += r
    return FullyTrainedReport(len(corpus), tuple(mismatches),
                              100.0 * correct / predicted,
                              100.0 * correct / reference)


def run_damn_british(spec: ExperimentSpec) -> ScenarioReport:
    """How much isolated evidence does splitting a fused word take?

    For x = 1..10: present "D&mbrItIS", then "D&m" twice, then x isolated
    "brItIS" utterances, then "D&mbrItIS" again, and record whether the
    final presentation is split.  The scores reported are the unigram
    negative logs of the whole word versus the two parts at the first x
    that splits.  A split at x <= 6 would contradict the count arithmetic
    and raises RuntimeError.
    """
    cfg = spec.learner_config()
    outcomes = []
    first = whole_at_first = parts_at_first = None
    for x in range(1, 11):
        tables = CountTables()
        for utterance in ("D&mbrItIS", "D&m", "D&m") + ("brItIS",) * x:
            process_utterance(tables, utterance, cfg)
        if tables.unigrams != {"D&mbrItIS": 1, "D&m": 2, "brItIS": x}:
            raise RuntimeError(
                f"scenario lexicon diverged at x={x}: {tables.unigrams}")
        whole = word_score(tables, (), "D&mbrItIS", 1)
        parts = word_score(tables, (), "D&m", 1) + word_score(tables, (), "brItIS", 1)
        seg, _ = segment(tables, "D&mbrItIS", cfg)
        split_now = len(seg.words) > 1
        if split_now and seg.words != ("D&m", "brItIS"):
            raise RuntimeError(f"unexpected split {seg.words} at x={x}")
        outcomes.append(ScenarioOutcome(x, split_now, whole, parts))
        if split_now and first is None:
            first = x
            whole_at_first = whole
            parts_at_first = parts
    if first is None or first <= 6:
        raise RuntimeError(f"first split at x={first}, expected x > 6")
    return ScenarioReport(tuple(outcomes), first, whole_at_first, parts_at_first)


def fit_sqrt_coefficient(points) -> float:
    """Least-squares k for size = k * sqrt(tokens) through the origin."""
    numerator = sum(size * math.sqrt(tokens) for tokens, size in points)
    denominator = sum(tokens for tokens, _ in points)
    return numerator / denominator


def _growth_job(args):
    corpus, run_id, seed, cfg, no_permute = args
    ordered = corpus if no_permute else permute(corpus, seed)
    tables = CountTables()
    model_points = []
    actual_points = []
    model_tokens = actual_tokens = 0
    actual_lexicon: set[str] = set()
    for utterance in ordered:
        seg = process_utterance(tables, utterance.raw, cfg)
        model_tokens += len(seg.words)
        model_points.append((model_tokens, len(tables.unigrams)))
        actual_tokens += len(utterance.words)
        actual_lexicon.update(utterance.words)
        actual_points.append((actual_tokens, len(actual_lexicon)))
    return run_id, model_points, actual_points


def _average_curves(curves):
    averaged = []
    for index in range(len(curves[0])):
        tokens = statistics.fmean(c[index][0] for c in curves)
        size = statistics.fmean(c[index][1] for c in curves)
        averaged.append((tokens, size))
    return tuple(averaged)


def run_lexicon_growth(spec: ExperimentSpec) -> tuple[GrowthCurve, GrowthCurve]:
    """Lexicon size against word tokens processed, for the model and for
    the reference words, averaged over runs, with a k*sqrt(N) fit each."""
    corpus = load_corpus(spec.corpus_path)
    cfg = spec.learner_config()
    jobs = [(corpus, r, spec.base_seed + r, cfg, spec.no_permute)
            for r in range(spec.runs)]
    results = sorted(_map_jobs(_growth_job, jobs))
    model = _average_curves([model_points for _, model_points, _ in results])
    actual = _average_curves([actual_points for _, _, actual_points in results])
    return (GrowthCurve(f"{spec.order}-gram", model, fit_sqrt_coefficient(model)),
            GrowthCurve("actual", actual, fit_sqrt_coefficient(actual)))


def _matrix_job(args):
    corpus, order, mode, require_vowel, seen_only = args
    cfg = LearnerConfig(order, mode, require_vowel)
    _, blocks = _learn_and_score(corpus, cfg, None, corpus.lexicon(),
                                 lexicon_seen_only=seen_only)
    block = blocks[0]
    return MatrixCell(order, mode.value, block.precision, block.recall,
                      block.lexicon_precision)


def run_phoneme_mode_matrix(spec: ExperimentSpec) -> tuple[MatrixCell, ...]:
    """Whole-corpus scores for orders 1-3 crossed with the phoneme modes."""
    corpus = load_corpus(spec.corpus_path)
    jobs = [(corpus, order, mode, spec.require_vowel, spec.lexicon_seen_only)
            for order in (1, 2, 3)
            for mode in (PhonemeMode.UNIFORM, PhonemeMode.LEXICON, PhonemeMode.SPEECH)]
    return tuple(_map_jobs(_matrix_job, jobs))


def run_segment(spec: ExperimentSpec, out) -> None:
    """Incremental pass over the corpus, printing one segmentation per line."""
    corpus = load_corpus(spec.corpus_path)
    cfg = spec.learner_config()
    tables = CountTables()
    for utterance in corpus:
        seg = process_utterance(tables, utterance.raw, cfg)
        out.write(" ".join(seg.words) + "\n")


# ---------------------------------------------------------------------------
# Output formatting


def _write_metric_rows(stream, spec, per_run):
    writer = csv.writer(stream)
    writer.writerow(CSV_FIELDS)
    for run_id, blocks in per_run:
        for block in blocks:
            writer.writerow([
                run_id, block.block_index, block.utterances,
                f"{block.precision:.4f}", f"{block.recall:.4f}",
                f"{block.lexicon_precision:.4f}",
                spec.model_name(), spec.phoneme_mode.value,
                f"{spec.train_fraction:.4f}",
            ])


def _print_block_summary(stream, summary):
    stream.write("block  runs  precision          recall             lexicon-precision\n")
    for line in summary:
        stream.write(
            f"{line.block_index:>5}  {line.runs:>4}  "
            f"{line.precision_mean:6.2f} +/- {line.precision_std:5.2f}   "
            f"{line.recall_mean:6.2f} +/- {line.recall_std:5.2f}   "
            f"{line.lexicon_precision_mean:6.2f} +/- {line.lexicon_precision_std:5.2f}\n")


def _open_out(spec):
    if spec.out_path:
        handle = open(spec.out_path, "w", encoding="utf-8", newline="")
        return handle, sys.stdout, True
    return sys.stdout, sys.stderr, False


def _cmd_segment(spec):
    out, _, close = _open_out(spec)
    try:
        run_segment(spec, out)
    finally:
        if close:
            out.close()
    return 0


def _cmd_eval(spec):
    result = run_eval(spec)
    out, report, close = _open_out(spec)
    try:
        _write_metric_rows(out, spec, result.per_run)
        _print_block_summary(report, result.summary)
    finally:
        if close:
            out.close()
    return 0


def _cmd_permute_average(spec):
    result = run_permute_average(spec)
    out, report, close = _open_out(spec)
    try:
        _write_metric_rows(out, spec, result.per_run)
        _print_block_summary(report, result.summary)
    finally:
        if close:
            out.close()
    return 0


def _cmd_train_sweep(spec):
    result = run_train_sweep(spec)
    out, report, close = _open_out(spec)
    try:
        writer = csv.writer(out)
        writer.writerow(CSV_FIELDS)
        for run_id, count, block in result.per_run:
            writer.writerow([
                run_id, block.block_index, block.utterances,
                f"{block.precision:.4f}", f"{block.recall:.4f}",
                f"{block.lexicon_precision:.4f}",
                spec.model_name(), spec.phoneme_mode.value,
                f"{count / result.corpus_size:.4f}",
            ])
        report.write("train%  utts  runs  precision          recall             lexicon-precision\n")
        for point in result.points:
            report.write(
                f"{100 * point.train_fraction:5.1f}  {point.train_utterances:>5} "
                f"{point.runs:>5}  "
                f"{point.precision_mean:6.2f} +/- {point.precision_std:5.2f}   "
                f"{point.recall_mean:6.2f} +/- {point.recall_std:5.2f}   "
                f"{point.lexicon_precision_mean:6.2f} +/- {point.lexicon_precision_std:5.2f}\n")
    finally:
        if close:
            out.close()
    return 0


def _cmd_fully_trained(spec):
    result = run_fully_trained(spec)
    out, report, close = _open_out(spec)
    try:
        out.write("index\tpredicted\ttarget\n")
        for miss in result.mismatches:
            out.write(f"{miss.index}\t{' '.join(miss.predicted)}\t{' '.join(miss.target)}\n")
        report.write(
            f"{len(result.mismatches)} of {result.utterances} utterances in error; "
            f"precision {result.precision:.2f}, recall {result.recall:.2f}\n")
    finally:
        if close:
            out.close()
    return 0


def _cmd_damn_british(spec):
    result = run_damn_british(spec)
    out, _, close = _open_out(spec)
    try:
        for outcome in result.outcomes:
            verdict = "split" if outcome.split else "whole"
            out.write(
                f"x={outcome.isolated_count:>2}  {verdict:5}  "
                f"-ln P(whole) = {outcome.whole_neglog:.5f}  "
                f"-ln P(D&m) + -ln P(brItIS) = {outcome.parts_neglog:.5f}\n")
        out.write(
            f"first split at x={result.first_split}: "
            f"{result.whole_neglog:.5f} (whole) vs {result.parts_neglog:.5f} (parts)\n")
    finally:
        if close:
            out.close()
    return 0


def _cmd_lexicon_growth(spec):
    model, actual = run_lexicon_growth(spec)
    out, report, close = _open_out(spec)
    try:
        writer = csv.writer(out)
        writer.writerow(["source", "utterance_index", "tokens", "lexicon_size"])
        for curve in (actual, model):
            for index, (tokens, size) in enumerate(curve.points, start=1):
                writer.writerow([curve.source, index, f"{tokens:.2f}", f"{size:.2f}"])
        for curve in (actual, model):
            report.write(f"{curve.source}: fitted k = {curve.k:.3f} for size = k*sqrt(tokens)\n")
    finally:
        if close:
            out.close()
    return 0


def _cmd_phoneme_modes(spec):
    cells = run_phoneme_mode_matrix(spec)
    out, _, close = _open_out(spec)
    try:
        writer = csv.writer(out)
        writer.writerow(["model", "phoneme_mode", "precision", "recall", "lexicon_precision"])
        for cell in cells:
            writer.writerow([f"{cell.order}-gram", cell.phoneme_mode,
                             f"{cell.precision:.4f}", f"{cell.recall:.4f}",
                             f"{cell.lexicon_precision:.4f}"])
    finally:
        if close:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# Command line


class _Parser(argparse.ArgumentParser):
    # corpus/config problems exit 1; argparse's default usage-error code is 2,
    # which is reserved for internal assertion failures.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="segdisc",
                     description="Incremental word discovery in unsegmented phonemic utterances.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_model_args(p):
        p.add_argument("--order", type=int, choices=(1, 2, 3), default=1,
                       help="n-gram model order (default 1)")
        p.add_argument("--phoneme-mode", choices=[m.value for m in PhonemeMode],
                       default=PhonemeMode.LEXICON.value,
                       help="how phoneme frequencies are learned (default lexicon)")
        p.add_argument("--require-vowel", action="store_true",
                       help="only consider words containing a vowel")
        p.add_argument("--out", dest="out_path", metavar="PATH",
                       help="write primary output to PATH instead of stdout")

    def add_corpus_arg(p):
        p.add_argument("--corpus", dest="corpus_path", required=True, metavar="PATH",
                       help="reference corpus file, one utterance per line")

    def add_run_args(p, default_runs, default_block=None):
        p.add_argument("--runs", type=int, default=default_runs,
                       help=f"number of runs to average (default {default_runs})")
        p.add_argument("--seed", dest="base_seed", type=int, default=0,
                       help="base seed; run r uses seed+r (default 0)")
        if default_block is not None:
            p.add_argument("--block-size", type=int, default=default_block,
                           help=f"utterances per scoring block (default {default_block})")
        p.add_argument("--lexicon-seen-only", action="store_true",
                       help="audit the learned lexicon against reference words seen so far "
                            "instead of the full reference lexicon")

    p = sub.add_parser("segment", help="segment a corpus incrementally, print the result")
    add_corpus_arg(p)
    add_model_args(p)

    p = sub.add_parser("eval", help="single run in corpus order, scored in blocks")
    add_corpus_arg(p)
    add_model_args(p)
    add_run_args(p, default_runs=1, default_block=500)
    p.add_argument("--train-frac", dest="train_fraction", type=float, default=0.0,
                   help="initial corpus fraction committed as training (default 0)")
    p.add_argument("--baseline-random", dest="baseline", action="store_true",
                   help="score the boundary-count-aware random baseline instead")

    p = sub.add_parser("permute-average", help="average runs over corpus permutations")
    add_corpus_arg(p)
    add_model_args(p)
    add_run_args(p, default_runs=50, default_block=100)
    p.add_argument("--no-permute", action="store_true",
                   help="keep corpus order in every run")
    p.add_argument("--baseline-random", dest="baseline", action="store_true",
                   help="score the boundary-count-aware random baseline instead")

    p = sub.add_parser("train-sweep", help="sweep supervised training amounts")
    add_corpus_arg(p)
    add_model_args(p)
    add_run_args(p, default_runs=25)
    p.add_argument("--sweep-step", type=int, default=100,
                   help="training-set increment in utterances (default 100)")
    p.add_argument("--sweep-cap", type=float, default=0.75,
                   help="largest training fraction (default 0.75)")

    p = sub.add_parser("fully-trained",
                       help="train on the whole corpus, test on a second copy")
    add_corpus_arg(p)
    add_model_args(p)

    p = sub.add_parser("scenario-damn-british",
                       help="isolated-evidence threshold for splitting a fused word")
    add_model_args(p)

    p = sub.add_parser("lexicon-growth", help="lexicon size against tokens processed")
    add_corpus_arg(p)
    add_model_args(p)
    add_run_args(p, default_runs=1)
    p.add_argument("--no-permute", action="store_true",
                   help="keep corpus order in every run")

    p = sub.add_parser("phoneme-modes",
                       help="orders 1-3 crossed with phoneme modes, whole-corpus scores")
    add_corpus_arg(p)
    add_model_args(p)
    add_run_args(p, default_runs=1)

    return parser


_HANDLERS = {
    "segment": _cmd_segment,
    "eval": _cmd_eval,
    "permute-average": _cmd_permute_average,
    "train-sweep": _cmd_train_sweep,
    "fully-trained": _cmd_fully_trained,
    "scenario-damn-british": _cmd_damn_british,
    "lexicon-growth": _cmd_lexicon_growth,
    "phoneme-modes": _cmd_phoneme_modes,
}


def _spec_from_args(args) -> ExperimentSpec:
    values = vars(args)
    spec = ExperimentSpec(command=values["command"])
    for name in ("corpus_path", "order", "runs", "base_seed", "block_size",
                 "train_fraction", "sweep_step", "sweep_cap", "require_vowel",
                 "baseline", "no_permute", "lexicon_seen_only", "out_path"):
        if values.get(name) is not None:
            setattr(spec, name, values[name])
    if "phoneme_mode" in values:
        spec.phoneme_mode = PhonemeMode(values["phoneme_mode"])
    return spec


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    spec = _spec_from_args(args)
    try:
        spec.validate()
        return _HANDLERS[spec.command](spec)
    except (CorpusError, OSError, ValueError) as exc:
        print(f"segdisc: error: {exc}", file=sys.stderr)
        return 1
    except (AssertionError, RuntimeError) as exc:
        print(f"segdisc: internal check failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
