"""Reference corpora: loading, permutation and train/test splitting.

A corpus file is plain text, one utterance per line, words separated by
exactly one space, every character drawn from the phoneme alphabet.  The
same file serves as the segmentation reference; the unsegmented input
stream is recovered by deleting the spaces.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .phoneme import PhonemeInventory, default_inventory, parse_utterance


class CorpusError(ValueError):
    """A malformed corpus line, with its 1-based line number."""

    def __init__(self, line_no: int, reason: object):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


@dataclass(frozen=True)
class Utterance:
    """Reference word sequence plus the boundary-free phoneme stream."""

    words: tuple[str, ...]
    raw: str

    @classmethod
    def from_words(cls, words) -> "Utterance":
        words = tuple(words)
        return cls(words, "".join(words))


@dataclass(frozen=True)
class Corpus:
    utterances: tuple[Utterance, ...]

    def __len__(self) -> int:
        return len(self.utterances)

    def __iter__(self):
        return iter(self.utterances)

    def __getitem__(self, index) -> Utterance:
        return self.utterances[index]

    @property
    def word_count(self) -> int:
        return sum(len(u.words) for u in self.utterances)

    @property
    def char_count(self) -> int:
        """Size counting one space between words and one newline per line."""
        return sum(len(u.raw) + len(u.words) for u in self.utterances)

    def lexicon(self) -> set[str]:
        """All distinct reference words."""
        out: set[str] = set()
        for u in self.utterances:
            out.update(u.words)
        return out


@dataclass(frozen=True)
class SplitPlan:
    """Training fraction plus the seeding of an averaged experiment."""

    train_fraction: float
    seed: int = 0
    runs: int = 1


def load_corpus(path, inventory: PhonemeInventory | None = None) -> Corpus:
    """Read a reference corpus, preserving utterance order.

    Empty lines are rejected rather than skipped so that transcription
    problems surface early.  All parse errors are wrapped in CorpusError
    with the offending line number.
    """
    if inventory is None:
        inventory = default_inventory()
    utterances = []
    with open(path, encoding="ascii") as handle:
        for line_no, line in enumerate(handle, start=1):
            try:
                words = parse_utterance(line, inventory)
            except ValueError as exc:
                raise CorpusError(line_no, exc) from exc
            utterances.append(Utterance.from_words(words))
    if not utterances:
        raise CorpusError(0, "corpus file is empty")
    return Corpus(tuple(utterances))


def save_corpus(corpus: Corpus, path) -> None:
    """Write a corpus back out in the one-utterance-per-line format."""
    with open(path, "w", encoding="ascii") as handle:
        for u in corpus.utterances:
            handle.write(" ".join(u.words) + "\n")


def permute(corpus: Corpus, seed: int) -> Corpus:
    """Deterministic Fisher-Yates shuffle of utterance order.

    Uses random.Random(seed), CPython's Mersenne Twister, whose shuffle is
    stable across platforms and versions, so a (corpus, seed) pair always
    produces the same ordering.
    """
    items = list(corpus.utterances)
    random.Random(seed).shuffle(items)
    return Corpus(tuple(items))


def split_at(corpus: Corpus, n_train: int) -> tuple[Corpus, Corpus]:
    """First n_train utterances for training, the remainder for testing."""
    if not 0 <= n_train <= len(corpus.utterances):
        raise ValueError(f"cannot reserve {n_train} of {len(corpus.utterances)} utterances")
    return (Corpus(corpus.utterances[:n_train]),
            Corpus(corpus.utterances[n_train:]))


def split(corpus: Corpus, plan: SplitPlan) -> tuple[Corpus, Corpus]:
    """Split per plan.train_fraction: floor(fraction * n) utterances train."""
    if not 0.0 <= plan.train_fraction <= 1.0:
        raise ValueError(f"train_fraction must be in [0, 1], got {plan.train_fraction}")
    return split_at(corpus, int(plan.train_fraction * len(corpus.utterances)))
