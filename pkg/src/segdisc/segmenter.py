"""Boundary search and the incremental learn loop.

`segment` finds the segmentation of an unsegmented phoneme string with the
lowest total negative log probability under the configured model order,
by dynamic programming over prefix end positions.  For the bigram and
trigram models the state carries the start of the last one or two words,
since those determine every later word's conditioning context.  Utterance
lengths are small, so the O(n^2)/O(n^3)/O(n^4) cell counts are harmless.

Ties are resolved exactly as a strict `score < best` update does when the
unsplit candidate is examined first and split points are visited left to
right: at equal score the candidate keeping the whole remaining span as
one word survives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .estimator import UtteranceScorer, word_score
from .tables import CountTables, PhonemeMode

_INF = math.inf


@dataclass(frozen=True)
class Segmentation:
    """A phoneme stream with word boundaries.

    `boundaries` holds the internal split positions, strictly increasing
    and exclusive of 0 and len(phonemes); `words` is the induced tuple and
    always concatenates back to `phonemes`.
    """

    phonemes: str
    boundaries: tuple[int, ...]
    words: tuple[str, ...]

    @classmethod
    def from_words(cls, words) -> "Segmentation":
        words = tuple(words)
        if not words or any(not w for w in words):
            raise ValueError("segmentation words must be non-empty")
        phonemes = "".join(words)
        bounds = []
        pos = 0
        for w in words[:-1]:
            pos += len(w)
            bounds.append(pos)
        return cls(phonemes, tuple(bounds), words)

    @classmethod
    def from_boundaries(cls, phonemes: str, boundaries) -> "Segmentation":
        if not phonemes:
            raise ValueError("cannot segment an empty phoneme string")
        boundaries = tuple(boundaries)
        previous = 0
        for b in boundaries:
            if not previous < b < len(phonemes):
                raise ValueError(f"boundary {b} out of order for length {len(phonemes)}")
            previous = b
        edges = (0,) + boundaries + (len(phonemes),)
        words = tuple(phonemes[a:b] for a, b in zip(edges, edges[1:]))
        return cls(phonemes, boundaries, words)


@dataclass(frozen=True)
class LearnerConfig:
    order: int = 1
    phoneme_mode: PhonemeMode = PhonemeMode.LEXICON
    require_vowel: bool = False

    def __post_init__(self):
        if self.order not in (1, 2, 3):
            raise ValueError(f"order must be 1, 2 or 3, got {self.order}")


def segment(tables: CountTables, u: str, cfg: LearnerConfig) -> tuple[Segmentation, float]:
    """Best-scoring segmentation of `u` and its total score.

    The tables are only read.  With require_vowel set, words without a
    vowel are excluded from consideration; if the whole utterance has no
    vowel it is returned as a single word so the search stays feasible.
    """
    if not u:
        raise ValueError("cannot segment an empty utterance")
    allowed = None
    if cfg.require_vowel:
        is_vowel = tables.inventory.is_vowel
        vowels_before = [0]
        for ch in u:
            vowels_before.append(vowels_before[-1] + (1 if is_vowel(ch) else 0))
        if vowels_before[-1] == 0:
            return Segmentation.from_words((u,)), word_score(tables, (), u, cfg.order)

        def allowed(start: int, end: int) -> bool:
            return vowels_before[end] > vowels_before[start]

    scorer = UtteranceScorer(tables, u)
    if cfg.order == 1:
        words, score = _search_unigram(scorer, u, allowed)
    elif cfg.order == 2:
        words, score = _search_bigram(scorer, u, allowed)
    else:
        words, score = _search_trigram(scorer, u, allowed)
    return Segmentation.from_words(words), score


def _search_unigram(scorer, u, allowed):
    n = len(u)
    uni = scorer.uni
    best = [0.0] * (n + 1)
    back = [0] * (n + 1)
    for i in range(1, n + 1):
        score = uni(0, i) if allowed is None or allowed(0, i) else _INF
        split = 0
        for j in range(1, i):
            if best[j] == _INF or (allowed is not None and not allowed(j, i)):
                continue
            cand = best[j] + uni(j, i)
            if cand < score:
                score = cand
                split = j
        best[i] = score
        back[i] = split
    words = []
    i = n
    while i > 0:
        words.append(u[back[i]:i])
        i = back[i]
    words.reverse()
    return words, best[n]


def _search_bigram(scorer, u, allowed):
    n = len(u)
    uni = scorer.uni
    bi = scorer.bi
    # state[j][i]: best score for u[:i] whose last word is u[j:i];
    # j == 0 is the single-word reading, scored as a first word.
    state = [[_INF] * (n + 1) for _ in range(n)]
    back = [[-1] * (n + 1) for _ in range(n)]
    for i in range(1, n + 1):
        if allowed is None or allowed(0, i):
            state[0][i] = uni(0, i)
        for j in range(1, i):
            if allowed is not None and not allowed(j, i):
                continue
            score = _INF
            split = -1
            for k in range(j):
                prefix = state[k][j]
                if prefix == _INF:
                    continue
                cand = prefix + bi(k, j, i)
                if cand < score:
                    score = cand
                    split = k
            state[j][i] = score
            back[j][i] = split
    score = state[0][n]
    last = 0
    for j in range(1, n):
        if state[j][n] < score:
            score = state[j][n]
            last = j
    words = []
    i, j = n, last
    while j > 0:
        words.append(u[j:i])
        i, j = j, back[j][i]
    words.append(u[:i])
    words.reverse()
    return words, score


def _search_trigram(scorer, u, allowed):
    n = len(u)
    uni = scorer.uni
    bi = scorer.bi
    tri = scorer.tri
    # state[(k, j, i)]: best score for u[:i] ending in words u[k:j], u[j:i].
    # k == 0 means u[k:j] is the first word (unigram + bigram scored base).
    state: dict[tuple[int, int, int], float] = {}
    back: dict[tuple[int, int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(1, i):
            if allowed is not None and not allowed(j, i):
                continue
            if allowed is None or allowed(0, j):
                state[(0, j, i)] = uni(0, j) + bi(0, j, i)
                back[(0, j, i)] = -1
            for k in range(1, j):
                if allowed is not None and not allowed(k, j):
                    continue
                score = _INF
                split = -1
                if scorer.pair_seen(k, j, i):
                    for t in range(k):
                        prefix = state.get((t, k, j))
                        if prefix is None:
                            continue
                        cand = prefix + tri(t, k, j, i)
                        if cand < score:
                            score = cand
                            split = t
                else:
                    # no trigram ends in this word pair, so the added score
                    # is the same for every third-back word
                    added = scorer.tri_all_novel(k, j, i)
                    for t in range(k):
                        prefix = state.get((t, k, j))
                        if prefix is None:
                            continue
                        cand = prefix + added
                        if cand < score:
                            score = cand
                            split = t
                if split >= 0:
                    state[(k, j, i)] = score
                    back[(k, j, i)] = split
    score = uni(0, n) if allowed is None or allowed(0, n) else _INF
    winner = None
    for j in range(1, n):
        for k in range(j):
            cand = state.get((k, j, n))
            if cand is not None and cand < score:
                score = cand
                winner = (k, j)
    if winner is None:
        return [u], score
    k, j = winner
    words = [u[j:n]]
    i = n
    while True:
        words.append(u[k:j])
        t = back[(k, j, i)]
        if t < 0:
            break
        k, j, i = t, k, j
    words.reverse()
    return words, score


def process_utterance(tables: CountTables, u: str, cfg: LearnerConfig) -> Segmentation:
    """Segment one utterance and commit the result before moving on."""
    seg, _ = segment(tables, u, cfg)
    tables.commit(seg.words, cfg.phoneme_mode)
    return seg


def train_utterance(tables: CountTables, reference, cfg: LearnerConfig) -> None:
    """Commit a known-correct segmentation without running the search."""
    tables.commit(tuple(reference), cfg.phoneme_mode)
