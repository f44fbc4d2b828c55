"""Word probabilities with escape-mass back-off.

At each n-gram order k the mass N_k/(N_k+S_k) is reserved for events never
seen at that order (N_k distinct events seen, S_k their total count); an
unseen event receives that escape mass times the estimate one order down.
The chain ends in a phoneme spelling model that gives positive probability
to every possible word, so every query is answerable.

The probability functions return plain floats by default; passing
exact=True switches the arithmetic to fractions.Fraction for identity
checks.  Scoring (`word_score`) always works in negative natural log units
and accumulates per phoneme, so long novel words cannot underflow.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .phoneme import SENTINEL
from .tables import CountTables


def p_sigma(tables: CountTables, word: str, exact: bool = False):
    """Spelling model: f(sentinel) * prod_j f(word[j]) / (1 - f(sentinel)).

    The sentinel factor closes each word and the division by the mass left
    over for non-sentinel symbols normalizes the distribution over all
    non-empty phoneme strings, so the total over every possible word is
    exactly one.
    """
    counts = tables.phonemes
    total = tables.phoneme_total
    sentinel = counts[SENTINEL]
    if exact:
        p = Fraction(sentinel, total - sentinel)
        for ch in word:
            p *= Fraction(counts[ch], total)
        return p
    p = sentinel / (total - sentinel)
    for ch in word:
        p *= counts[ch] / total
    return p


def p_unigram(tables: CountTables, word: str, exact: bool = False):
    """C(w)/(N1+S1) for a familiar word, else the escape mass times p_sigma.

    With nothing observed yet (N1 = S1 = 0) there is no escape discount
    and the spelling model is used directly.
    """
    count = tables.unigrams.get(word, 0)
    denom = tables.n1 + tables.s1
    if count > 0:
        return Fraction(count, denom) if exact else count / denom
    base = p_sigma(tables, word, exact)
    if denom == 0:
        return base
    escape = Fraction(tables.n1, denom) if exact else tables.n1 / denom
    return escape * base


def p_bigram(tables: CountTables, prev: str, word: str, exact: bool = False):
    """(S2/(N2+S2)) * C(prev,w)/C(prev) for a seen pair, else back off.

    The familiar branch is the pair's relative frequency given the
    conditioning word's unigram count, scaled by the non-escape mass; an
    unseen pair falls back to N2/(N2+S2) times the unigram estimate.
    """
    count = tables.bigrams.get((prev, word), 0)
    denom = tables.n2 + tables.s2
    if count > 0:
        if exact:
            return Fraction(tables.s2, denom) * Fraction(count, tables.unigrams[prev])
        return (tables.s2 / denom) * (count / tables.unigrams[prev])
    base = p_unigram(tables, word, exact)
    if denom == 0:
        return base
    escape = Fraction(tables.n2, denom) if exact else tables.n2 / denom
    return escape * base


def p_trigram(tables: CountTables, prev2: str, prev1: str, word: str,
              exact: bool = False):
    """(S3/(N3+S3)) * C(prev2,prev1,w)/C(prev2,prev1) if seen, else back off."""
    count = tables.trigrams.get((prev2, prev1, word), 0)
    denom = tables.n3 + tables.s3
    if count > 0:
        pair = tables.bigrams[(prev2, prev1)]
        if exact:
            return Fraction(tables.s3, denom) * Fraction(count, pair)
        return (tables.s3 / denom) * (count / pair)
    base = p_bigram(tables, prev1, word, exact)
    if denom == 0:
        return base
    escape = Fraction(tables.n3, denom) if exact else tables.n3 / denom
    return escape * base


def _sigma_score(tables: CountTables, word: str) -> float:
    counts = tables.phonemes
    total = tables.phoneme_total
    sentinel = counts[SENTINEL]
    score = -math.log(sentinel / (total - sentinel))
    for ch in word:
        score -= math.log(counts[ch] / total)
    return score


def _unigram_score(tables: CountTables, word: str) -> float:
    count = tables.unigrams.get(word, 0)
    denom = tables.n1 + tables.s1
    if count > 0:
        return -math.log(count / denom)
    score = _sigma_score(tables, word)
    if denom > 0:
        score -= math.log(tables.n1 / denom)
    return score


def _bigram_score(tables: CountTables, prev: str, word: str) -> float:
    count = tables.bigrams.get((prev, word), 0)
    denom = tables.n2 + tables.s2
    if count > 0:
        return -math.log(tables.s2 / denom) - math.log(count / tables.unigrams[prev])
    score = _unigram_score(tables, word)
    if denom > 0:
        score -= math.log(tables.n2 / denom)
    return score


def _trigram_score(tables: CountTables, prev2: str, prev1: str, word: str) -> float:
    count = tables.trigrams.get((prev2, prev1, word), 0)
    denom = tables.n3 + tables.s3
    if count > 0:
        return -math.log(tables.s3 / denom) - math.log(count / tables.bigrams[(prev2, prev1)])
    score = _bigram_score(tables, prev1, word)
    if denom > 0:
        score -= math.log(tables.n3 / denom)
    return score


def word_score(tables: CountTables, context, word: str, order: int) -> float:
    """Negative natural log of the word's probability under the model order.

    `context` holds the words preceding `word` in the same utterance; only
    the last order-1 are used.  At the start of an utterance fewer may be
    available and the estimate falls to the matching lower order: the first
    word is scored as a unigram, the second word of a trigram model as a
    bigram.  The result is always finite.
    """
    if order not in (1, 2, 3):
        raise ValueError(f"order must be 1, 2 or 3, got {order}")
    have = min(order - 1, len(context))
    if have >= 2:
        return _trigram_score(tables, context[-2], context[-1], word)
    if have == 1:
        return _bigram_score(tables, context[-1], word)
    return _unigram_score(tables, word)


class UtteranceScorer:
    """Cached word scores over the substrings of one utterance.

    The boundary search scores the same substrings many times with
    different contexts; this precomputes the substrings and the table
    constants, and memoizes unigram scores so the back-off chain bottoms
    out once per span.  Every result is bit-identical to the equivalent
    word_score call; the tables must not change while the scorer is alive.

    Positions are substring indices: uni(j, i) scores u[j:i] with no
    context, bi(k, j, i) scores u[j:i] after u[k:j], tri(t, k, j, i)
    scores u[j:i] after u[t:k], u[k:j].
    """

    __slots__ = ("words", "uni", "bi", "tri", "tri_all_novel", "pair_seen")

    def __init__(self, tables: CountTables, u: str):
        n = len(u)
        words = [[""] * (n + 1) for _ in range(n + 1)]
        for j in range(n):
            row = words[j]
            for i in range(j + 1, n + 1):
                row[i] = u[j:i]
        self.words = words

        log = math.log
        counts = tables.phonemes
        total = tables.phoneme_total
        sentinel = counts[SENTINEL]
        sigma_head = -log(sentinel / (total - sentinel))
        char_logs = {ch: log(counts[ch] / total) for ch in set(u)}

        unigram_counts = tables.unigrams
        denom1 = tables.n1 + tables.s1
        log_escape1 = log(tables.n1 / denom1) if denom1 > 0 else None
        uni_cache: dict[int, float] = {}

        def uni(j: int, i: int) -> float:
            key = j * (n + 1) + i
            value = uni_cache.get(key)
            if value is None:
                word = words[j][i]
                count = unigram_counts.get(word, 0)
                if count > 0:
                    value = -log(count / denom1)
                else:
                    value = sigma_head
                    for ch in word:
                        value -= char_logs[ch]
                    if log_escape1 is not None:
                        value -= log_escape1
                uni_cache[key] = value
            return value

        bigram_counts = tables.bigrams
        denom2 = tables.n2 + tables.s2
        bi_head = -log(tables.s2 / denom2) if tables.s2 > 0 else None
        log_escape2 = log(tables.n2 / denom2) if denom2 > 0 else None

        def bi(k: int, j: int, i: int) -> float:
            prev = words[k][j]
            count = bigram_counts.get((prev, words[j][i]), 0)
            if count > 0:
                return bi_head - log(count / unigram_counts[prev])
            value = uni(j, i)
            if log_escape2 is not None:
                value -= log_escape2
            return value

        trigram_counts = tables.trigrams
        denom3 = tables.n3 + tables.s3
        tri_head = -log(tables.s3 / denom3) if tables.s3 > 0 else None
        log_escape3 = log(tables.n3 / denom3) if denom3 > 0 else None

        def tri(t: int, k: int, j: int, i: int) -> float:
            count = trigram_counts.get((words[t][k], words[k][j], words[j][i]), 0)
            if count > 0:
                return tri_head - log(count / bigram_counts[(words[t][k], words[k][j])])
            value = bi(k, j, i)
            if log_escape3 is not None:
                value -= log_escape3
            return value

        def tri_all_novel(k: int, j: int, i: int) -> float:
            # tri(t, k, j, i) for any t, valid when no trigram ends in the
            # pair (u[k:j], u[j:i])
            value = bi(k, j, i)
            if log_escape3 is not None:
                value -= log_escape3
            return value

        def pair_seen(k: int, j: int, i: int) -> bool:
            # a trigram x, a, b can only have been counted alongside the
            # bigram a, b; a missing pair rules out every such trigram
            return (words[k][j], words[j][i]) in bigram_counts

        self.uni = uni
        self.bi = bi
        self.tri = tri
        self.pair_seen = pair_seen
        self.tri_all_novel = tri_all_novel
