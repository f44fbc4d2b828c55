"""Lexicon, n-gram and phoneme frequency tables.

The unigram table doubles as the lexicon.  Aggregate counts (distinct keys
and count sums per order) are maintained incrementally so they are free to
read.  Phoneme counts start from one pseudo-count on every symbol
including the end-of-word sentinel, which keeps every relative frequency
positive from the first utterance on; the uniform mode simply leaves them
there.
"""

from __future__ import annotations

from enum import Enum

from .phoneme import SENTINEL, PhonemeInventory, default_inventory


class PhonemeMode(str, Enum):
    """How phoneme frequencies are learned from committed words.

    UNIFORM: never updated; frequencies stay at their initial uniform
        values.
    LEXICON: a word's phonemes (plus one sentinel) are counted once, when
        the word first enters the lexicon.
    SPEECH: every committed word token contributes its phonemes (plus one
        sentinel), familiar or not.
    """

    UNIFORM = "uniform"
    LEXICON = "lexicon"
    SPEECH = "speech"


class CountTables:
    """Unigram/bigram/trigram/phoneme counts with cached aggregates.

    An instance is owned by a single learning run; nothing here is safe
    for concurrent mutation.
    """

    __slots__ = ("inventory", "unigrams", "bigrams", "trigrams", "phonemes",
                 "phoneme_total", "n1", "n2", "n3", "s1", "s2", "s3")

    def __init__(self, inventory: PhonemeInventory | None = None):
        if inventory is None:
            inventory = default_inventory()
        self.inventory = inventory
        self.unigrams: dict[str, int] = {}
        self.bigrams: dict[tuple[str, str], int] = {}
        self.trigrams: dict[tuple[str, str, str], int] = {}
        self.phonemes: dict[str, int] = {ch: 1 for ch in inventory.symbols}
        self.phonemes[SENTINEL] = 1
        self.phoneme_total = len(self.phonemes)
        self.n1 = self.n2 = self.n3 = 0
        self.s1 = self.s2 = self.s3 = 0

    def commit(self, words, mode: PhonemeMode = PhonemeMode.LEXICON) -> None:
        """Learn one utterance's words.

        Every token bumps its unigram count; adjacent pairs and triples
        bump bigram and trigram counts.  N-grams never span utterance
        boundaries.  Phoneme counts move according to `mode`.
        """
        words = tuple(words)
        if not words:
            raise ValueError("cannot commit an empty segmentation")
        unigrams = self.unigrams
        novel = []
        for w in words:
            count = unigrams.get(w, 0)
            if count == 0:
                self.n1 += 1
                novel.append(w)
            unigrams[w] = count + 1
        self.s1 += len(words)
        if len(words) >= 2:
            bigrams = self.bigrams
            for pair in zip(words, words[1:]):
                count = bigrams.get(pair, 0)
                if count == 0:
                    self.n2 += 1
                bigrams[pair] = count + 1
            self.s2 += len(words) - 1
        if len(words) >= 3:
            trigrams = self.trigrams
            for triple in zip(words, words[1:], words[2:]):
                count = trigrams.get(triple, 0)
                if count == 0:
                    self.n3 += 1
                trigrams[triple] = count + 1
            self.s3 += len(words) - 2
        if mode is PhonemeMode.LEXICON:
            for w in novel:
                self._count_phonemes(w)
        elif mode is PhonemeMode.SPEECH:
            for w in words:
                self._count_phonemes(w)

    def _count_phonemes(self, word: str) -> None:
        phonemes = self.phonemes
        for ch in word:
            phonemes[ch] += 1
        phonemes[SENTINEL] += 1
        self.phoneme_total += len(word) + 1

    def phoneme_freq(self, symbol: str) -> float:
        """Relative frequency f of a phoneme or of the sentinel."""
        return self.phonemes[symbol] / self.phoneme_total

    def stats(self) -> tuple[int, int, int, int, int, int]:
        """(N1, N2, N3, S1, S2, S3): distinct keys and count sums per order."""
        return (self.n1, self.n2, self.n3, self.s1, self.s2, self.s3)

    def dump(self, stream) -> None:
        """Debug dump, one `kind<TAB>key<TAB>count` line per entry."""
        for w, c in sorted(self.unigrams.items()):
            stream.write(f"unigram\t{w}\t{c}\n")
        for (a, b), c in sorted(self.bigrams.items()):
            stream.write(f"bigram\t{a} {b}\t{c}\n")
        for (a, b, w), c in sorted(self.trigrams.items()):
            stream.write(f"trigram\t{a} {b} {w}\t{c}\n")
        for p, c in sorted(self.phonemes.items()):
            stream.write(f"phoneme\t{'<end>' if p == SENTINEL else p}\t{c}\n")


def new_tables(inventory: PhonemeInventory | None = None) -> CountTables:
    """Fresh tables: empty n-gram counts, uniform phoneme pseudo-counts."""
    return CountTables(inventory)
