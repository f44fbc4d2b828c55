import io
import random

import pytest

from segdisc import SENTINEL, PhonemeMode, default_inventory, new_tables

EVENT_SPACE = 51  # 50 phonemes plus the sentinel


def test_uniform_initialization():
    t = new_tables()
    assert t.stats() == (0, 0, 0, 0, 0, 0)
    assert len(t.phonemes) == EVENT_SPACE
    assert t.phoneme_total == EVENT_SPACE
    assert t.phoneme_freq(SENTINEL) == 1 / EVENT_SPACE
    freqs = {t.phoneme_freq(p) for p in t.phonemes}
    assert freqs == {1 / EVENT_SPACE}


def test_commit_counts_two_words():
    t = new_tables()
    t.commit(["D&m", "brItIS"])
    assert t.n1 == 2 and t.s1 == 2
    assert t.bigrams == {("D&m", "brItIS"): 1}
    assert t.n2 == 1 and t.s2 == 1
    assert t.trigrams == {} and t.n3 == 0 and t.s3 == 0


def test_commit_counts_triples():
    t = new_tables()
    t.commit(["a", "b", "i", "u"])
    assert t.n1 == 4 and t.s1 == 4
    assert t.n2 == 3 and t.s2 == 3
    assert t.trigrams == {("a", "b", "i"): 1, ("b", "i", "u"): 1}
    assert t.n3 == 2 and t.s3 == 2


def test_ngrams_do_not_span_utterances():
    t = new_tables()
    t.commit(["a", "b"])
    t.commit(["b", "a"])
    assert ("b", "b") not in t.bigrams  # would only exist across the boundary
    assert t.bigrams == {("a", "b"): 1, ("b", "a"): 1}


def test_lexicon_mode_counts_phonemes_once():
    t = new_tables()
    t.commit(["tu"], PhonemeMode.LEXICON)
    t.commit(["tu"], PhonemeMode.LEXICON)
    assert t.phonemes["t"] == 2
    assert t.phonemes["u"] == 2
    assert t.phonemes[SENTINEL] == 2
    assert t.phoneme_total == EVENT_SPACE + 3


def test_speech_mode_counts_every_token():
    t = new_tables()
    t.commit(["tu"], PhonemeMode.SPEECH)
    t.commit(["tu"], PhonemeMode.SPEECH)
    assert t.phonemes["t"] == 3
    assert t.phonemes["u"] == 3
    assert t.phonemes[SENTINEL] == 3
    assert t.phoneme_total == EVENT_SPACE + 6


def test_uniform_mode_never_updates():
    t = new_tables()
    t.commit(["tu", "mi"], PhonemeMode.UNIFORM)
    assert t.phoneme_total == EVENT_SPACE
    assert t.phonemes["t"] == 1


def test_repeated_word_within_utterance_lexicon_mode():
    t = new_tables()
    t.commit(["tu", "tu"], PhonemeMode.LEXICON)
    # second token is already familiar by the time it is seen
    assert t.phonemes["t"] == 2
    assert t.n1 == 1 and t.s1 == 2


def test_damn_british_state_stats():
    t = new_tables()
    t.commit(["D&mbrItIS"])
    for _ in range(2):
        t.commit(["D&m"])
    for _ in range(7):
        t.commit(["brItIS"])
    n1, n2, n3, s1, s2, s3 = t.stats()
    assert (n1, s1) == (3, 10)
    assert n2 == s2 == n3 == s3 == 0


def test_commit_rejects_empty():
    t = new_tables()
    with pytest.raises(ValueError):
        t.commit([])


def test_reference_corpus_commit_totals(sample_corpus):
    t = new_tables()
    for utterance in sample_corpus:
        t.commit(utterance.words)
    assert t.s1 == sample_corpus.word_count
    assert t.n1 == len(sample_corpus.lexicon())
    assert t.s2 == sum(max(len(u.words) - 1, 0) for u in sample_corpus)


def test_lexicon_mode_phoneme_total_identity():
    rng = random.Random(11)
    symbols = default_inventory().symbols
    t = new_tables()
    for _ in range(40):
        words = ["".join(rng.choices(symbols, k=rng.randint(1, 5)))
                 for _ in range(rng.randint(1, 4))]
        t.commit(words, PhonemeMode.LEXICON)
    expected = EVENT_SPACE + sum(len(w) + 1 for w in t.unigrams)
    assert t.phoneme_total == expected


def _recount(t):
    return (len(t.unigrams), len(t.bigrams), len(t.trigrams),
            sum(t.unigrams.values()), sum(t.bigrams.values()), sum(t.trigrams.values()))


def test_cached_aggregates_match_recount():
    rng = random.Random(7)
    pool = ["a", "b", "ab", "ba", "tu", "mi", "lUk"]
    t = new_tables()
    for _ in range(200):
        words = rng.choices(pool, k=rng.randint(1, 6))
        t.commit(words, rng.choice(list(PhonemeMode)))
        assert t.phoneme_total == sum(t.phonemes.values())
    n1, n2, n3, s1, s2, s3 = t.stats()
    assert (n1, n2, n3, s1, s2, s3) == _recount(t)
    assert s1 >= n1 and s2 >= n2 and s3 >= n3


def test_commit_order_independent_for_unigrams_and_phonemes():
    utterances = [["tu", "mi"], ["lUk"], ["tu"], ["mi", "mi", "tu"]]
    forward = new_tables()
    for words in utterances:
        forward.commit(words, PhonemeMode.SPEECH)
    backward = new_tables()
    for words in reversed(utterances):
        backward.commit(words, PhonemeMode.SPEECH)
    assert forward.unigrams == backward.unigrams
    assert forward.phonemes == backward.phonemes
    assert forward.bigrams == backward.bigrams
    assert forward.trigrams == backward.trigrams


def test_dump_format():
    t = new_tables()
    t.commit(["tu", "mi"])
    buffer = io.StringIO()
    t.dump(buffer)
    lines = buffer.getvalue().splitlines()
    assert "unigram\ttu\t1" in lines
    assert "bigram\ttu mi\t1" in lines
    assert "phoneme\t<end>\t3" in lines
    assert all(len(line.split("\t")) == 3 for line in lines)
