import pytest
from hypothesis import given, settings, strategies as st

from serkit.core import EntityType, corpus_stats, decode_spans, validate_iob
from serkit.noiselab import (
    ChangeLog,
    NoiseSpec,
    gen_synthetic_corpus,
    inject_noise,
    label_disagreement,
    replay_changelog,
)

from helpers import corpus, sent

OS = EntityType.OPERATING_SYSTEM
APP = EntityType.APPLICATION


class TestInjectNoise:
    def test_zero_spec_is_identity(self):
        clean = gen_synthetic_corpus(40, 60, seed=1)
        noisy, log = inject_noise(clean, NoiseSpec(0.0, 0.0, 0.0, seed=9))
        assert noisy.content() == clean.content()
        assert len(log) == 0

    def test_flip_count_within_binomial_bounds(self):
        # ~1000 spans at p_type_flip=0.1: 3 sigma of Binomial(1000, 0.1)
        clean = gen_synthetic_corpus(480, 240, seed=2)
        stats = corpus_stats(clean)
        n_spans = stats.total_spans
        assert 900 <= n_spans <= 1100
        noisy, log = inject_noise(clean, NoiseSpec(0.1, 0.0, 0.0, seed=3))
        flips = sum(1 for c in log.changes if c.kind == "type_flip")
        lo = int(n_spans * 0.1 - 3 * (n_spans * 0.1 * 0.9) ** 0.5)
        hi = int(n_spans * 0.1 + 3 * (n_spans * 0.1 * 0.9) ** 0.5) + 1
        assert lo <= flips <= hi

    def test_flipped_type_always_differs(self):
        clean = gen_synthetic_corpus(300, 120, seed=4)
        _, log = inject_noise(clean, NoiseSpec(0.5, 0.0, 0.0, seed=5))
        flips = [c for c in log.changes if c.kind == "type_flip"]
        assert flips
        for change in flips:
            assert change.after.type is not change.before.type
            assert (change.after.start, change.after.end) == (
                change.before.start,
                change.before.end,
            )

    def test_deterministic_per_seed(self):
        clean = gen_synthetic_corpus(80, 60, seed=6)
        spec = NoiseSpec(0.2, 0.2, 0.2, seed=7)
        a, log_a = inject_noise(clean, spec)
        b, log_b = inject_noise(clean, spec)
        assert a.content() == b.content()
        assert log_a == log_b

    @given(
        flip=st.floats(0, 0.5),
        drop=st.floats(0, 0.5),
        spurious=st.floats(0, 1),
        seed=st.integers(0, 50),
    )
    @settings(max_examples=25, deadline=None)
    def test_output_always_iob_valid_and_same_shape(self, flip, drop, spurious, seed):
        clean = gen_synthetic_corpus(30, 60, seed=8)
        noisy, _ = inject_noise(clean, NoiseSpec(flip, drop, spurious, seed=seed))
        assert len(noisy) == len(clean)
        for s_clean, s_noisy in zip(clean, noisy):
            assert s_noisy.surfaces == s_clean.surfaces
            assert validate_iob(s_noisy.labels) == []

    def test_invalid_probabilities_rejected(self):
        with pytest.raises(ValueError):
            NoiseSpec(p_type_flip=0.7, p_drop=0.5)
        with pytest.raises(ValueError):
            NoiseSpec(p_type_flip=-0.1)

    def test_spurious_spans_appear(self):
        clean = gen_synthetic_corpus(200, 120, seed=9)
        noisy, log = inject_noise(clean, NoiseSpec(0.0, 0.0, 1.0, seed=10))
        spurious = [c for c in log.changes if c.kind == "spurious"]
        assert spurious
        for change in spurious:
            assert change.before is None
            assert 1 <= change.after.end - change.after.start <= 3


class TestChangeLog:
    def test_replay_reproduces_noisy_corpus(self):
        clean = gen_synthetic_corpus(150, 120, seed=11)
        noisy, log = inject_noise(clean, NoiseSpec(0.15, 0.1, 0.3, seed=12))
        replayed = replay_changelog(clean, log)
        assert replayed.content() == noisy.content()

    def test_serialization_roundtrip(self):
        clean = gen_synthetic_corpus(60, 60, seed=13)
        _, log = inject_noise(clean, NoiseSpec(0.3, 0.2, 0.5, seed=14))
        assert len(log) > 0
        back = ChangeLog.from_lines(log.to_lines())
        assert back == log

    def test_disagreement_zero_iff_log_empty(self):
        clean = gen_synthetic_corpus(100, 120, seed=15)
        for seed in range(3):
            noisy, log = inject_noise(clean, NoiseSpec(0.08, 0.05, 0.02, seed=seed))
            d = label_disagreement(clean, noisy)
            assert (d == 0.0) == (len(log) == 0)


class TestLabelDisagreement:
    def test_identical_is_zero(self):
        c = gen_synthetic_corpus(20, 60, seed=16)
        assert label_disagreement(c, c) == 0.0

    def test_single_token_changed(self):
        a = corpus(*[sent([f"w{i}", "x"], [(0, 1, OS)]) for i in range(50)])
        sentences = list(a.sentences)
        sentences[0] = sent(["w0", "x"], [(0, 1, APP)])
        b = corpus(*sentences)
        assert label_disagreement(a, b) == pytest.approx(0.01)

    def test_symmetric(self):
        clean = gen_synthetic_corpus(80, 120, seed=17)
        noisy, _ = inject_noise(clean, NoiseSpec(seed=18))
        assert label_disagreement(clean, noisy) == label_disagreement(noisy, clean)

    def test_shape_mismatch_rejected(self):
        a = corpus(sent(["a", "b"], [(0, 1, OS)]))
        b = corpus(sent(["a", "b", "c"], [(0, 1, OS)]))
        with pytest.raises(ValueError):
            label_disagreement(a, b)

    def test_matches_rate_recomputed_from_changelog(self):
        clean = gen_synthetic_corpus(200, 240, seed=19)
        noisy, log = inject_noise(clean, NoiseSpec(seed=20))
        # independent recomputation: replay the log, then count differing tokens
        replayed = replay_changelog(clean, log)
        total = sum(len(s) for s in clean)
        differing = sum(
            1
            for sa, sb in zip(clean, replayed)
            for la, lb in zip(sa.labels, sb.labels)
            if la != lb
        )
        assert label_disagreement(clean, noisy) == pytest.approx(differing / total)
