import pytest
from hypothesis import given, strategies as st

from serkit.noiselab import (
    cohen_kappa,
    draw_audit_sample,
    gen_synthetic_corpus,
    sample_size,
)


class TestSampleSize:
    def test_paper_style_95_5(self):
        # z = 1.959964, n0 = 384.15 -> 385
        assert sample_size(0.95, 0.05) == 385

    def test_large_population_correction_negligible(self):
        assert sample_size(0.95, 0.05, population=1_663_431) == 385

    def test_small_population(self):
        # 385 / (1 + 384/500) = 217.76 -> 218
        assert sample_size(0.95, 0.05, population=500) == 218

    def test_invalid_ranges(self):
        for confidence, margin in [(0.0, 0.05), (1.0, 0.05), (0.95, 0.0), (0.95, 1.0)]:
            with pytest.raises(ValueError):
                sample_size(confidence, margin)

    def test_capped_by_population(self):
        assert sample_size(0.95, 0.05, population=10) == 10

    @given(
        c1=st.floats(0.5, 0.99),
        c2=st.floats(0.5, 0.99),
        m1=st.floats(0.01, 0.2),
        m2=st.floats(0.01, 0.2),
    )
    def test_monotonicity(self, c1, c2, m1, m2):
        lo_c, hi_c = sorted((c1, c2))
        lo_m, hi_m = sorted((m1, m2))
        assert sample_size(hi_c, lo_m) >= sample_size(lo_c, lo_m)
        assert sample_size(lo_c, lo_m) >= sample_size(lo_c, hi_m)


class TestDrawAuditSample:
    def test_full_corpus(self):
        corpus = gen_synthetic_corpus(30, 60, seed=0)
        sample = draw_audit_sample(corpus, len(corpus), seed=1)
        assert sample.corpus.content() == corpus.content()

    def test_deterministic(self):
        corpus = gen_synthetic_corpus(50, 60, seed=2)
        a = draw_audit_sample(corpus, 20, seed=3)
        b = draw_audit_sample(corpus, 20, seed=3)
        assert a.corpus.content() == b.corpus.content()
        assert a.label_count == b.label_count

    def test_label_count_recount(self):
        corpus = gen_synthetic_corpus(500, 120, seed=4)
        sample = draw_audit_sample(corpus, 387, seed=5)
        recount = sum(
            1 for s in sample.corpus for label in s.labels if label.kind != "O"
        )
        assert sample.label_count == recount
        assert len(sample.corpus) == 387

    def test_too_large_rejected(self):
        corpus = gen_synthetic_corpus(10, 60, seed=6)
        with pytest.raises(ValueError):
            draw_audit_sample(corpus, 11, seed=0)


class TestCohenKappa:
    def test_identical_sequences(self):
        assert cohen_kappa([0, 1, 2, 0, 1], [0, 1, 2, 0, 1]) == 1.0

    def test_hand_computed_zero(self):
        # p_o = 0.5, p_e = 0.5 -> kappa = 0
        assert cohen_kappa([1, 1, 0, 0], [1, 0, 1, 0]) == 0.0

    def test_symmetric(self):
        a = [0, 1, 1, 2, 0, 2, 1]
        b = [0, 1, 2, 2, 1, 2, 0]
        assert cohen_kappa(a, b) == pytest.approx(cohen_kappa(b, a))

    def test_degenerate_identical_constant(self):
        assert cohen_kappa(["x", "x"], ["x", "x"]) == 1.0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            cohen_kappa([1], [1, 2])

    def test_negative_possible(self):
        assert cohen_kappa([0, 1], [1, 0]) < 0
