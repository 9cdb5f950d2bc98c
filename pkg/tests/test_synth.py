import io

from serkit.core import corpus_stats, validate_iob, write_conll
from serkit.noiselab import NoiseSpec, gen_synthetic_corpus, inject_noise, label_disagreement


class TestGenSyntheticCorpus:
    def test_small_corpus_valid(self):
        corpus = gen_synthetic_corpus(10, 60, seed=0)
        assert len(corpus) == 10
        for sentence in corpus:
            assert validate_iob(sentence.labels) == []
            assert any(label.kind == "B" for label in sentence.labels)

    def test_same_seed_byte_identical(self, tmp_path):
        a_path, b_path = tmp_path / "a.conll", tmp_path / "b.conll"
        write_conll(gen_synthetic_corpus(200, 120, seed=42), a_path)
        write_conll(gen_synthetic_corpus(200, 120, seed=42), b_path)
        assert a_path.read_bytes() == b_path.read_bytes()

    def test_different_seeds_differ(self):
        a = gen_synthetic_corpus(50, 120, seed=0)
        b = gen_synthetic_corpus(50, 120, seed=1)
        assert a.content() != b.content()

    def test_no_duplicate_sentences(self):
        corpus = gen_synthetic_corpus(800, 240, seed=3)
        keys = [s.surface_key() for s in corpus]
        assert len(keys) == len(set(keys))

    def test_per_type_balance_across_seeds(self):
        # every type's span share within +/-20% relative of uniform (1/12)
        uniform = 1.0 / 12.0
        for seed in range(5):
            stats = corpus_stats(gen_synthetic_corpus(1200, 240, seed=seed))
            total = stats.total_spans
            assert len(stats.per_type) == 12
            for count in stats.per_type.values():
                share = count / total
                assert abs(share - uniform) <= 0.2 * uniform

    def test_default_noise_lands_in_reference_band(self):
        # default NoiseSpec should produce 8%-20% token disagreement
        for seed in range(3):
            clean = gen_synthetic_corpus(1000, 240, seed=seed)
            noisy, _ = inject_noise(clean, NoiseSpec(seed=seed))
            assert 0.08 <= label_disagreement(clean, noisy) <= 0.20
