import numpy as np
import pytest

from serkit.noiselab import gen_synthetic_corpus
from serkit.tagger import (
    ArchDescriptor,
    CheckpointError,
    PAD_ID,
    TokenTagger,
    UNK_ID,
    Vocab,
    build_vocab,
    load_checkpoint,
    read_vocab,
    save_checkpoint,
    spawn_siblings,
    write_vocab,
)

from helpers import corpus, sent
from serkit.core import EntityType

OS = EntityType.OPERATING_SYSTEM


class TestVocab:
    def test_min_freq_cutoff(self):
        c = corpus(
            sent(["a", "a", "b"], [(0, 1, OS)]),
            sent(["a", "c"], [(0, 1, OS)]),
        )
        vocab = build_vocab(c, min_freq=2)
        assert vocab.encode("a") == 2
        assert vocab.encode("b") == UNK_ID
        assert len(vocab) == 3  # pad, unk, a

    def test_min_freq_one_includes_all(self):
        c = corpus(sent(["x", "y", "x"], [(0, 1, OS)]))
        vocab = build_vocab(c, min_freq=1)
        assert set(vocab.surface_of[2:]) == {"x", "y"}

    def test_unseen_maps_to_unknown(self):
        c = corpus(sent(["x"], [(0, 1, OS)]))
        vocab = build_vocab(c)
        assert vocab.encode("never-seen") == UNK_ID

    def test_deterministic_order(self):
        c = corpus(sent(["b", "a", "b", "a", "c"], [(0, 1, OS)]))
        vocab = build_vocab(c)
        # a and b both occur twice: lexicographic tie-break
        assert vocab.surface_of[2:] == ("a", "b", "c")

    def test_file_roundtrip(self, tmp_path):
        c = corpus(sent(["x", "y"], [(0, 1, OS)]))
        vocab = build_vocab(c)
        path = tmp_path / "vocab.tsv"
        write_vocab(vocab, path)
        assert read_vocab(path) == vocab

    def test_reserved_ids(self):
        c = corpus(sent(["x"], [(0, 1, OS)]))
        vocab = build_vocab(c)
        assert vocab.encode("<pad>") == PAD_ID
        assert vocab.encode("<unk>") == UNK_ID


def small_model(seed=0, dropout=0.1):
    return TokenTagger(
        ArchDescriptor(vocab_size=12, embed_dim=4, hidden_dim=6, init_seed=seed, dropout_rate=dropout)
    )


class TestForward:
    def test_rows_are_distributions(self):
        model = small_model()
        for stochastic in (False, True):
            probs = model.forward([1, 5, 3, 2], stochastic=stochastic, pass_seed=9)
            assert probs.shape == (4, 25)
            assert np.all(probs >= 0)
            np.testing.assert_allclose(probs.sum(axis=1), 1.0, atol=1e-6)

    def test_same_pass_seed_identical(self):
        model = small_model()
        a = model.forward([1, 2, 3], stochastic=True, pass_seed=7)
        b = model.forward([1, 2, 3], stochastic=True, pass_seed=7)
        np.testing.assert_array_equal(a, b)

    def test_different_pass_seeds_differ(self):
        model = small_model()
        a = model.forward([1, 2, 3, 4, 5], stochastic=True, pass_seed=1)
        b = model.forward([1, 2, 3, 4, 5], stochastic=True, pass_seed=2)
        assert np.any(a != b)

    def test_deterministic_mode_ignores_pass_seed(self):
        model = small_model()
        a = model.forward([1, 2, 3], stochastic=False, pass_seed=1)
        b = model.forward([1, 2, 3], stochastic=False, pass_seed=999)
        np.testing.assert_array_equal(a, b)

    def test_out_of_range_id_rejected(self):
        model = small_model()
        with pytest.raises(ValueError):
            model.forward([0, 99])

    def test_batched_matches_single(self):
        # padding must not leak into real positions
        model = small_model()
        sents = [[1, 2, 3, 4, 5, 6], [7, 8], [9]]
        cache = model.forward_batch_cached(sents, stochastic=False)
        for i, ids in enumerate(sents):
            single = model.forward(ids, stochastic=False)
            np.testing.assert_allclose(cache.probs[i, : len(ids)], single, atol=1e-12)


class TestParameters:
    def test_parameter_count_formula(self):
        arch = ArchDescriptor(vocab_size=12, embed_dim=4, hidden_dim=6)
        # V*E + 3*E*H + H + H*L + L
        assert arch.parameter_count == 12 * 4 + 3 * 4 * 6 + 6 + 6 * 25 + 25

    def test_flat_roundtrip(self):
        model = small_model()
        flat = model.get_flat()
        assert flat.shape == (model.parameter_count,)
        model2 = small_model(seed=5)
        model2.set_flat(flat)
        np.testing.assert_array_equal(model2.get_flat(), flat)
        np.testing.assert_array_equal(
            model2.forward([1, 2]), model.forward([1, 2])
        )

    def test_different_init_seeds_differ(self):
        assert np.any(small_model(seed=0).get_flat() != small_model(seed=1).get_flat())

    def test_spawn_siblings(self):
        arch = ArchDescriptor(vocab_size=12, embed_dim=4, hidden_dim=6)
        siblings = spawn_siblings(arch, 3, base_seed=2)
        assert len(siblings) == 3
        flats = [m.get_flat() for m in siblings]
        assert np.any(flats[0] != flats[1]) and np.any(flats[1] != flats[2])
        assert all(m.parameter_count == siblings[0].parameter_count for m in siblings)


class TestCheckpoint:
    def test_save_load_identical_forward(self, tmp_path):
        model = small_model(seed=4)
        path = tmp_path / "model.npz"
        save_checkpoint(model, path)
        loaded = load_checkpoint(path)
        np.testing.assert_array_equal(
            loaded.forward([1, 2, 3]), model.forward([1, 2, 3])
        )
        assert loaded.arch == model.arch

    def test_truncated_file_rejected(self, tmp_path):
        model = small_model()
        path = tmp_path / "model.npz"
        save_checkpoint(model, path)
        data = path.read_bytes()
        path.write_bytes(data[: len(data) // 2])
        with pytest.raises(CheckpointError):
            load_checkpoint(path)

    def test_version_mismatch_rejected(self, tmp_path):
        path = tmp_path / "model.npz"
        np.savez(path, format=np.array("serkit-ckpt-0"), params=np.zeros(3))
        with pytest.raises(CheckpointError, match="format"):
            load_checkpoint(path)

    def test_loaded_parameter_count_matches_descriptor(self, tmp_path):
        model = small_model()
        path = tmp_path / "model.npz"
        save_checkpoint(model, path)
        loaded = load_checkpoint(path)
        assert loaded.get_flat().shape == (loaded.arch.parameter_count,)
