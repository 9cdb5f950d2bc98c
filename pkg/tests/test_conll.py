import pytest

from serkit.core import ConllFormatError, CorpusMeta, read_conll, write_conll
from serkit.core.types import Corpus, EntityType

from helpers import sent

OS = EntityType.OPERATING_SYSTEM
APP = EntityType.APPLICATION


def two_sentence_corpus():
    return Corpus(
        (
            sent(["Ubuntu", "is", "nice", "."], [(0, 1, OS)], source_id="Page A#s0"),
            sent(["Try", "Firefox", "!"], [(1, 2, APP)], source_id="Page B#s3"),
        ),
        CorpusMeta(name="demo", params=(("root", "Computing"),), snapshot_id="snap-1"),
    )


class TestRoundTrip:
    def test_write_then_read_identity(self, tmp_path):
        corpus = two_sentence_corpus()
        path = tmp_path / "c.conll"
        write_conll(corpus, path)
        back = read_conll(path)
        assert back.content() == corpus.content()
        assert back.meta == corpus.meta

    def test_write_is_deterministic(self, tmp_path):
        corpus = two_sentence_corpus()
        a, b = tmp_path / "a.conll", tmp_path / "b.conll"
        write_conll(corpus, a)
        write_conll(corpus, b)
        assert a.read_bytes() == b.read_bytes()

    def test_no_trailing_blank_line_needed(self, tmp_path):
        path = tmp_path / "c.conll"
        path.write_text("Linux\tB-OPERATING_SYSTEM\nrocks\tO", encoding="utf-8")
        corpus = read_conll(path)
        assert len(corpus) == 1
        assert corpus.sentences[0].surfaces == ("Linux", "rocks")


class TestErrors:
    def test_unknown_label_named(self, tmp_path):
        path = tmp_path / "c.conll"
        path.write_text("thing\tB-FOO\n", encoding="utf-8")
        with pytest.raises(ConllFormatError, match="B-FOO"):
            read_conll(path)

    def test_malformed_line_number(self, tmp_path):
        path = tmp_path / "c.conll"
        path.write_text("ok\tO\nbroken line without tab\n", encoding="utf-8")
        with pytest.raises(ConllFormatError) as err:
            read_conll(path)
        assert err.value.line_no == 2

    def test_too_many_fields(self, tmp_path):
        path = tmp_path / "c.conll"
        path.write_text("a\tO\textra\n", encoding="utf-8")
        with pytest.raises(ConllFormatError):
            read_conll(path)
