import string

from hypothesis import given, strategies as st

from serkit.core import tokenize


def surfaces(text):
    return [t.surface for t in tokenize(text)]


class TestTokenizeRules:
    def test_whitespace_and_punct(self):
        assert surfaces("Windows XP runs.") == ["Windows", "XP", "runs", "."]

    def test_empty(self):
        assert tokenize("") == ()
        assert tokenize("   \t ") == ()

    def test_symbol_suffix_stays_attached(self):
        # hand application of the rule set: "+" run after a letter stays
        assert surfaces("C++ (1985)") == ["C++", "(", "1985", ")"]

    def test_hash_suffix(self):
        assert surfaces("I like C#.") == ["I", "like", "C#", "."]

    def test_leading_dot_name(self):
        assert surfaces(".NET rocks") == [".NET", "rocks"]

    def test_sentence_final_period_detaches(self):
        assert surfaces("runs.") == ["runs", "."]

    def test_inner_punctuation_preserved(self):
        assert surfaces("Node.js and state-of-the-art stuff") == [
            "Node.js",
            "and",
            "state-of-the-art",
            "stuff",
        ]

    def test_quoted(self):
        assert surfaces('"Linux" works') == ['"', "Linux", '"', "works"]


@given(
    st.text(
        alphabet=string.ascii_letters + string.digits + " .,!?()+#\"'-_",
        max_size=80,
    )
)
def test_offsets_reconstruct_text(text):
    tokens = tokenize(text)
    # every surface matches its offsets, and offsets strictly increase
    prev_end = -1
    for tok in tokens:
        assert text[tok.char_start : tok.char_end] == tok.surface
        assert tok.char_start >= prev_end
        prev_end = tok.char_end
    # concatenating surfaces with the original inter-token gaps rebuilds text
    rebuilt = []
    pos = 0
    for tok in tokens:
        rebuilt.append(text[pos : tok.char_start])
        rebuilt.append(tok.surface)
        pos = tok.char_end
    rebuilt.append(text[pos:])
    assert "".join(rebuilt) == text
    # nothing but whitespace is dropped
    dropped = set(text) - set("".join(t.surface for t in tokens))
    assert all(ch.isspace() for ch in dropped)
