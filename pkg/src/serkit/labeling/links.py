"""Hyperlink mention extraction with markup stripping.

``[[Target]]`` mentions the lexicon entity Target with its title as
surface; ``[[Target|surface]]`` mentions it with the given surface text.
Targets resolve through redirect aliases to canonical titles; targets the
lexicon does not know are not mentions (their surface text still appears
in the stripped output). Mention offsets refer to the stripped plain
text the function returns.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..wiki import EntityLexicon


class LinkMarkupError(ValueError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"link markup error at offset {offset}: {message}")
        self.offset = offset


@dataclass(frozen=True)
class LinkMention:
    surface: str
    target: str  # canonical title
    start: int  # char offsets into the stripped text
    end: int


def extract_link_mentions(body: str, lexicon: EntityLexicon) -> tuple[str, list[LinkMention]]:
    """Strip link markup; return (plain text, mentions in plain-text coords)."""
    out: list[str] = []
    mentions: list[LinkMention] = []
    pos = 0
    plain_len = 0
    while True:
        open_at = body.find("[[", pos)
        stray = body.find("]]", pos)
        if stray != -1 and (open_at == -1 or stray < open_at):
            raise LinkMarkupError(stray, "']]' without matching '[['")
        if open_at == -1:
            out.append(body[pos:])
            break
        out.append(body[pos:open_at])
        plain_len += open_at - pos
        close_at = body.find("]]", open_at + 2)
        if close_at == -1:
            raise LinkMarkupError(open_at, "'[[' is never closed")
        inner = body[open_at + 2 : close_at]
        if "[[" in inner:
            raise LinkMarkupError(open_at + 2 + inner.find("[["), "nested '[[' inside a link")
        target_text, pipe, surface = inner.partition("|")
        target_text = target_text.strip()
        if not target_text:
            raise LinkMarkupError(open_at, "empty link target")
        if not pipe or not surface:
            surface = target_text
        canonical = lexicon.resolve_target(target_text)
        if canonical is not None:
            mentions.append(
                LinkMention(surface, canonical, plain_len, plain_len + len(surface))
            )
        out.append(surface)
        plain_len += len(surface)
        pos = close_at + 2
    return "".join(out), mentions
