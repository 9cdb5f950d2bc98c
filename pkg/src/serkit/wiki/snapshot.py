"""Offline wiki snapshot files.

Snapshot grammar (documented, frozen): UTF-8 text, one JSON object per
line, each describing one page:

    {"title": "...", "categories": ["...", ...],
     "redirect": "target title" | null, "body": "wiki text"}

* ``title`` is required and unique across the file. A title starting with
  ``Category:`` declares a category node; its ``categories`` list names
  its parent categories (plain names, no prefix).
* ``categories`` defaults to [] and holds plain category names.
* ``redirect`` marks a redirect page; its body is ignored.
* ``body`` may contain link markup ``[[Target]]`` or ``[[Target|surface]]``.
  Nesting is not allowed; unbalanced brackets are rejected at load time
  with the offending line number.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Optional

CATEGORY_PREFIX = "Category:"


class SnapshotFormatError(ValueError):
    def __init__(self, path: str | os.PathLike, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


@dataclass(frozen=True)
class Page:
    title: str
    categories: tuple[str, ...] = ()
    redirect_target: Optional[str] = None
    body: str = ""

    @property
    def is_category(self) -> bool:
        return self.title.startswith(CATEGORY_PREFIX)

    @property
    def category_name(self) -> str:
        if not self.is_category:
            raise ValueError(f"{self.title!r} is not a category page")
        return self.title[len(CATEGORY_PREFIX):]

    @property
    def is_redirect(self) -> bool:
        return self.redirect_target is not None

    @property
    def is_article(self) -> bool:
        return not self.is_category and not self.is_redirect


@dataclass(frozen=True)
class WikiSnapshot:
    pages: tuple[Page, ...]
    snapshot_id: str = ""
    by_title: dict[str, Page] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self.by_title:
            object.__setattr__(self, "by_title", {p.title: p for p in self.pages})

    def articles(self) -> list[Page]:
        return [p for p in self.pages if p.is_article]

    def category_pages(self) -> list[Page]:
        return [p for p in self.pages if p.is_category]

    def redirects(self) -> list[Page]:
        return [p for p in self.pages if p.is_redirect]


def check_link_markup(body: str) -> Optional[tuple[int, str]]:
    """Return (offset, message) for the first mark-up violation, else None."""
    pos = 0
    while True:
        open_at = body.find("[[", pos)
        close_at = body.find("]]", pos)
        if open_at == -1 and close_at == -1:
            return None
        if open_at == -1 or (close_at != -1 and close_at < open_at):
            return (close_at, "']]' without matching '[['")
        if close_at == -1:
            return (open_at, "'[[' is never closed")
        inner = body[open_at + 2 : close_at]
        if "[[" in inner:
            return (open_at + 2 + inner.find("[["), "nested '[[' inside a link")
        if not inner.strip():
            return (open_at, "empty link target")
        pos = close_at + 2


_ALLOWED_KEYS = {"title", "categories", "redirect", "body"}


def load_snapshot(path: str | os.PathLike) -> WikiSnapshot:
    pages: list[Page] = []
    titles: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SnapshotFormatError(path, line_no, f"bad JSON: {exc.msg}") from None
            if not isinstance(record, dict):
                raise SnapshotFormatError(path, line_no, "record must be an object")
            unknown = set(record) - _ALLOWED_KEYS
            if unknown:
                raise SnapshotFormatError(path, line_no, f"unknown keys {sorted(unknown)}")
            title = record.get("title")
            if not isinstance(title, str) or not title:
                raise SnapshotFormatError(path, line_no, "missing or empty title")
            if title in titles:
                raise SnapshotFormatError(path, line_no, f"duplicate title {title!r}")
            titles.add(title)
            categories = record.get("categories", [])
            if not isinstance(categories, list) or not all(isinstance(c, str) for c in categories):
                raise SnapshotFormatError(path, line_no, "categories must be a list of strings")
            redirect = record.get("redirect")
            if redirect is not None and not isinstance(redirect, str):
                raise SnapshotFormatError(path, line_no, "redirect must be a string or null")
            body = record.get("body", "")
            if not isinstance(body, str):
                raise SnapshotFormatError(path, line_no, "body must be a string")
            violation = check_link_markup(body)
            if violation is not None:
                offset, message = violation
                raise SnapshotFormatError(path, line_no, f"link markup at offset {offset}: {message}")
            pages.append(Page(title, tuple(categories), redirect, body))
    return WikiSnapshot(tuple(pages), snapshot_id=os.path.basename(str(path)))


def dump_snapshot(snapshot: WikiSnapshot, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for page in snapshot.pages:
            record: dict = {"title": page.title}
            if page.categories:
                record["categories"] = list(page.categories)
            if page.redirect_target is not None:
                record["redirect"] = page.redirect_target
            if page.body:
                record["body"] = page.body
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")
