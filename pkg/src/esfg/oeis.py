"""OEIS b-file client with a verbatim local cache.

Fetches ``https://oeis.org/<ID>/b<digits>.txt``, stores the body exactly
as received (sequences only ever grow, so there is no expiry), and
compares a locally computed prefix against the published terms.  A
mismatch is reported, never raised: the caller decides what a
disagreement means.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import requests

_ID_PATTERN = re.compile(r"\AA\d{6,7}\Z")
CACHE_ENV_VAR = "ESFG_CACHE"


class OeisError(ValueError):
    """Client failure; ``code`` is ``invalid-id``, ``cache-miss``,
    ``network`` or ``malformed``."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")


@dataclass(frozen=True)
class OeisCheck:
    sequence_id: str
    fetched_terms: tuple[int, ...]
    local_terms: tuple[int, ...]
    match_prefix_length: int

    @property
    def is_full_match(self) -> bool:
        """Every comparable position agreed."""
        return self.match_prefix_length == min(
            len(self.fetched_terms), len(self.local_terms)
        )


def default_cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV_VAR)
    if override:
        return Path(override)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(
        os.path.expanduser("~"), ".cache"
    )
    return Path(base) / "esfg" / "oeis"


def bfile_url(sequence_id: str) -> str:
    return f"https://oeis.org/{sequence_id}/b{sequence_id[1:]}.txt"


def _download(url: str) -> str:
    response = requests.get(url, timeout=30)
    response.raise_for_status()
    return response.text


def parse_bfile(text: str) -> tuple[int, ...]:
    """Values from ``index value`` lines; comments and blanks skipped."""
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise OeisError("malformed", f"line {lineno}: expected 'index value'")
        try:
            values.append(int(parts[1]))
        except ValueError as exc:
            raise OeisError("malformed", f"line {lineno}: {parts[1]!r}") from exc
    return tuple(values)


def oeis_crosscheck(
    sequence_id: str,
    local_terms: Sequence[int],
    cache_dir: Path | str | None = None,
    *,
    offline: bool = False,
) -> OeisCheck:
    """Compare ``local_terms`` against the sequence's published values.

    Cache first: a hit is used verbatim; otherwise the b-file is fetched
    and cached (``offline`` instead requires the hit).  The result
    reports the longest matching prefix; disagreement is data, not an
    error.
    """
    if not _ID_PATTERN.match(sequence_id):
        raise OeisError("invalid-id", f"{sequence_id!r} is not an A-number")
    directory = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    cache_file = directory / f"{sequence_id}.bfile.txt"

    if cache_file.exists():
        text = cache_file.read_text()
    elif offline:
        raise OeisError("cache-miss", f"no cached b-file for {sequence_id}")
    else:
        try:
            text = _download(bfile_url(sequence_id))
        except requests.RequestException as exc:
            raise OeisError("network", f"fetching {sequence_id}: {exc}") from exc
        directory.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(text)

    fetched = parse_bfile(text)
    local = tuple(int(v) for v in local_terms)
    matched = 0
    for ours, theirs in zip(local, fetched):
        if ours != theirs:
            break
        matched += 1
    return OeisCheck(
        sequence_id=sequence_id,
        fetched_terms=fetched,
        local_terms=local,
        match_prefix_length=matched,
    )
