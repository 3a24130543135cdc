"""Checked-in transcription data files.

The environment variable ``NODALSEXTIC_DATA`` overrides the directory the
files are read from, so corrected transcriptions can be tried without
reinstalling.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path


def read_data(name: str) -> str:
    override = os.environ.get("NODALSEXTIC_DATA")
    if override:
        return (Path(override) / name).read_text()
    return resources.files(__name__).joinpath(name).read_text()
