"""Match directory serialization.

Layout: manifest.json (config echo + content hash), robots.json,
series.json, network.json, tree.json, model.json.  The content hash is
SHA-256 over the canonical JSON of the config plus the five data
documents, concatenated in fixed order, so a regenerated match from the
same config reproduces the stored hash and any tampering is detected at
load time.
"""

import json
from pathlib import Path

from ..canonical import hash_documents
from ..config import MatchConfig
from ..errors import IntegrityError, MatchIOError
from .generate import MatchData, RobotRecord
from .network import SocialNetwork
from .parts import ProductivityModel
from .series import TimeSeriesTable
from .tree import FamilyTree

MANIFEST_FILE = "manifest.json"
DATA_FILES = ("model.json", "network.json", "robots.json", "series.json", "tree.json")
FORMAT = "planetx-match/1"


def match_documents(match: MatchData) -> dict:
    """The five data documents, keyed by filename."""
    return {
        "robots.json": [r.to_dict() for r in match.robots],
        "series.json": match.series.to_dict(),
        "network.json": match.network.to_dict(),
        "tree.json": match.tree.to_dict(),
        "model.json": match.model.to_dict(),
    }


def match_hash(match: MatchData) -> str:
    docs = match_documents(match)
    return hash_documents([match.config.to_dict()] + [docs[name] for name in DATA_FILES])


def save_match(match: MatchData, directory) -> str:
    """Write all match files; returns the content hash."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    docs = match_documents(match)
    digest = match_hash(match)
    manifest = {"format": FORMAT, "config": match.config.to_dict(), "sha256": digest}

    for name, doc in list(docs.items()) + [(MANIFEST_FILE, manifest)]:
        with open(directory / name, "w", encoding="utf-8") as f:
            json.dump(doc, f, indent=2, sort_keys=True)
            f.write("\n")
    return digest


def load_match(directory) -> MatchData:
    """Read and verify a match directory; raises naming the offending file."""
    directory = Path(directory)
    manifest = _read_json(directory, MANIFEST_FILE)
    if manifest.get("format") != FORMAT:
        raise MatchIOError(f"{directory / MANIFEST_FILE}: unknown format {manifest.get('format')!r}")
    config = MatchConfig.from_dict(manifest["config"])

    docs = {name: _read_json(directory, name) for name in DATA_FILES}
    digest = hash_documents([config.to_dict()] + [docs[name] for name in DATA_FILES])
    if digest != manifest["sha256"]:
        raise IntegrityError(
            f"{directory}: content hash mismatch (manifest {manifest['sha256'][:12]}..., "
            f"computed {digest[:12]}...)"
        )

    try:
        return MatchData(
            config=config,
            robots=[RobotRecord.from_dict(r) for r in docs["robots.json"]],
            series=TimeSeriesTable.from_dict(docs["series.json"]),
            network=SocialNetwork.from_dict(docs["network.json"]),
            tree=FamilyTree.from_dict(docs["tree.json"]),
            model=ProductivityModel.from_dict(docs["model.json"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MatchIOError(f"{directory}: malformed match data: {exc}") from exc


def _read_json(directory: Path, name: str):
    path = directory / name
    if not path.exists():
        raise MatchIOError(f"missing match file: {path}")
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise MatchIOError(f"corrupt match file: {path}: {exc}") from exc
