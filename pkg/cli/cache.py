"""
One JSON file per (command, parameters), written atomically
"""
import hashlib
import json
import logging
import os
import tempfile
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from config import CACHE_SCHEMA_VERSION

logger = logging.getLogger(__name__)

_SOURCE_PACKAGES = ("lattice", "series", "algebra", "cli")
_SOURCE_MODULES = ("config.py", "errors.py", "reports.py")


def source_files(root: Path) -> List[Path]:
    """Library sources whose contents decide whether an entry is current"""
    files = [source for package in _SOURCE_PACKAGES for source in sorted((root / package).glob("*.py"))]
    return files + [root / name for name in _SOURCE_MODULES if (root / name).exists()]


def source_digest(root: Path) -> str:
    """Hash of the names and contents of the library sources under root"""
    digest = hashlib.sha256()
    for source in source_files(root):
        digest.update(str(source.relative_to(root)).encode())
        digest.update(source.read_bytes())
    return digest.hexdigest()[:16]


@lru_cache(maxsize=1)
def code_version() -> str:
    """Digest of this checkout; entries written by other code are stale"""
    return source_digest(Path(__file__).resolve().parent.parent)


class ResultCache:
    """Read-through cache of JSON payloads"""

    def __init__(self, directory: Path, enabled: bool = True):
        self.directory = Path(directory)
        self.enabled = enabled

    def path_for(self, command: str, params: Dict[str, Any]) -> Path:
        """File name derived from the command and its sorted parameters"""
        key = json.dumps(params, sort_keys=True)
        return self.directory / f"{command}-{hashlib.sha256(key.encode()).hexdigest()[:16]}.json"

    def get(self, command: str, params: Dict[str, Any]) -> Optional[Any]:
        """Stored payload, or None when missing, stale or unreadable"""
        if not self.enabled:
            return None
        path = self.path_for(command, params)
        if not path.exists():
            logger.debug("cache miss: %s", path.name)
            return None
        try:
            entry = json.loads(path.read_text())
        except (OSError, ValueError) as exc:
            logger.warning("ignoring corrupt cache entry %s (%s); recomputing", path, exc)
            return None
        if not isinstance(entry, dict) or entry.get("schema") != CACHE_SCHEMA_VERSION \
                or entry.get("code") != code_version() or entry.get("params") != params:
            logger.warning("ignoring stale cache entry %s; recomputing", path)
            return None
        logger.debug("cache hit: %s", path.name)
        return entry.get("payload")

    def put(self, command: str, params: Dict[str, Any], payload: Any) -> None:
        """Write to a temporary file, then rename over the entry"""
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path_for(command, params)
        entry = {"schema": CACHE_SCHEMA_VERSION, "code": code_version(), "params": params, "payload": payload}
        handle, temp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(handle, "w") as out:
                json.dump(entry, out, sort_keys=True)
            os.replace(temp, path)
        except OSError:
            if os.path.exists(temp):
                os.unlink(temp)
            raise

    def fetch(self, command: str, params: Dict[str, Any], compute: Callable[[], Any]) -> Any:
        """Cached payload, computing and storing it on a miss"""
        payload = self.get(command, params)
        if payload is None:
            payload = compute()
            self.put(command, params, payload)
        return payload
