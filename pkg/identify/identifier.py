"""
격자 식별
- 계수가 같은 카탈로그 항목을 지문으로 거른 뒤 닮음 증인으로 확정
- 키싱 수가 상한을 넘거나 예산이 소진되면 지문 일치만 보고 (confidence = fingerprint)
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List

from config import Config
from identify.catalog import catalog_entries
from identify.fingerprint import fingerprint
from identify.isometry import is_similar
from lattices.lattice import Lattice
from utils.db import log_event
from utils.errors import SearchBudgetExceeded


class Confidence(Enum):
    CERTIFIED = "certified"
    FINGERPRINT = "fingerprint"


@dataclass(frozen=True)
class IdentificationMatch:
    name: str
    confidence: Confidence

    @property
    def certified(self) -> bool:
        return self.confidence is Confidence.CERTIFIED


class LatticeIdentifier:
    """카탈로그 기반 식별기 (카탈로그는 읽기 전용)"""

    def __init__(self, max_rank: int = None, max_kissing: int = None):
        self.max_rank = max_rank or Config.get_identify_setting("catalog_max_rank")
        self.max_kissing = max_kissing or Config.get_identify_setting("isometry_max_kissing")
        self.entries = catalog_entries(self.max_rank)

    def matches(self, l: Lattice) -> List[IdentificationMatch]:
        if l.rank > self.max_rank:
            log_event("identify", "INFO", f"{l.provenance}: rank {l.rank} beyond catalog")
            return []
        fp = fingerprint(l)
        found: List[IdentificationMatch] = []
        for entry in self.entries:
            if entry.rank != l.rank:
                continue
            candidate = entry.build()
            if fingerprint(candidate) != fp:
                continue
            if fp.kissing_number > self.max_kissing:
                found.append(IdentificationMatch(entry.name, Confidence.FINGERPRINT))
                continue
            try:
                witness = is_similar(l, candidate)
            except SearchBudgetExceeded as e:
                log_event("identify", "WARNING", f"{l.provenance} vs {entry.name}: {e}")
                found.append(IdentificationMatch(entry.name, Confidence.FINGERPRINT))
                continue
            if witness is not None:
                found.append(IdentificationMatch(entry.name, Confidence.CERTIFIED))
        log_event("identify", "INFO",
                  f"{l.provenance}: {[m.name for m in found] or 'no catalog match'}")
        return found


_identifier = None


def get_identifier() -> LatticeIdentifier:
    global _identifier
    if _identifier is None:
        _identifier = LatticeIdentifier()
    return _identifier


def identify_matches(l: Lattice) -> List[IdentificationMatch]:
    return get_identifier().matches(l)


def identify(l: Lattice) -> List[str]:
    """일치하는 카탈로그 이름 목록"""
    return [m.name for m in identify_matches(l)]
