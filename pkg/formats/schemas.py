from typing import Any, Dict, List, Literal, Optional
from pydantic import BaseModel, ConfigDict, Field

from config import SCHEMA_VERSION

# ─────────────────────────────────────────────────────────────
# Letters and Words
# ─────────────────────────────────────────────────────────────

class LetterModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["zeta", "sigma"]
    index: int = Field(ge=1)


class SignedLetterModel(LetterModel):
    sign: Literal[1, -1] = 1


class WordModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    genus: int = Field(ge=1)
    letters: List[SignedLetterModel] = []


# ─────────────────────────────────────────────────────────────
# Hurwitz Systems and Certificates
# ─────────────────────────────────────────────────────────────

class EntryModel(BaseModel):
    """One factor: conjugator · base^sign · conjugator⁻¹"""
    model_config = ConfigDict(extra="forbid")

    conjugator: List[SignedLetterModel] = []
    base: LetterModel
    sign: Literal[1, -1] = 1


class SystemModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    genus: int = Field(ge=1)
    entries: List[EntryModel] = []


class MoveModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: str
    pos: int
    indices: Optional[List[int]] = None
    h: Optional[int] = None


class CertificateModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    start: SystemModel
    moves: List[MoveModel] = []
    end: SystemModel


# ─────────────────────────────────────────────────────────────
# Charts
# ─────────────────────────────────────────────────────────────

class ChartVertexModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: int
    kind: str
    rotation: List[int]                  # edge ends: 2·edge (from) and 2·edge+1 (to)
    param: Optional[int] = None


class ChartEdgeModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    id: int
    label: LetterModel
    from_: Optional[int] = Field(default=None, alias="from")
    to: Optional[int] = None


class ChartModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    genus: int = Field(ge=1)
    vertices: List[ChartVertexModel] = []
    edges: List[ChartEdgeModel] = []
    outer_face: Optional[int] = None


class ReportModel(BaseModel):
    """Free-form result of a CLI command"""
    model_config = ConfigDict(extra="forbid")

    name: str
    data: Dict[str, Any] = {}


# ─────────────────────────────────────────────────────────────
# Envelope
# ─────────────────────────────────────────────────────────────

DocumentKind = Literal["word", "system", "certificate", "chart", "report"]

PAYLOAD_MODELS = {
    "word": WordModel,
    "system": SystemModel,
    "certificate": CertificateModel,
    "chart": ChartModel,
    "report": ReportModel,
}


class Envelope(BaseModel):
    """Header fields every document carries next to its payload"""
    model_config = ConfigDict(extra="allow")

    schema_version: Literal[SCHEMA_VERSION]
    kind: DocumentKind
