"""
JSON documents for words, systems, certificates, charts and reports.

A document is its payload object with two extra keys, "schema_version" and
"kind". Output is indented and key-sorted so equal values give equal text.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Type, TypeVar, Union

from pydantic import ValidationError

from config import JSON_INDENT, SCHEMA_VERSION
from errors import MonodromyError, SchemaError
from mcg.words import GenusContext, Letter, LetterKind, SignedLetter, Word
from hurwitz.system import FactorEntry, HurwitzSystem
from hurwitz.moves import Move, MoveCertificate, MoveType
from chart.model import Chart, ChartEdge, ChartVertex, VertexKind
from formats.schemas import (
    PAYLOAD_MODELS, CertificateModel, ChartEdgeModel, ChartModel, ChartVertexModel,
    EntryModel, Envelope, LetterModel, MoveModel, ReportModel, SignedLetterModel,
    SystemModel, WordModel,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass
class Report:
    """Named bag of results emitted by CLI commands"""
    name: str
    data: Dict[str, Any] = field(default_factory=dict)


Payload = Union[Word, HurwitzSystem, MoveCertificate, Chart, Report]

# ─────────────────────────────────────────────────────────────
# Domain -> Models
# ─────────────────────────────────────────────────────────────

def _letter(l: Letter) -> LetterModel:
    return LetterModel(kind=l.kind.value, index=l.index)


def _signed(s: SignedLetter) -> SignedLetterModel:
    return SignedLetterModel(kind=s.letter.kind.value, index=s.letter.index, sign=s.sign)


def word_model(w: Word) -> WordModel:
    return WordModel(genus=w.genus.g, letters=[_signed(s) for s in w.letters])


def system_model(s: HurwitzSystem) -> SystemModel:
    return SystemModel(
        genus=s.genus.g,
        entries=[
            EntryModel(conjugator=[_signed(x) for x in e.conjugator.letters], base=_letter(e.base), sign=e.sign)
            for e in s.entries
        ],
    )


def move_model(m: Move) -> MoveModel:
    return MoveModel(
        kind=m.kind.value,
        pos=m.pos,
        indices=None if m.indices is None else list(m.indices),
        h=m.h,
    )


def certificate_model(c: MoveCertificate) -> CertificateModel:
    return CertificateModel(
        start=system_model(c.start),
        moves=[move_model(m) for m in c.moves],
        end=system_model(c.claimed_end),
    )


def chart_model(c: Chart) -> ChartModel:
    return ChartModel(
        genus=c.genus.g,
        vertices=[
            ChartVertexModel(id=v.id, kind=v.kind.value, rotation=list(v.rotation), param=v.param)
            for v in c.vertices
        ],
        edges=[
            ChartEdgeModel(id=e.id, label=_letter(e.label), from_=e.tail, to=e.head)
            for e in c.edges
        ],
        outer_face=c.outer_face,
    )


# ─────────────────────────────────────────────────────────────
# Models -> Domain
# ─────────────────────────────────────────────────────────────

def _to_letter(m: LetterModel) -> Letter:
    return Letter(LetterKind(m.kind), m.index)


def _to_word(ctx: GenusContext, letters) -> Word:
    return Word(ctx, tuple(SignedLetter(_to_letter(x), x.sign) for x in letters))


def to_word(m: WordModel) -> Word:
    return _to_word(GenusContext(m.genus), m.letters)


def to_system(m: SystemModel) -> HurwitzSystem:
    ctx = GenusContext(m.genus)
    return HurwitzSystem(ctx, tuple(
        FactorEntry(_to_word(ctx, e.conjugator), _to_letter(e.base), e.sign) for e in m.entries
    ))


def to_move(m: MoveModel) -> Move:
    try:
        kind = MoveType(m.kind)
    except ValueError:
        raise SchemaError(f"unknown move kind {m.kind!r}")
    return Move(kind, m.pos, None if m.indices is None else tuple(m.indices), m.h)


def to_certificate(m: CertificateModel) -> MoveCertificate:
    return MoveCertificate(to_system(m.start), tuple(to_move(x) for x in m.moves), to_system(m.end))


def to_chart(m: ChartModel) -> Chart:
    vertices = []
    for v in m.vertices:
        try:
            kind = VertexKind(v.kind)
        except ValueError:
            raise SchemaError(f"unknown vertex kind {v.kind!r}")
        vertices.append(ChartVertex(v.id, kind, tuple(v.rotation), v.param))
    edges = [ChartEdge(e.id, _to_letter(e.label), e.from_, e.to) for e in m.edges]
    return Chart(GenusContext(m.genus), tuple(vertices), tuple(edges), m.outer_face)


# ─────────────────────────────────────────────────────────────
# Documents
# ─────────────────────────────────────────────────────────────

def to_document(obj: Payload) -> Dict[str, Any]:
    if isinstance(obj, Word):
        kind, model = "word", word_model(obj)
    elif isinstance(obj, HurwitzSystem):
        kind, model = "system", system_model(obj)
    elif isinstance(obj, MoveCertificate):
        kind, model = "certificate", certificate_model(obj)
    elif isinstance(obj, Chart):
        kind, model = "chart", chart_model(obj)
    elif isinstance(obj, Report):
        kind, model = "report", ReportModel(name=obj.name, data=obj.data)
    else:
        raise SchemaError(f"cannot serialize {type(obj).__name__}")
    # move records drop unset fields; chart endpoints keep their nulls
    doc = model.model_dump(mode="json", by_alias=True, exclude_none=(kind == "certificate"))
    doc["schema_version"] = SCHEMA_VERSION
    doc["kind"] = kind
    return doc


_CONVERTERS = {
    "word": to_word,
    "system": to_system,
    "certificate": to_certificate,
    "chart": to_chart,
    "report": lambda m: Report(m.name, m.data),
}


def from_document(doc: Any) -> Payload:
    """
    Decode a parsed document. Raises pydantic.ValidationError for shape errors
    and SchemaError when the shape is right but the values are not.
    """
    if not isinstance(doc, dict):
        raise SchemaError(f"document must be a JSON object, got {type(doc).__name__}")
    header = Envelope.model_validate(doc)
    payload = {k: v for k, v in doc.items() if k not in ("schema_version", "kind")}
    model = PAYLOAD_MODELS[header.kind].model_validate(payload)
    try:
        return _CONVERTERS[header.kind](model)
    except SchemaError:
        raise
    except MonodromyError as e:
        raise SchemaError(f"invalid {header.kind} document: {e}") from e


def dumps(obj: Payload) -> str:
    return json.dumps(to_document(obj), indent=JSON_INDENT, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str) -> Payload:
    return from_document(json.loads(text))


def read_document(path: Union[str, Path]) -> Payload:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise SchemaError(f"{path}: not UTF-8 text ({e.reason} at byte {e.start})") from e
    return loads(text)


def write_document(obj: Payload, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
    logger.debug(f"wrote {path}")


def read_as(path: Union[str, Path], expected: Type[T]) -> T:
    """read_document, insisting on one payload type"""
    obj = read_document(path)
    if not isinstance(obj, expected):
        raise SchemaError(f"{path}: expected a {expected.__name__} document, got {type(obj).__name__}")
    return obj


PARSE_ERRORS = (SchemaError, ValidationError, json.JSONDecodeError)
