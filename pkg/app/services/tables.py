"""The worked example tables and the counterexamples, ready to render."""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..schemas.common import ClassificationRow, LieKind, VerdictRecord
from .classify import classification_rows
from .criteria import counterexamples
from .rootsys import root_system


EXAMPLE_CONTEXTS = ((LieKind.B, 5, 4), (LieKind.D, 5, 3))


class ExampleTable(BaseModel):
    type: LieKind
    n: int
    r: int
    rows: list[ClassificationRow] = Field(default_factory=list)


class ExampleTables(BaseModel):
    tables: list[ExampleTable] = Field(default_factory=list)
    counterexamples: list[VerdictRecord] = Field(default_factory=list)


def example_tables() -> ExampleTables:
    tables = [
        ExampleTable(type=kind, n=n, r=r, rows=classification_rows(root_system(kind, n), r))
        for kind, n, r in EXAMPLE_CONTEXTS
    ]
    return ExampleTables(
        tables=tables,
        counterexamples=[verdict.to_record() for verdict in counterexamples()],
    )
