"""
Pydantic schemas for command requests and results.
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from config.settings import ScalarMode

BRAID_COMMANDS = ("normal-form", "compare", "classify")
GRAPH_COMMANDS = ("roots", "inversions", "essential", "surface")

Command = Literal["normal-form", "compare", "classify", "roots", "inversions", "essential", "surface"]


class RunConfig(BaseModel):
    """One parsed command line."""

    command: Command = Field(..., description="Subcommand to run")
    strands: Optional[int] = Field(None, ge=2, description="Strand count for braid commands")
    graph: Optional[str] = Field(None, description="Graph file for Coxeter commands")
    words: List[str] = Field(default_factory=list, description="Word arguments")
    depth: Optional[int] = Field(None, ge=1, description="Root depth bound")
    m_max: Optional[int] = Field(None, ge=1, description="Orbit iteration bound")
    closure_depth: Optional[int] = Field(None, ge=1, description="Reflection closure depth bound")
    radius: Optional[int] = Field(None, ge=0, description="Conjugator search radius")
    full: bool = Field(False, description="Enumerate all positive roots (finite type only)")
    order: Optional[str] = Field(None, description="Comma separated vertex order for the surface")
    rep: Optional[str] = Field(None, description="Artin word for the homological representation")
    mode: Optional[ScalarMode] = Field(None, description="Scalar mode override")
    output_format: Literal["lines", "text"] = Field("lines", description="Output format")

    @model_validator(mode="after")
    def check_input_source(self):
        if self.command in BRAID_COMMANDS:
            if self.strands is None or self.graph is not None:
                raise ValueError(f"{self.command} takes --strands and no --graph")
            expected = 2 if self.command == "compare" else 1
            if len(self.words) != expected:
                raise ValueError(f"{self.command} takes {expected} word argument(s)")
        else:
            if self.graph is None or self.strands is not None:
                raise ValueError(f"{self.command} takes --graph and no --strands")
            if self.command in ("inversions", "essential") and len(self.words) != 1:
                raise ValueError(f"{self.command} takes one word argument")
            if self.command in ("roots", "surface") and self.words:
                raise ValueError(f"{self.command} takes no word arguments")
        if self.full and self.depth is not None:
            raise ValueError("--full and --depth are mutually exclusive")
        return self


class CommandResult(BaseModel):
    """Records printed by a command and its exit status."""

    exit_code: int = Field(0, description="0 success, 1 domain error, 2 usage error")
    records: List[tuple[str, str]] = Field(
        default_factory=list,
        description="Ordered key=value records"
    )
