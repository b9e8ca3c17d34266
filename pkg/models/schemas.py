"""
Pydantic models for verdicts and reports.
Every verdict carries the certificate needed to re-verify it.
"""

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class _Verdict(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class SigmaVerdict(_Verdict):
    """Position of a braid in the filtration P_1, ..., P_{n-1} of the positive cone."""

    kind: Literal["positive", "negative", "identity"] = Field(
        description="Positive(k), Negative(k) or Identity"
    )
    index: int = Field(
        default=0,
        ge=0,
        description="Main generator index k; 0 for the identity"
    )
    certificate: Tuple[int, ...] = Field(
        default=(),
        description="Handle-free word whose only sigma_k letters all carry the reported sign"
    )
    steps: int = Field(
        default=0,
        ge=0,
        description="Number of handle reductions performed"
    )

    @property
    def is_positive(self) -> bool:
        return self.kind == "positive"


class OrbitVerdict(_Verdict):
    """Behaviour of the orbit m -> w^m alpha of a root."""

    kind: Literal["periodic", "even", "odd", "unknown"] = Field(
        description="Periodic, Even or Odd (decisive) or Unknown"
    )
    period: Optional[int] = Field(
        default=None,
        description="Smallest p >= 1 with w^p alpha = alpha (periodic only)"
    )
    count: Optional[int] = Field(
        default=None,
        description="Number of separation events (even/odd only)"
    )
    events: Tuple[int, ...] = Field(
        default=(),
        description="Exponents m at which alpha separates w^m and w^(m+1)"
    )

    @property
    def is_decisive(self) -> bool:
        return self.kind != "unknown"


class EssentialVerdict(_Verdict):
    """Outcome of the bounded essential-element certificate."""

    kind: Literal["certified_essential", "not_essential", "inconclusive"] = Field(
        description="CertifiedEssential, NotEssential or Inconclusive"
    )
    reason: Optional[Literal["proper-support", "finite-order"]] = Field(
        default=None,
        description="Witness type for NotEssential"
    )
    witnesses: Tuple[Any, ...] = Field(
        default=(),
        description="Positive odd roots whose reflections generate W (certified only)"
    )
    support: Tuple[str, ...] = Field(
        default=(),
        description="Vertices occurring in a reduced word of w"
    )
    reached: Tuple[str, ...] = Field(
        default=(),
        description="Vertices whose simple root lies in the reflection closure"
    )
    unknown_roots: int = Field(
        default=0,
        ge=0,
        description="Roots whose orbit verdict stayed Unknown"
    )
    bounds: Dict[str, int] = Field(
        default_factory=dict,
        description="Search bounds used (depth, m_max, closure_depth)"
    )


class PeriodicWitness(_Verdict):
    """Certificate f^m = Delta^(2k)."""

    m: int = Field(ge=1, description="Power of f")
    k: int = Field(description="Half exponent of the Delta power")


class ClassVerdict(_Verdict):
    """Algebraic Nielsen-Thurston verdict for a braid."""

    kind: Literal["periodic", "reducible", "no_witness_found"] = Field(
        description="Periodic, Reducible or NoWitnessFound"
    )
    periodic: Optional[PeriodicWitness] = Field(
        default=None,
        description="(m, k) with f^m = Delta^(2k)"
    )
    witness: Optional[Any] = Field(
        default=None,
        description="ParabolicRep with a finite f-orbit"
    )
    orbit_length: Optional[int] = Field(
        default=None,
        description="Smallest j such that f^j normalizes the witness"
    )
    radius: int = Field(
        default=0,
        ge=0,
        description="Conjugator search radius used"
    )


class RelationReport(_Verdict):
    """Result of checking the Artin relations on transvection matrices."""

    checked: int = Field(default=0, ge=0, description="Number of relations checked")
    failures: List[str] = Field(
        default_factory=list,
        description="Human readable description of every failing relation"
    )

    @property
    def ok(self) -> bool:
        return not self.failures


class SurfaceReport(_Verdict):
    """Topological summary of the monodromy surface."""

    order: Tuple[str, ...] = Field(description="Total vertex order used for the construction")
    genus: int = Field(ge=0, description="Genus g")
    boundary: int = Field(ge=0, description="Number of boundary components b")
    euler_traced: int = Field(description="V - E + F of the quotient square complex")
    euler_formula: int = Field(description="Minus the number of bonds with m = 3")
    h1_rank: int = Field(ge=0, description="Rank of H_1 of the surface, c - chi over c graph components")
    form_rank: int = Field(ge=0, description="Rank of the intersection matrix J")
    convention: str = Field(
        default="J[s][t]=+1 for s<t",
        description="Sign convention of the intersection form"
    )
