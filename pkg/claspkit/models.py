from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from claspkit.clasp_engine import ClaspExpansionCertificate, ExistenceReport
from claspkit.exact_arith import LaurentPoly, RationalFunction, VARIABLES
from claspkit.identities import CorollaryCheck, GridReport, IdentityCertificate
from claspkit.render import format_rf
from claspkit.root_data import Weight


class OutputFormat(str, Enum):
    """Output format of the command line tools"""
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class KappaMode(str, Enum):
    """How kappa values are computed"""
    CLOSED = "closed"
    RECURSIVE = "recursive"
    BOTH = "both"


class VerifyScope(str, Enum):
    """Which verification pipeline to run"""
    RECURSIONS = "recursions"
    COROLLARY = "corollary"
    ALL = "all"


class TransitionType(str, Enum):
    DIRECT = "direct"
    CONDITIONAL = "conditional"


class StageDefinition(BaseModel):
    """Definition of a stage in a verification pipeline"""
    name: str
    check_name: str
    description: Optional[str] = None


class TransitionDefinition(BaseModel):
    """Definition of a transition between stages"""
    from_stage: str
    to_stage: str
    type: TransitionType = TransitionType.DIRECT
    condition: Optional[str] = None  # Python expression evaluated on state


class PipelineDefinition(BaseModel):
    """Complete pipeline definition"""
    name: str
    description: Optional[str] = None
    stages: List[StageDefinition]
    transitions: List[TransitionDefinition]
    start_stage: str
    end_stages: List[str] = Field(default_factory=list)


# ---- exact values ---------------------------------------------------------

class LaurentTermModel(BaseModel):
    exponents: List[int]
    coeff_num: str
    coeff_den: str


class LaurentPolyModel(BaseModel):
    """Terms in ascending lexicographic order on (q, A, B)"""
    variables: List[str]
    terms: List[LaurentTermModel]

    @classmethod
    def from_poly(cls, x: LaurentPoly) -> "LaurentPolyModel":
        positions = [VARIABLES.index(v) for v in x.variables]
        return cls(
            variables=list(x.variables),
            terms=[
                LaurentTermModel(
                    exponents=[exps[i] for i in positions],
                    coeff_num=str(c.numerator),
                    coeff_den=str(c.denominator),
                )
                for exps, c in x.items()
            ],
        )

    def to_poly(self) -> LaurentPoly:
        positions = [VARIABLES.index(v) for v in self.variables]
        terms = {}
        for term in self.terms:
            full = [0, 0, 0]
            for i, e in zip(positions, term.exponents):
                full[i] = e
            terms[tuple(full)] = Fraction(int(term.coeff_num), int(term.coeff_den))
        return LaurentPoly(terms, self.variables)


class RationalFunctionModel(BaseModel):
    num: LaurentPolyModel
    den: LaurentPolyModel
    text: Optional[str] = None

    @classmethod
    def from_rf(cls, x: RationalFunction) -> "RationalFunctionModel":
        return cls(num=LaurentPolyModel.from_poly(x.num), den=LaurentPolyModel.from_poly(x.den), text=format_rf(x))

    def to_rf(self) -> RationalFunction:
        return RationalFunction(self.num.to_poly(), self.den.to_poly())


# ---- kappa tables -----------------------------------------------------------

class KappaRecordModel(BaseModel):
    a: int
    b: int
    mu: List[int]
    value: RationalFunctionModel
    recursive: Optional[RationalFunctionModel] = None
    matches: Optional[bool] = None


class KappaTableResponse(BaseModel):
    mode: KappaMode
    count: int
    mismatches: int = 0
    records: List[KappaRecordModel]


# ---- verification -------------------------------------------------------------

class IdentityCertificateModel(BaseModel):
    name: str
    recursion_id: Optional[int] = None
    mu: List[int]
    stratum: str
    lhs_expr: str
    rhs_expr: str
    lhs: LaurentPolyModel
    rhs: LaurentPolyModel
    difference: LaurentPolyModel
    status: str

    @classmethod
    def from_certificate(cls, cert: IdentityCertificate) -> "IdentityCertificateModel":
        return cls(
            name=cert.name, recursion_id=cert.recursion_id, mu=cert.mu.as_list(),
            stratum=cert.stratum, lhs_expr=cert.lhs_expr, rhs_expr=cert.rhs_expr,
            lhs=LaurentPolyModel.from_poly(cert.lhs), rhs=LaurentPolyModel.from_poly(cert.rhs),
            difference=LaurentPolyModel.from_poly(cert.difference), status=cert.status,
        )


class KappaMismatchModel(BaseModel):
    a: int
    b: int
    mu: List[int]
    recursive: RationalFunctionModel
    closed: RationalFunctionModel


class GridReportModel(BaseModel):
    a_max: int
    b_max: int
    compared: int
    skipped: int
    mismatches: List[KappaMismatchModel]
    status: str

    @classmethod
    def from_report(cls, report: GridReport) -> "GridReportModel":
        return cls(
            a_max=report.a_max, b_max=report.b_max, compared=report.compared, skipped=report.skipped,
            mismatches=[
                KappaMismatchModel(
                    a=m.lam.a, b=m.lam.b, mu=m.mu.as_list(),
                    recursive=RationalFunctionModel.from_rf(m.recursive),
                    closed=RationalFunctionModel.from_rf(m.closed),
                )
                for m in report.mismatches
            ],
            status="verified" if report.ok else "failed",
        )


class CorollaryCheckModel(BaseModel):
    varpi: List[int]
    sign: int
    checked: int
    mismatches: List[List[int]]
    certificate: Optional[IdentityCertificateModel] = None
    status: str

    @classmethod
    def from_check(cls, check: CorollaryCheck) -> "CorollaryCheckModel":
        return cls(
            varpi=check.varpi.as_list(), sign=check.sign, checked=check.checked,
            mismatches=[w.as_list() for w in check.mismatches],
            certificate=IdentityCertificateModel.from_certificate(check.certificate) if check.certificate else None,
            status="verified" if check.ok else "failed",
        )


class ExecutionLogEntry(BaseModel):
    """Single entry in a pipeline execution log"""
    stage: str
    timestamp: Optional[str] = None
    summary: Dict[str, Any]
    error: Optional[str] = None


class VerifyRequest(BaseModel):
    """Request model for running a verification pipeline"""
    scope: VerifyScope = VerifyScope.ALL
    grid: Optional[int] = Field(default=None, ge=0, le=40)
    fail_fast: bool = False


class VerifyResponse(BaseModel):
    """Response model for a verification run"""
    run_id: str
    scope: VerifyScope
    status: str  # completed, failed, running
    passed: bool
    grid: int
    certificates: List[IdentityCertificateModel] = Field(default_factory=list)
    grid_report: Optional[GridReportModel] = None
    corollary: List[CorollaryCheckModel] = Field(default_factory=list)
    bracket_failures: List[int] = Field(default_factory=list)
    execution_log: List[ExecutionLogEntry] = Field(default_factory=list)
    error: Optional[str] = None


class RunSummary(BaseModel):
    run_id: str
    scope: str
    status: str
    passed: bool
    created_at: str
    updated_at: str


# ---- expansions ---------------------------------------------------------------

class CorrectionModel(BaseModel):
    mu: List[int]
    child: List[int]
    kappa: RationalFunctionModel
    kappa_inv: RationalFunctionModel


class ExpansionStepModel(BaseModel):
    weight: List[int]
    letter: int
    corrections: List[CorrectionModel]


class ExpansionCertificateModel(BaseModel):
    target: List[int]
    path: List[int]
    steps: List[ExpansionStepModel]

    @classmethod
    def from_certificate(cls, cert: ClaspExpansionCertificate) -> "ExpansionCertificateModel":
        return cls(
            target=cert.target.as_list(),
            path=list(cert.path),
            steps=[
                ExpansionStepModel(
                    weight=step.weight.as_list(),
                    letter=step.letter,
                    corrections=[
                        CorrectionModel(
                            mu=c.mu.as_list(), child=c.child.as_list(),
                            kappa=RationalFunctionModel.from_rf(c.kappa),
                            kappa_inv=RationalFunctionModel.from_rf(c.kappa_inv),
                        )
                        for c in step.corrections
                    ],
                )
                for step in cert.steps
            ],
        )


class ExistenceReportModel(BaseModel):
    target: List[int]
    ell: int
    path: List[int]
    exists: bool
    failing_lambda: Optional[List[int]] = None
    failing_mu: Optional[List[int]] = None
    vanishing: Optional[str] = None
    negligible_steps: List[List[int]] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: ExistenceReport) -> "ExistenceReportModel":
        key = report.failing_key
        return cls(
            target=report.target.as_list(), ell=report.ell, path=list(report.path), exists=report.exists,
            failing_lambda=key.lam.as_list() if key else None,
            failing_mu=key.mu.as_list() if key else None,
            vanishing=report.vanishing,
            negligible_steps=[w.as_list() for w in report.negligible_steps],
        )


class ExpandResponse(BaseModel):
    certificate: ExpansionCertificateModel
    existence: Optional[ExistenceReportModel] = None


# ---- fusion and dimensions ------------------------------------------------------

class FusionWeightModel(BaseModel):
    weight: List[int]
    region: str  # interior or upper_closure
    negligible: bool
    quantum_dim: str
    value_at_root: List[str]


class FusionResponse(BaseModel):
    ell: int
    parity: str
    upper_closure: List[List[int]]
    interior: List[List[int]]
    weights: List[FusionWeightModel]
    ell8_identity: bool


class DimsEntryModel(BaseModel):
    weight: List[int]
    multiplicity: int
    weyl_dim: int
    quantum_dim: str


class DimsResponse(BaseModel):
    word: str
    entries: List[DimsEntryModel]
    dim_end: int
    total_dim: int


def weight_from_list(values: List[int]) -> Weight:
    return Weight(values[0], values[1])
