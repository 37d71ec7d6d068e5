"""
Builders for the tables and reports served by the CLI and the HTTP service.
"""
import logging
from typing import Iterable, List, Optional

from claspkit.clasp_engine import KappaTable, clasp_exists_at, domain_keys, expansion_certificate
from claspkit.errors import BadPath, ClaspKitError
from claspkit.fusion import FusionContext, check_ell8_identity, is_negligible, lowest_alcove_interior, quantum_dim_at, upper_closure_weights
from claspkit.models import (
    DimsEntryModel, DimsResponse, ExistenceReportModel, ExpandResponse, ExpansionCertificateModel,
    FusionResponse, FusionWeightModel, KappaMode, KappaRecordModel, KappaTableResponse, RationalFunctionModel,
)
from claspkit.render import format_rf
from claspkit.rep_combinatorics import WeightWord, decompose, dim_hom, quantum_dim, weyl_dim
from claspkit.root_data import Weight

logger = logging.getLogger(__name__)


def parse_range(text: str) -> range:
    """Inclusive range "lo..hi" or a single integer"""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise ClaspKitError(f"Cannot parse range '{text}', expected 'lo..hi'")
    if lo < 0 or hi < lo:
        raise ClaspKitError(f"Range '{text}' must satisfy 0 <= lo <= hi")
    return range(lo, hi + 1)


def parse_path(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    letters = text.replace(",", "").strip()
    if not letters or any(ch not in "12" for ch in letters):
        raise BadPath(f"Path '{text}' must be a string over '1' and '2'")
    return [int(ch) for ch in letters]


def kappa_table(a_range: Iterable[int], b_range: Iterable[int], mu: Optional[Weight] = None,
                mode: KappaMode = KappaMode.CLOSED, recursive: Optional[KappaTable] = None) -> KappaTableResponse:
    closed = KappaTable("closed")
    recursive = recursive or KappaTable("recursive")
    records = []
    mismatches = 0
    for a in a_range:
        for b in b_range:
            for key in domain_keys(Weight(a, b)):
                if mu is not None and key.mu != mu:
                    continue
                source = recursive if mode == KappaMode.RECURSIVE else closed
                value = source.kappa(key.lam, key.mu)
                record = KappaRecordModel(a=a, b=b, mu=key.mu.as_list(), value=RationalFunctionModel.from_rf(value))
                if mode == KappaMode.BOTH:
                    other = recursive.kappa(key.lam, key.mu)
                    record.recursive = RationalFunctionModel.from_rf(other)
                    record.matches = other == value
                    mismatches += 0 if record.matches else 1
                records.append(record)
    if mismatches:
        logger.warning("%d kappa values disagree between recursion and closed form", mismatches)
    return KappaTableResponse(mode=mode, count=len(records), mismatches=mismatches, records=records)


def expand_report(target: Weight, path: Optional[List[int]] = None, ell: Optional[int] = None) -> ExpandResponse:
    certificate = expansion_certificate(target, path)
    existence = None
    if ell is not None:
        existence = ExistenceReportModel.from_report(clasp_exists_at(target, ell, path))
    return ExpandResponse(certificate=ExpansionCertificateModel.from_certificate(certificate), existence=existence)


def fusion_report(ell: int) -> FusionResponse:
    ctx = FusionContext(ell)
    interior = lowest_alcove_interior(ctx)
    upper = upper_closure_weights(ctx)
    weights = []
    for region, group in (("interior", interior), ("upper_closure", upper)):
        for lam in group:
            weights.append(FusionWeightModel(
                weight=lam.as_list(),
                region=region,
                negligible=is_negligible(lam, ctx),
                quantum_dim=format_rf(quantum_dim(lam)),
                value_at_root=[str(c) for c in quantum_dim_at(lam, ctx).coeffs],
            ))
    return FusionResponse(
        ell=ell,
        parity=ctx.parity,
        upper_closure=[w.as_list() for w in upper],
        interior=[w.as_list() for w in interior],
        weights=weights,
        ell8_identity=check_ell8_identity(ell),
    )


def dims_report(word: WeightWord) -> DimsResponse:
    counts = decompose(word)
    entries = [
        DimsEntryModel(weight=lam.as_list(), multiplicity=count, weyl_dim=weyl_dim(lam),
                       quantum_dim=format_rf(quantum_dim(lam)))
        for lam, count in counts.items()
    ]
    return DimsResponse(
        word=str(word),
        entries=entries,
        dim_end=dim_hom(word, word),
        total_dim=sum(e.multiplicity * e.weyl_dim for e in entries),
    )
