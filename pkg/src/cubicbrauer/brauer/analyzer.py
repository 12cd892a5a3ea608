"""
The Brauer group analysis of a cubic surface over Q at a prime p.

This module defines the analyzer service. It classifies the reduction,
and for a cone over a smooth cubic it builds the 27 lines over the
ramified extension Q_p^nr(p^(1/3)), computes the inertia action on Pic,
checks the conditions of the plane-section argument and assembles a report
whose verdicts are emitted only when every check they rest on has passed.

Errors raised by any stage propagate unchanged (fail-stop); the only
conditions turned into a report are those outside the theorem's
hypotheses, which yield status ``theorem-inapplicable``.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass, field

from ..arith.eisenstein import EisensteinRing
from ..arith.finite_field import FiniteField
from ..arith.forms import HomogeneousForm
from ..arith.padic import teichmuller_lift
from ..arith.polynomials import field_embedding
from ..config import CubicBrauerConfig
from ..curve.group import CurveGroup, group_structure
from ..curve.plane_cubic import (
    CurvePoint,
    PlaneCubic,
    flex_splitting_field,
    flexes,
    point_count,
)
from ..errors import (
    ActionMismatchError,
    EnumerationTooLargeError,
    FlexCountError,
    NotAConeError,
    PreconditionError,
    TheoremInapplicableError,
    UnitConditionError,
)
from ..lattice.cohomology import CohomologyResult, h1_cyclic, joint_h0, tate_h0_cyclic
from ..lattice.picard import (
    RANK,
    LatticeAction,
    PicLattice,
    action_from_line_permutation,
    build_pic_lattice,
)
from ..lines.configuration import (
    LineTriple,
    common_plane,
    frobenius_permutation,
    group_into_triples,
    identify_configuration,
    incidence_matrix,
    normalizes_sigma,
    permutation_cycles,
    sigma_action,
    transport_permutation,
)
from ..lines.lifting import LiftedLine, hensel_lift_line, line_residual, pull_back_lines
from ..lines.plucker import ProjectiveLine
from ..lines.triple_cover import (
    CoverLine,
    construct_smooth_cover_model,
    lines_on_triple_cover,
    omega_residue,
    working_field,
)
from ..model.cone import (
    ConeNormalForm,
    GoodReductionCertificate,
    cone_normal_form,
    good_plane_section,
    reduce_fully,
    vertex_no_lift_check,
)
from ..model.surface import (
    CubicSurfaceModel,
    ReductionKind,
    ReductionType,
    candidate_primes,
    classify_reduction,
    normalize_flat,
)
from ..models.report import (
    AnalysisReport,
    CheckResult,
    CohomologyRecord,
    CurveRecord,
    LineRecord,
    LinesDump,
    ReductionRecord,
    SurveyReport,
    Verdict,
)
from .flex_map import (
    FlexMap,
    check_image_contains_three_torsion,
    check_kernel_tate_vanishes,
    flex_map,
)
from .linear_algebra import verify_surjectivity

logger = logging.getLogger(__name__)

# Checks of the cone analysis, in report order.
CONE_CHECKS = (
    "lines-lifted",
    "triples-over-flexes",
    "triples-coplanar",
    "triples-sum-to-plane-class",
    "sigma-cyclic-on-triples",
    "frobenius-normalizes-sigma",
    "h0-plane-class",
    "h1-bound",
    "plane-section-point",
    "flex-image-three-torsion",
    "kernel-tate-vanishes",
    "h0-injection",
    "dual-surjectivity",
    "vertex-no-lift",
)


@dataclass
class ConePipeline:
    """Intermediate results of the line and cohomology stages."""

    nf: ConeNormalForm
    curve: PlaneCubic
    field: FiniteField
    ring: EisensteinRing
    smooth_form: HomogeneousForm
    cover_lines: list[CoverLine]
    lifted: list[LiftedLine]
    x_lines: list[ProjectiveLine]
    triples: list[LineTriple]
    sigma: tuple[int, ...]
    frobenius: tuple[int, ...]
    bijection: tuple[int, ...]
    sigma_action: LatticeAction
    frobenius_action: LatticeAction
    cohomology: CohomologyResult
    tate: tuple[int, ...]
    decomposition_rank: int

    @property
    def precision(self) -> int:
        return self.ring.precision


@dataclass
class _Stopwatch:
    timings: dict[str, float] = field(default_factory=dict)

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        logger.info("stage %s started", name)
        yield
        elapsed = time.perf_counter() - start
        self.timings[name] = round(self.timings.get(name, 0.0) + elapsed, 4)
        logger.info("stage %s finished in %.2fs", name, elapsed)


def _check(name: str, anchor: str, holds: bool, detail: str) -> CheckResult:
    return CheckResult(name=name, anchor=anchor, status="passed" if holds else "failed",
                       detail=detail)


def _add_verdict(report: AnalysisReport, key: str, statement: str, anchor: str,
                 cites: Sequence[str]) -> bool:
    """Append a verdict when every cited check passed; report whether it was added."""
    missing = [name for name in cites
               if (check := report.check(name)) is None or not check.passed]
    if missing:
        logger.warning("verdict %s withheld: checks %s did not pass", key, missing)
        report.notes.append(f"verdict {key} withheld: checks {', '.join(missing)} did not pass")
        return False
    report.verdicts.append(Verdict(key=key, statement=statement, anchor=anchor, cites=list(cites)))
    return True


def coplanarity_check(pipeline: ConePipeline) -> CheckResult:
    """
    Each triple must lie in a plane twice over: the three distinct lines of
    the smooth special fibre exactly, and the cone-model lines to half the
    working precision.
    """
    threshold = max(1, pipeline.precision // 2)
    exact = cone = 0
    for triple in pipeline.triples:
        residues = [pipeline.lifted[i].residue_line for i in triple.indices]
        if len({line.key() for line in residues}) == 3 and common_plane(residues) is not None:
            exact += 1
        if common_plane([pipeline.x_lines[i] for i in triple.indices], threshold) is not None:
            cone += 1
    n = len(pipeline.triples)
    return _check(
        "triples-coplanar", "flexes-coplanar-triples", n > 0 and exact == cone == n,
        f"{exact} of {n} triples coplanar mod Pi on the smooth model, {cone} of {n} on the "
        f"cone model to precision Pi^{threshold}",
    )


def normalization_check(pipeline: ConePipeline) -> CheckResult:
    p = pipeline.nf.p
    holds = normalizes_sigma(pipeline.frobenius, pipeline.sigma, p)
    return _check(
        "frobenius-normalizes-sigma", "decomposition-group", holds,
        f"Frobenius {'conjugates' if holds else 'does not conjugate'} sigma to "
        f"sigma^{p % 3}",
    )


def surjectivity_check(h1_invariants: Sequence[int]) -> CheckResult:
    """
    The evaluation lemma on the F_3-space dual to H1: every independent
    family of at most three functionals hits every target.
    """
    dimension = len(h1_invariants)
    elementary = dimension > 0 and all(d == 3 for d in h1_invariants)
    if not elementary:
        return _check("dual-surjectivity", "surjectivity-linear-algebra", False,
                      f"H1 invariants {list(h1_invariants)} do not form a nonzero F_3-space")
    sweep = verify_surjectivity(dimension)
    return _check(
        "dual-surjectivity", "surjectivity-linear-algebra", sweep.holds,
        f"{sweep.independent} independent families on F_3^{dimension} hit every target, "
        f"{sweep.dependent} dependent families rejected, {len(sweep.failures)} failures",
    )


def galois_action_on_pic(triples: Sequence[LineTriple], sigma: Sequence[int],
                         bijection: Sequence[int], lattice: PicLattice | None = None
                         ) -> LatticeAction:
    """
    The action of sigma on Pic, in the abstract basis.

    Args:
        triples: the nine triples of lines over the flexes
        sigma: permutation of the geometric line indices
        bijection: geometric index -> abstract index

    Returns:
        An order-3 lattice action

    Raises:
        ActionMismatchError: If some cycle of sigma leaves its triple
    """
    blocks = {frozenset(t.indices) for t in triples}
    for cycle in permutation_cycles(sigma):
        if len(cycle) != 3 or frozenset(cycle) not in blocks:
            raise ActionMismatchError(f"sigma cycle {cycle} is not one of the triples")
    action = action_from_line_permutation(transport_permutation(sigma, bijection), lattice)
    if action.order != 3:
        raise ActionMismatchError(f"sigma acts on Pic with order {action.order}")
    return action


def decomposition_h0(sigma_action: LatticeAction, frobenius_action: LatticeAction) -> int:
    """Rank of the classes fixed by both sigma and Frobenius."""
    rank, _ = joint_h0([sigma_action, frobenius_action])
    return rank


def remark_triviality_condition(curve: PlaneCubic) -> bool:
    """
    True when the Jacobian of the curve has no nontrivial F_p-rational
    3-torsion. A genus-one curve over F_p has a point, so its Jacobian is
    the curve itself and the condition reads 3 does not divide #C(F_p).
    """
    return point_count(curve, 1) % 3 != 0


def _matrix_rows(matrix: object) -> list[list[int]]:
    return [[int(x) for x in row] for row in matrix]  # type: ignore[attr-defined]


def _reduction_record(reduction: ReductionType) -> ReductionRecord:
    return ReductionRecord(
        kind=reduction.kind.value,
        certificate=reduction.certificate,
        vertex=list(reduction.vertex) if reduction.vertex is not None else None,
        base_curve=str(reduction.base_curve) if reduction.base_curve is not None else None,
    )


def _with_cone_data(record: ReductionRecord, nf: ConeNormalForm,
                    original_s: int | None = None) -> ReductionRecord:
    return record.model_copy(update={
        "s": nf.s if original_s is None else original_s,
        "a": str(nf.a),
        "a_is_unit": nf.a_is_unit,
        "transform": [list(row) for row in nf.transform],
        "scalings": nf.scalings,
    })


class BrauerAnalyzer:
    """
    Service running the local analysis at one prime and the survey over
    several.

    The analyzer holds only its precision; every call builds its own
    pipeline, so one instance can be reused across inputs.
    """

    def __init__(self, precision: int | None = None) -> None:
        """
        Initialize the analyzer.

        The unramified base ring carries ``arithmetic.unramified_precision``
        digits, raised when needed to carry the Pi-adic precision.

        Args:
            precision: Pi-adic working precision; the configured
                ``arithmetic.eisenstein_precision`` when omitted
        """
        self.precision = precision or CubicBrauerConfig.eisenstein_precision()
        if self.precision < 3:
            raise PreconditionError(f"precision must be at least 3, got {self.precision}")
        self.base_precision = max(CubicBrauerConfig.unramified_precision(), -(-self.precision // 3))
        self.lattice = build_pic_lattice()

    # classification

    def classify(self, form: HomogeneousForm, p: int) -> tuple[CubicSurfaceModel, ReductionType]:
        model = normalize_flat(form, p)
        return model, classify_reduction(model)

    def prepare_cone(self, model: CubicSurfaceModel, reduction: ReductionType) -> ConeNormalForm:
        """
        The cone normal form of a surface whose reduction is a cone.

        Raises:
            NotAConeError: If the reduction is not a cone over a smooth cubic
        """
        if not reduction.is_cone:
            raise NotAConeError(f"the reduction is {reduction.kind.value}, not a cone",
                                stage="model")
        return cone_normal_form(model, reduction)

    def reduce_cone(self, nf: ConeNormalForm) -> ConeNormalForm | GoodReductionCertificate:
        """
        Remove multiples of 3 from s.

        Raises:
            UnitConditionError: If a is divisible by p
        """
        if not nf.a_is_unit:
            raise UnitConditionError(f"a = {nf.a} is divisible by {nf.p}", stage="model")
        if nf.s < 3:
            return nf
        return reduce_fully(nf)

    def classification(self, form: HomogeneousForm, p: int) -> ReductionRecord:
        """The reduction type with s, a and the coordinate change for cones."""
        model, reduction = self.classify(form, p)
        record = _reduction_record(reduction)
        if reduction.is_cone:
            record = _with_cone_data(record, self.prepare_cone(model, reduction))
        return record

    # the line and cohomology stages

    def run_cone_pipeline(self, nf: ConeNormalForm,
                          stopwatch: _Stopwatch | None = None) -> ConePipeline:
        """
        Build the 27 lines of the cone model and the Galois action on them.

        Args:
            nf: a cone normal form with a a unit and s in {1, 2}

        Returns:
            The pipeline with lines, permutations, lattice actions and cohomology

        Raises:
            CubicBrauerError: Any failure of the line or lattice stages
        """
        stopwatch = stopwatch or _Stopwatch()
        with stopwatch.stage("lines"):
            curve = good_plane_section(nf)
            target = working_field(curve, nf.a_residue)
            ring = EisensteinRing.over(target, self.precision, self.base_precision)
            smooth_form = construct_smooth_cover_model(nf, ring)
            cover_lines = lines_on_triple_cover(curve, nf.a_residue, target)
            lifted = [hensel_lift_line(line, smooth_form, self.precision) for line in cover_lines]
            x_lines = pull_back_lines(lifted, nf.s)
            triples = group_into_triples(x_lines, curve)
            logger.info("27 lines over %s at precision Pi^%d", target, self.precision)

        with stopwatch.stage("galois"):
            omega = teichmuller_lift(omega_residue(target), ring.base)
            sigma = sigma_action(lifted, x_lines, omega, nf.s)
            frobenius = frobenius_permutation(lifted, sigma)
            incidence = incidence_matrix([item.line for item in lifted])
            bijection = identify_configuration(incidence, self.lattice)
            s_action = galois_action_on_pic(triples, sigma, bijection, self.lattice)
            f_action = action_from_line_permutation(
                transport_permutation(frobenius, bijection), self.lattice
            )

        with stopwatch.stage("cohomology"):
            cohomology = h1_cyclic(s_action)
            tate = tate_h0_cyclic(s_action)
            decomposition_rank = decomposition_h0(s_action, f_action)
            logger.info("H0 rank %d, H1 invariants %s", cohomology.h0_rank,
                        cohomology.h1_invariants)

        return ConePipeline(
            nf=nf, curve=curve, field=target, ring=ring, smooth_form=smooth_form,
            cover_lines=cover_lines, lifted=lifted, x_lines=x_lines, triples=triples,
            sigma=sigma, frobenius=frobenius, bijection=bijection, sigma_action=s_action,
            frobenius_action=f_action, cohomology=cohomology, tate=tate,
            decomposition_rank=decomposition_rank,
        )

    def flex_stage(self, pipeline: ConePipeline) -> tuple[CurveGroup, FlexMap]:
        """
        The curve group over the field of the flexes and the map from Pic.

        Raises:
            FlexCountError: If a line's flex is not a flex of the curve
            InconsistentRelationsError: If the map is not linear on the lines
        """
        curve = pipeline.curve
        flex_field = flex_splitting_field(curve)
        group = group_structure(curve, flex_field.k)
        embed = field_embedding(flex_field, pipeline.field)
        by_image = {
            CurvePoint.normalized([embed(c) for c in point.coords]): point
            for point, _ in flexes(curve, flex_field)
        }
        abstract: list[CurvePoint | None] = [None] * 27
        for index, cover in enumerate(pipeline.cover_lines):
            point = by_image.get(cover.flex)
            if point is None:
                raise FlexCountError(f"flex {cover.flex} of line {index} is not a flex over "
                                     f"{flex_field}", stage="brauer")
            abstract[pipeline.bijection[index]] = point
        line_flexes = [pt for pt in abstract if pt is not None]
        return group, flex_map(line_flexes, group, self.lattice)

    # records

    def curve_record(self, curve: PlaneCubic, k: int | None = None) -> CurveRecord:
        """Group structure of the curve over F_{p^k} (default: the field of its flexes)."""
        k = k or flex_splitting_field(curve).k
        group = group_structure(curve, k)
        all_flexes = sorted(flexes(curve), key=lambda item: (item[1], item[0].sort_key()))
        return CurveRecord(
            curve=str(curve),
            field_order=group.field.order,
            point_count=point_count(curve, 1),
            invariants=list(group.invariants),
            flexes=[str(pt) for pt, _ in all_flexes],
            flex_degrees=[d for _, d in all_flexes],
            three_torsion_order=group.three_torsion.order,
        )

    def cohomology_record(self, pipeline: ConePipeline) -> CohomologyRecord:
        result = pipeline.cohomology
        return CohomologyRecord(
            h0_rank=result.h0_rank,
            h0_basis=[list(v) for v in result.h0_basis],
            h1_invariants=list(result.h1_invariants),
            tate_h0=list(pipeline.tate),
            decomposition_h0_rank=pipeline.decomposition_rank,
            action_matrix=_matrix_rows(pipeline.sigma_action.matrix),
            sigma_cycles=[list(c) for c in permutation_cycles(pipeline.sigma)],
            frobenius_cycles=[list(c) for c in permutation_cycles(pipeline.frobenius)],
        )

    def input_line(self, nf: ConeNormalForm, line: ProjectiveLine) -> ProjectiveLine:
        """A line of the cone model in the coordinates of the input form."""
        ring = line.coords[0].ring
        factor = ring.pi_power(3 * nf.scalings)
        scale = [factor, factor, factor, ring.one]
        rows = []
        for row in line.rows:
            scaled = [x * f for x, f in zip(row, scale)]
            rows.append([sum((t * x for t, x in zip(trow, scaled)), ring.zero)
                         for trow in nf.transform])
        return ProjectiveLine.from_rows(*rows)

    def line_records(self, pipeline: ConePipeline) -> list[LineRecord]:
        nf = pipeline.nf
        cone_form = nf.form.map_coefficients(pipeline.ring.coerce, pipeline.ring)
        records = []
        for index, (cover, item, x_line) in enumerate(
                zip(pipeline.cover_lines, pipeline.lifted, pipeline.x_lines)):
            records.append(LineRecord(
                index=index,
                label=self.lattice.labels[pipeline.bijection[index]],
                flex=str(cover.flex),
                residue_degree=item.degree,
                smooth_model_reduction=[str(c) for c in item.residue_line.coords],
                cone_reduction=[str(c) for c in x_line.reduce().coords],
                input_reduction=[str(c) for c in self.input_line(nf, x_line).reduce().coords],
                residual_valuation=line_residual(cone_form, x_line),
            ))
        return records

    # entry points

    def lines(self, form: HomogeneousForm, p: int) -> LinesDump:
        """
        The 27 lines of a cone-type surface with their triples.

        Raises:
            NotAConeError: If the reduction is not a cone
            PreconditionError: If the surface turns out to have good reduction
        """
        model, reduction = self.classify(form, p)
        current = self.reduce_cone(self.prepare_cone(model, reduction))
        if isinstance(current, GoodReductionCertificate):
            raise PreconditionError(
                f"the surface has good reduction at {p}; {current.describe()}", stage="model"
            )
        pipeline = self.run_cone_pipeline(current)
        return LinesDump(
            form=str(form), prime=p, precision=self.precision,
            field_order=pipeline.field.order,
            lines=self.line_records(pipeline),
            triples=[list(t.indices) for t in pipeline.triples],
            sigma_cycles=[list(c) for c in permutation_cycles(pipeline.sigma)],
        )

    def cohomology(self, form: HomogeneousForm, p: int) -> CohomologyRecord:
        """H0, H1 and the Tate H0 of Pic under inertia; trivial action for good reduction."""
        model, reduction = self.classify(form, p)
        if reduction.kind is ReductionKind.SMOOTH:
            return self._trivial_cohomology()
        current = self.reduce_cone(self.prepare_cone(model, reduction))
        if isinstance(current, GoodReductionCertificate):
            return self._trivial_cohomology()
        return self.cohomology_record(self.run_cone_pipeline(current))

    def _trivial_cohomology(self) -> CohomologyRecord:
        action = LatticeAction.trivial(RANK, 3)
        result = h1_cyclic(action)
        return CohomologyRecord(
            h0_rank=result.h0_rank,
            h0_basis=[list(v) for v in result.h0_basis],
            h1_invariants=list(result.h1_invariants),
            tate_h0=list(tate_h0_cyclic(action)),
            action_matrix=_matrix_rows(action.matrix),
        )

    def analyze(self, form: HomogeneousForm, p: int) -> AnalysisReport:
        """
        Run the full local analysis at p.

        Args:
            form: the cubic form over Q
            p: a prime >= 5

        Returns:
            A report with status ``verdict``, ``theorem-inapplicable`` or
            ``classified-only``

        Raises:
            CubicBrauerError: Any stage failure other than an inapplicable theorem
        """
        stopwatch = _Stopwatch()
        with stopwatch.stage("classify"):
            model, reduction = self.classify(form, p)
        record = _reduction_record(reduction)
        report = AnalysisReport(status="classified-only", form=str(form), prime=p,
                                precision=self.precision, reduction=record)

        if reduction.kind is ReductionKind.SMOOTH:
            self._good_reduction(report, reduction.certificate)
        elif reduction.is_cone:
            self._cone(report, model, reduction, stopwatch)
        else:
            report.notes.append(
                f"reduction type {reduction.kind.value} is outside the scope of the analysis"
            )
        report.timings = dict(stopwatch.timings)
        logger.info("analysis at %d finished with status %s", p, report.status)
        return report

    def _good_reduction(self, report: AnalysisReport, certificate: str,
                        check_name: str = "special-fibre-smooth") -> None:
        report.checks.append(_check(check_name, "good-reduction-smooth-fibre", True,
                                    certificate))
        trivial = self._trivial_cohomology()
        report.cohomology = trivial
        report.checks.append(_check(
            "inertia-trivial", "good-reduction-inertia", not trivial.h1_invariants,
            "lines of a smooth model are unramified; H1 of the trivial action on Pic is "
            f"{trivial.h1_invariants or 0}",
        ))
        if _add_verdict(report, "good-reduction-constant-evaluation",
                        "the evaluation map of every element of Br1 X on X(Q_p) is constant",
                        "good-reduction-constant", [check_name, "inertia-trivial"]):
            report.status = "verdict"

    def _cone(self, report: AnalysisReport, model: CubicSurfaceModel,
              reduction: ReductionType, stopwatch: _Stopwatch) -> None:
        with stopwatch.stage("normal-form"):
            nf = self.prepare_cone(model, reduction)
        report.reduction = _with_cone_data(report.reduction, nf)
        try:
            current = self.reduce_cone(nf)
            if isinstance(current, GoodReductionCertificate):
                report.reduction = report.reduction.model_copy(
                    update={"scalings": current.scalings}
                )
                report.notes.append(f"s = {nf.s} is divisible by 3: {current.describe()}")
                self._good_reduction(report, current.describe(), "scaling-reaches-good-reduction")
                return
            if current.scalings:
                report.notes.append(
                    f"s reduced from {nf.s} to {current.s} by {current.scalings} scaling step(s)"
                )
                report.reduction = _with_cone_data(report.reduction, current, nf.s)
            pipeline = self.run_cone_pipeline(current, stopwatch)
        except TheoremInapplicableError as exc:
            report.status = "theorem-inapplicable"
            report.notes.append(f"theorem inapplicable [{exc.stage}]: {exc}")
            if nf.a == 0:
                report.notes.append(
                    "a = 0: the cone model has no X3^3 term, so the special fibre of the "
                    "triple cover is singular; the Brauer group of such surfaces is not computed"
                )
            elif not nf.a_is_unit:
                report.notes.append(f"a = {nf.a} is divisible by {model.p}")
            logger.warning("theorem inapplicable at %d: %s", model.p, exc)
            return

        report.cohomology = self.cohomology_record(pipeline)
        self._line_checks(report, pipeline)
        self._cohomology_checks(report, pipeline)
        with stopwatch.stage("flex-map"):
            report.curve = self.curve_record(pipeline.curve)
            self._flex_checks(report, pipeline)
        with stopwatch.stage("vertex"):
            self._vertex_check(report, pipeline.nf)
        self._cone_verdicts(report, pipeline)

    def _line_checks(self, report: AnalysisReport, pipeline: ConePipeline) -> None:
        m = pipeline.precision
        residuals = [line_residual(pipeline.smooth_form, item.line) for item in pipeline.lifted]
        report.checks.append(_check(
            "lines-lifted", "flexes-lines-over-ramified-extension", min(residuals) >= m,
            f"27 lines over {pipeline.field} with residual valuation >= {min(residuals)} "
            f"(target {m})",
        ))
        flex_points = {t.flex for t in pipeline.triples}
        report.checks.append(_check(
            "triples-over-flexes", "flexes-three-to-one",
            len(pipeline.triples) == 9 and len(flex_points) == 9,
            f"{len(pipeline.triples)} triples over {len(flex_points)} distinct flexes",
        ))
        report.checks.append(coplanarity_check(pipeline))
        hyperplane = self.lattice.hyperplane
        sums = []
        for triple in pipeline.triples:
            vectors = [self.lattice.lines[pipeline.bijection[i]] for i in triple.indices]
            sums.append(tuple(sum(col) for col in zip(*vectors)) == hyperplane)
        report.checks.append(_check(
            "triples-sum-to-plane-class", "flexes-coplanar-triples", all(sums),
            f"{sum(sums)} of {len(sums)} triples sum to H in Pic",
        ))
        blocks = {frozenset(t.indices) for t in pipeline.triples}
        cycles = permutation_cycles(pipeline.sigma)
        report.checks.append(_check(
            "sigma-cyclic-on-triples", "flexes-sigma-cycles",
            all(frozenset(c) in blocks for c in cycles) and len(cycles) == 9,
            f"sigma has cycles {[list(c) for c in cycles]}",
        ))
        report.checks.append(normalization_check(pipeline))

    def _cohomology_checks(self, report: AnalysisReport, pipeline: ConePipeline) -> None:
        result = pipeline.cohomology
        h = tuple(self.lattice.hyperplane)
        minus_h = tuple(-x for x in h)
        report.checks.append(_check(
            "h0-plane-class", "cone-h0-plane-section",
            result.h0_rank == 1 and result.h0_basis[0] in (h, minus_h),
            f"H0 of rank {result.h0_rank} with basis {[list(v) for v in result.h0_basis]}",
        ))
        report.checks.append(_check(
            "h1-bound", "cone-h1-bound", result.h1_invariants == (3, 3),
            f"H1 invariants {list(result.h1_invariants)}",
        ))

    def _flex_checks(self, report: AnalysisReport, pipeline: ConePipeline) -> None:
        count = point_count(pipeline.curve, 1)
        report.checks.append(_check(
            "plane-section-point", "cone-plane-section-point", count > 0,
            f"the plane section has {count} points over F_{pipeline.nf.p}",
        ))
        group, fm = self.flex_stage(pipeline)
        torsion = check_image_contains_three_torsion(fm)
        report.checks.append(_check(
            "flex-image-three-torsion", "reduction-three-torsion-image", torsion.holds,
            f"flex classes generate a subgroup of order {torsion.image_order} containing "
            f"the 3-torsion of order {torsion.torsion_order} in E({group.field})",
        ))
        kernel = check_kernel_tate_vanishes(fm, pipeline.sigma_action)
        report.checks.append(_check(
            "kernel-tate-vanishes", "reduction-kernel-cohomology", kernel.holds,
            f"kernel of rank {kernel.kernel_rank}: H0 rank {kernel.h0_rank}, "
            f"Tate H0 {list(kernel.tate_h0) or 0}",
        ))
        degrees = [fm.image(v)[0] for v in pipeline.cohomology.h0_basis]
        report.checks.append(_check(
            "h0-injection", "reduction-plane-class-degree",
            bool(degrees) and all(d != 0 for d in degrees),
            f"invariant classes map to divisors of degree {degrees}",
        ))
        report.checks.append(surjectivity_check(pipeline.cohomology.h1_invariants))

    def _vertex_check(self, report: AnalysisReport, nf: ConeNormalForm) -> None:
        try:
            result = vertex_no_lift_check(nf)
        except EnumerationTooLargeError as exc:
            logger.warning("vertex check skipped: %s", exc)
            report.checks.append(CheckResult(name="vertex-no-lift", anchor="cone-vertex-no-lift",
                                             status="skipped", detail=str(exc)))
            return
        report.checks.append(_check("vertex-no-lift", "cone-vertex-no-lift", result.verified,
                                    result.describe()))

    def _cone_verdicts(self, report: AnalysisReport, pipeline: ConePipeline) -> None:
        injection = ["flex-image-three-torsion", "kernel-tate-vanishes", "h0-injection",
                     "triples-sum-to-plane-class"]
        _add_verdict(report, "cone-h0-plane-section",
                     "the inertia invariants of Pic X-bar are generated by the class of a "
                     "plane section", "cone-h0-plane-section", ["h0-plane-class"])
        bound = _add_verdict(
            report, "cone-brauer-bound",
            "H1(Q_p^nr, Pic X-bar) is (Z/3)^2, so Br X / Br Q_p is trivial, Z/3 or (Z/3)^2",
            "cone-brauer-bound", ["h0-plane-class", "h1-bound", "sigma-cyclic-on-triples"],
        )
        _add_verdict(report, "cone-splitting-field",
                     "every element of Br X splits over Q_p^nr(p^(1/3))", "cone-splitting-field",
                     ["lines-lifted", "triples-over-flexes", "sigma-cyclic-on-triples"])
        _add_verdict(report, "cone-injection-plane-section",
                     "Br X / Br Q_p injects into Br C / Br Q_p for the plane section C: X3 = 0",
                     "cone-injection-plane-section", injection)
        surjective = _add_verdict(
            report, "evaluation-surjective",
            "for independent A_1, ..., A_n in Br X / Br Q_p the joint evaluation map "
            "X(Q_p) -> (Z/3)^n is surjective",
            "surjectivity", [*injection, "plane-section-point", "dual-surjectivity"],
        )
        if bound and surjective:
            _add_verdict(
                report, "no-hasse-obstruction-here",
                "a place of this type leaves no Brauer-Manin obstruction to the Hasse "
                "principle; there is an obstruction to weak approximation exactly when "
                "Br Y / Br L is nonzero",
                "no-obstruction-at-place", ["h1-bound", *injection, "dual-surjectivity"],
            )
            report.status = "verdict"
        if remark_triviality_condition(pipeline.curve):
            report.checks.append(_check(
                "rational-three-torsion-trivial", "remark-trivial-brauer", True,
                f"#C(F_{pipeline.nf.p}) = {point_count(pipeline.curve, 1)} is prime to 3",
            ))
            _add_verdict(report, "brauer-group-trivial", "Br X = Br Q_p",
                         "remark-trivial-brauer", ["rational-three-torsion-trivial", *injection])
        else:
            report.notes.append(
                f"C(F_{pipeline.nf.p}) has nontrivial 3-torsion, so the sufficient condition "
                f"for Br X = Br Q_p does not apply"
            )

    def survey(self, form: HomogeneousForm, primes: Sequence[int] | None = None) -> SurveyReport:
        """
        Analyze several places and draw the global conclusion.

        One place carrying the cone verdict rules out a Brauer-Manin
        obstruction to the existence of rational points: the evaluation
        maps there are surjective, so any adelic point can be corrected at
        that place to pair trivially with Br X.

        Args:
            form: the cubic form over Q
            primes: the places to analyze (default: the candidate primes)

        Returns:
            The survey with one report per prime
        """
        chosen = sorted(set(primes)) if primes else candidate_primes(form)
        places = []
        for p in chosen:
            logger.info("survey: analyzing p = %d", p)
            places.append(self.analyze(form, p))
        witness = next((r.prime for r in places
                        if r.cone_verdict
                        and any(v.key == "no-hasse-obstruction-here" for v in r.verdicts)), None)
        if witness is not None:
            conclusion = (
                f"no Brauer-Manin obstruction to the existence of rational points over Q: at "
                f"p = {witness} every combination of local invariants can be cancelled"
            )
        elif not chosen:
            conclusion = "inconclusive: the form has no candidate primes >= 5"
        else:
            conclusion = "inconclusive: no analyzed place satisfies the cone hypotheses"
        logger.info("survey conclusion: %s", conclusion)
        return SurveyReport(form=str(form), primes=list(chosen), places=places,
                            obstruction_free=witness is not None, conclusion=conclusion,
                            witness_prime=witness)
