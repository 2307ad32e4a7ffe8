"""
Randomized and fixture-driven checks of the toolkit's theorems.

Every trial draws its own seed from a generator seeded with the suite seed,
so a report only depends on ``(name, seed, trials)`` and not on how trials
are spread over worker processes.
"""

import concurrent.futures
import functools
import logging
import random
import time
import typing

import attr

from ._error import ArthurLabError, UnknownFixture
from .config import Settings
from .fixtures import load_corpus, run_case
from .halfint import HalfInt
from .multisegments import (
    e_plus_lower,
    e_rho_minus,
    validate_ems,
)
from .operators import apply, dual_transport, enumerate_raising
from .orders import OrderKind, compare
from .params import (
    TRIVIAL,
    ArthurSummand,
    Family,
    GroupSpec,
    LocalArthurParameter,
    dual_psi,
    extremal_parameters_of_lambda,
    partition_of_phi,
    phi_of,
)
from .partitions import OrderResult, dominance_compare
from .sampling import random_ems, random_parameter, random_unramified
from .vogan import (
    closure_compare,
    partition_from_triangle,
    rank_entry_by_count,
    rank_entry_closed_form,
    rank_triangles,
)

logger = logging.getLogger(__name__)

Failure = typing.Optional[str]


@attr.s(frozen=True, slots=True)
class SuiteReport:
    name = attr.ib(type=str)
    trials = attr.ib(type=int)
    passed = attr.ib(type=int)
    failed = attr.ib(type=int)
    counterexample = attr.ib(type=typing.Optional[str])
    seconds = attr.ib(type=float)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def __str__(self):
        text = "{}: {} trials, {} passed, {} failed in {:.2f}s".format(
            self.name, self.trials, self.passed, self.failed, self.seconds
        )
        if self.counterexample is not None:
            text += "\nfirst counterexample: {}".format(self.counterexample)
        return text


def _monotonicity(rng: random.Random, settings: Settings) -> Failure:
    psi = random_parameter(rng)
    for descriptor, result in enumerate_raising(psi):
        for kind in (OrderKind.A, OrderKind.D, OrderKind.C):
            outcome = compare(result, psi, kind, settings)
            if not outcome.at_least:
                return "{} on {} gives {}: {} under {}".format(
                    descriptor, psi, result, outcome.value, kind.value
                )
        if compare(result, psi, OrderKind.A) is not OrderResult.GREATER:
            return "{} on {} is not strictly higher under A".format(
                descriptor, psi
            )
    return None


def _duality(rng: random.Random, settings: Settings) -> Failure:
    psi = random_parameter(rng)
    for descriptor, result in enumerate_raising(psi):
        transported = dual_transport(descriptor, psi)
        application = apply(dual_psi(result), transported)
        if not application.applied or application.result != dual_psi(psi):
            return "{} on {}: {} does not undo it on the dual side".format(
                descriptor, psi, transported
            )
    return None


def _single_summand(rng: random.Random) -> ArthurSummand:
    return ArthurSummand(TRIVIAL, rng.randint(1, 6), rng.randint(1, 6))


def _rank_formula(rng: random.Random) -> Failure:
    summand = _single_summand(rng)
    phi = phi_of(_parameter_of(summand))
    triangle = rank_triangles(phi).get(TRIVIAL)
    if triangle is None or triangle.size == 0:
        return None
    grid = sorted({x for s in phi.summands for x in s.exponents()})
    low = rng.randrange(len(grid) - 1)
    high = rng.randrange(low + 1, len(grid))
    y, x = grid[low], grid[high]
    values = (
        rank_entry_closed_form(summand.A, summand.B, x, y),
        rank_entry_by_count(summand.A, summand.B, x, y),
        triangle.entry(low + 1, high),
    )
    if len(set(values)) != 1:
        return "{} between {} and {}: closed form, count, matrix = {}".format(
            summand, y, x, values
        )
    return None


def _parameter_of(summand: ArthurSummand) -> LocalArthurParameter:
    family = Family.SP if summand.dimension % 2 else Family.SO
    group = GroupSpec.from_standard_dim(family, summand.dimension)
    return LocalArthurParameter(group, [summand])


def _partition_recovery(rng: random.Random) -> Failure:
    phi = random_unramified(rng)
    triangle = rank_triangles(phi)[TRIVIAL]
    recovered = partition_from_triangle(triangle, phi.dimension)
    if recovered != partition_of_phi(phi):
        return "{} recovers {} instead of {}".format(
            phi, recovered, partition_of_phi(phi)
        )
    return None


def _closure_dominance(rng: random.Random) -> Failure:
    psi = random_parameter(rng)
    psi_open, psi_zero = extremal_parameters_of_lambda(psi)
    phis = [phi_of(item) for item in (psi, psi_open, psi_zero)]
    for left in phis:
        for right in phis:
            if not closure_compare(left, right).at_least:
                continue
            outcome = dominance_compare(
                partition_of_phi(left), partition_of_phi(right)
            )
            if not outcome.at_least:
                return "{} closes over {} but its partition is {}".format(
                    left, right, outcome.value
                )
    return None


def _partition_triangle(rng: random.Random, settings: Settings) -> Failure:
    return (
        _rank_formula(rng)
        or _partition_recovery(rng)
        or _closure_dominance(rng)
    )


def _sandwich(rng: random.Random, settings: Settings) -> Failure:
    psi = random_parameter(rng)
    psi_open, psi_zero = extremal_parameters_of_lambda(psi)
    phi = phi_of(psi)
    upper = closure_compare(phi_of(psi_open), phi)
    lower = closure_compare(phi, phi_of(psi_zero))
    if not (upper.at_least and lower.at_least):
        return "{}: open {}, zero {}".format(psi, upper.value, lower.value)
    return None


def _lower_round_trip(rng: random.Random, settings: Settings) -> Failure:
    E = random_ems(rng)
    rows = E.block(TRIVIAL)
    x = min(row.B for row in rows) - 1
    m = rng.randint(0, 2) if x >= HalfInt(-1) else 0
    raised = e_plus_lower(E, TRIVIAL, x, m).ems
    if not validate_ems(raised).valid:
        return "e_plus_lower({}, {}, {}) = {} is not valid".format(
            E, x, m, raised
        )
    back = e_rho_minus(raised, TRIVIAL).ems
    if back != E:
        return "{} comes back from {} as {}".format(E, raised, back)
    return None


RANDOM_SUITES = {
    "monotonicity": _monotonicity,
    "duality": _duality,
    "partition-triangle": _partition_triangle,
    "sandwich": _sandwich,
    "ems-chain": _lower_round_trip,
}

FIXTURE_SUITES = ("examples", "ems-chain", "arthur-steps")

SUITES = tuple(sorted(set(RANDOM_SUITES) | set(FIXTURE_SUITES)))


def _run_trial(name: str, settings: Settings, seed: int) -> Failure:
    rng = random.Random(seed)
    try:
        return RANDOM_SUITES[name](rng, settings)
    except ArthurLabError as error:
        return "seed {}: {}".format(seed, error)


def _random_failures(
    name: str, seeds: typing.List[int], settings: Settings
) -> typing.List[Failure]:
    trial = functools.partial(_run_trial, name, settings)
    if settings.workers == 1:
        return [trial(seed) for seed in seeds]
    with concurrent.futures.ProcessPoolExecutor(settings.workers) as pool:
        return list(pool.map(trial, seeds, chunksize=16))


def _fixture_failures(
    name: str, trials: int, settings: Settings
) -> typing.List[Failure]:
    cases = [
        case
        for case in load_corpus(settings.fixtures)
        if name == "examples" or case.suite == name
    ]
    failures = []
    for case in cases[:trials]:
        outcome = run_case(case)
        failures.append(
            None if outcome.passed else "{}: {}".format(case.id, outcome.detail)
        )
    return failures


def run_suite(
    name: str,
    seed: int = 0,
    trials: int = 1000,
    settings: typing.Optional[Settings] = None,
) -> SuiteReport:
    """
    Run ``trials`` trials of the suite ``name``.

    Fixture suites run at most ``trials`` corpus cases. The ``ems-chain``
    suite runs its corpus cases followed by random round trips through
    ``e_plus_lower`` and ``e_rho_minus``.
    """
    if name not in SUITES:
        raise UnknownFixture(name)
    settings = settings or Settings()
    logger.info("suite %s: %d trials, seed %d", name, trials, seed)
    started = time.perf_counter()

    failures = []
    if name in FIXTURE_SUITES:
        failures.extend(_fixture_failures(name, trials, settings))
    remaining = trials - len(failures)
    if name in RANDOM_SUITES and remaining > 0:
        rng = random.Random(seed)
        seeds = [rng.getrandbits(32) for _ in range(remaining)]
        failures.extend(_random_failures(name, seeds, settings))

    failed = [failure for failure in failures if failure is not None]
    report = SuiteReport(
        name,
        len(failures),
        len(failures) - len(failed),
        len(failed),
        failed[0] if failed else None,
        time.perf_counter() - started,
    )
    logger.info(
        "suite %s: %d passed, %d failed in %.2fs",
        name,
        report.passed,
        report.failed,
        report.seconds,
    )
    return report
