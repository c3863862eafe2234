# -*- coding: utf-8 -*-
"""Evaluators for the j-conjecture

    lambda_j(Re((I - A)^-1)) >= lambda_j((I + |A|)^-1) = 1/(1 + r_{n-j+1})

its proved weaker forms and special cases, and a seeded random search with
local descent for counterexamples.
"""
import csv
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .base_object import BaseObject
from .context import Context, active_context, geq, resolve
from .errors import InvalidSpec
from .harnack import harnack_quotient, require_contraction
from .linalg import (general_eigenvalues, hermitian_eigenvalues, inverse,
                     hermitize, is_normal, polar_abs, real_part,
                     singular_values)
from .matrix import ComplexMatrix, as_array
from .sampling import Mode, RandomSpec, complex_gaussian, derive_seed, random_matrix, rng_for

logger = logging.getLogger(__name__)

PSD_TOL = 1e-10
SINGULAR_TOL = 1e-9
NORMAL_TOL = 1e-9
REJECTIONS_BEFORE_HALVING = 20

# min_slack histogram bin edges; the outer bins are open-ended
HISTOGRAM_EDGES = (-1e-8, 0.0, 1e-3, 1e-2, 1e-1, 1.0)


def histogram_labels():
    edges = ('-inf',) + tuple('%g' % e for e in HISTOGRAM_EDGES) + ('inf',)
    return ['[%s, %s)' % (lo, hi) for lo, hi in zip(edges[:-1], edges[1:])]


@dataclass
class ConjectureRecord(object):
    """Slacks of one matrix against the j-conjecture.

    Attributes
    ----------
    slacks : list of float
        slack_j = lambda_j(Re((I-A)^-1)) - 1/(1 + r_{n-j+1}), j = 1..n.
    min_slack, min_j : float, int
        The smallest slack and its (1-based) index.
    norm_slack : float
        ||Re((I-A)^-1)|| - ||(I+|A|)^-1||, the j = 1 form.
    harnack_slacks : list of float
        lambda_j(H(A)) - (1 - r_{n-j+1})/(1 + r_{n-j+1}).
    shifted_norm_slack : float
        lambda_1(Re((I-A)^-1 A)) + r_n/(1 + r_n); equals norm_slack.
    """
    matrix: ComplexMatrix
    slacks: list
    min_slack: float
    min_j: int
    norm_slack: float
    harnack_slacks: list = field(default_factory=list)
    shifted_norm_slack: float = None
    trial_seed: int = 0
    trial: int = None
    mode: str = None

    def to_dict(self):
        return {
            'matrix': self.matrix.to_dict(),
            'slacks': list(self.slacks),
            'min_slack': self.min_slack,
            'min_j': self.min_j,
            'norm_slack': self.norm_slack,
            'harnack_slacks': list(self.harnack_slacks),
            'shifted_norm_slack': self.shifted_norm_slack,
            'trial_seed': self.trial_seed,
            'trial': self.trial,
            'mode': self.mode,
        }


def resolvent_spectrum(a):
    """Eigenvalues (descending) of Re((I - A)^-1).
    """
    arr = as_array(a)
    res = inverse(np.eye(arr.shape[0]) - arr)
    return hermitian_eigenvalues(real_part(res))


def j_conjecture_slack(a, margin=None, trial_seed=0, trial=None, mode=None):
    """Evaluate every slack form of the j-conjecture on one strict contraction.

    Raises
    ------
    NotContractive
    """
    arr = as_array(a)
    n = arr.shape[0]
    r = require_contraction(arr, margin)
    eye = np.eye(n)
    res = inverse(eye - arr).asarray()
    lam = hermitian_eigenvalues(hermitize(res))
    # r[::-1][j-1] is r_{n-j+1}
    r_rev = r[::-1]
    target = 1.0 / (1.0 + r_rev)
    slacks = lam - target
    harnack = (hermitian_eigenvalues(harnack_quotient(arr))
               - (1 - r_rev) / (1 + r_rev))
    shifted = hermitian_eigenvalues(hermitize(res @ arr))[0] + r[-1] / (1 + r[-1])
    j = int(np.argmin(slacks))
    return ConjectureRecord(
        matrix=ComplexMatrix(arr),
        slacks=[float(x) for x in slacks],
        min_slack=float(slacks[j]),
        min_j=j + 1,
        norm_slack=float(np.max(np.abs(lam)) - 1.0 / (1.0 + r[-1])),
        harnack_slacks=[float(x) for x in harnack],
        shifted_norm_slack=float(shifted),
        trial_seed=int(trial_seed),
        trial=trial,
        mode=None if mode is None else Mode.parse(mode).value,
    )


@dataclass
class LoewnerReport(object):
    """(I-A*)^-1 + (I-A)^-1 against 2(I-|A|)^-1 (above) and 2(I+|A|)^-1 (below).

    ``upper_holds`` / ``lower_holds`` are the Loewner orders, judged by the
    smallest eigenvalue of the difference (>= -1e-10).
    """
    resolvent_sum: ComplexMatrix
    upper_matrix: ComplexMatrix
    lower_matrix: ComplexMatrix
    upper_difference: ComplexMatrix
    lower_difference: ComplexMatrix
    min_eig_upper: float
    min_eig_lower: float
    upper_holds: bool
    lower_holds: bool


def loewner_counterexample_check(a, margin=None):
    arr = as_array(a)
    require_contraction(arr, margin)
    eye = np.eye(arr.shape[0])
    res = inverse(eye - arr).asarray()
    total = res + res.conj().T
    mod = polar_abs(arr).asarray()
    upper = 2 * inverse(eye - mod).asarray()
    lower = 2 * inverse(eye + mod).asarray()
    d_up = hermitize(upper - total)
    d_lo = hermitize(total - lower)
    e_up = float(hermitian_eigenvalues(d_up)[-1])
    e_lo = float(hermitian_eigenvalues(d_lo)[-1])
    return LoewnerReport(ComplexMatrix(total), ComplexMatrix(upper),
                         ComplexMatrix(lower), ComplexMatrix(d_up),
                         ComplexMatrix(d_lo), e_up, e_lo,
                         e_up >= -PSD_TOL, e_lo >= -PSD_TOL)


@dataclass
class WeakBoundRow(object):
    """The four proved lower bounds at index j.

    resolvent_weak: 1/(1+r_{n-j+1}) - (r_1^2 - r_{n-j+1}^2)/(2(1+r_{n-j+1})^2) on
    lambda_j(Re((I-A)^-1)); its j = 1 case is the norm form. resolvent_r1:
    1/(1+r_1) + (r_1^2 - r_{n-j+1}^2)/(2(1+r_1)^2) on the same eigenvalue.
    harnack_r1: (1 - r_{n-j+1}^2)/(1+r_1)^2 on lambda_j(H(A)).
    """
    j: int
    resolvent_eigenvalue: float
    harnack_eigenvalue: float
    resolvent_weak: float
    resolvent_r1: float
    harnack_r1: float
    verdict: dict


def weak_bounds_check(a, tol=None, margin=None):
    tol, margin = resolve(tol, margin)
    arr = as_array(a)
    r = require_contraction(arr, margin)
    n = len(r)
    lam = resolvent_spectrum(arr)
    mu = hermitian_eigenvalues(harnack_quotient(arr))
    r1 = r[0]
    rows = []
    for j in range(1, n + 1):
        rj = r[n - j]
        resolvent_weak = 1 / (1 + rj) - (r1 ** 2 - rj ** 2) / (2 * (1 + rj) ** 2)
        resolvent_r1 = 1 / (1 + r1) + (r1 ** 2 - rj ** 2) / (2 * (1 + r1) ** 2)
        harnack_r1 = (1 - rj ** 2) / (1 + r1) ** 2
        verdict = {'resolvent_weak': bool(geq(lam[j - 1], resolvent_weak, tol)),
                   'resolvent_r1': bool(geq(lam[j - 1], resolvent_r1, tol)),
                   'harnack_r1': bool(geq(mu[j - 1], harnack_r1, tol))}
        if j == 1:
            verdict['norm_weak'] = verdict['resolvent_weak']
        rows.append(WeakBoundRow(j, float(lam[j - 1]), float(mu[j - 1]),
                                 float(resolvent_weak), float(resolvent_r1),
                                 float(harnack_r1), verdict))
    return rows


@dataclass
class SpecialCase(object):
    """A settled case of the j-conjecture and whether it applies to A.
    """
    tag: str
    applicable: bool
    indices: tuple
    min_slack: float
    holds: bool


def special_case_check(a, tol=None, margin=None):
    """Cases where the j-conjecture is known to hold.

    'normal': every j when A*A = AA*; 'j=n': the last index, always;
    'singular-j=1': j = 1 when r_n <= 1e-9.
    """
    tol, margin = resolve(tol, margin)
    record = j_conjecture_slack(a, margin)
    n = len(record.slacks)
    r = singular_values(a)
    cases = (('normal', is_normal(a, NORMAL_TOL), tuple(range(1, n + 1))),
             ('j=n', True, (n,)),
             ('singular-j=1', bool(r[-1] <= SINGULAR_TOL), (1,)))
    out = []
    for tag, applicable, indices in cases:
        slack = min(record.slacks[j - 1] for j in indices)
        out.append(SpecialCase(tag, bool(applicable), indices, float(slack),
                               bool(not applicable or slack >= -tol)))
    return out


@dataclass
class ResolventEigenReport(object):
    """max Re(1/(1 - lambda)) over the eigenvalues of A, next to 1/(1 + r_n)
    and ||Re((I-A)^-1)||.
    """
    max_re_resolvent: float
    threshold: float
    norm_value: float
    eigenvalues: list

    @property
    def sufficient_condition_holds(self):
        return self.max_re_resolvent >= self.threshold


def remark33_check(a):
    """Raises SingularMatrix when 1 is an eigenvalue of A."""
    arr = as_array(a)
    norm_value = float(np.max(np.abs(resolvent_spectrum(arr))))
    eigs = general_eigenvalues(arr)
    r = singular_values(arr)
    return ResolventEigenReport(
        max_re_resolvent=float(max((1 / (1 - z)).real for z in eigs)),
        threshold=float(1 / (1 + r[-1])),
        norm_value=norm_value,
        eigenvalues=[complex(z) for z in eigs])


# ---------------------------------------------------------------- search --

@dataclass(frozen=True)
class SearchConfig(BaseObject):
    """Parameters of a counterexample search.

    Parameters
    ----------
    n : int
        Dimension.
    trials : int
        Number of random matrices (>= 1).
    seed : int
        Base seed; trial t draws from SeedSequence([seed, t]).
    modes : sequence of Mode or str
        Generation modes; each trial picks one uniformly.
    descent_steps : int
        Local refinement steps run from the best trial.
    descent_scale : float
        Initial perturbation size of the descent.
    margin : float
        Strict-contraction margin; generated matrices have
        sigma_1 <= 1 - 2 * margin.
    prescribed : sequence of float, optional
        Fixed singular values for the prescribed and singular modes.
    workers : int
        Worker processes (1 runs serially). Results do not depend on it.
    """
    n: int
    trials: int = 1000
    seed: int = 0
    modes: tuple = tuple(Mode)
    descent_steps: int = 0
    descent_scale: float = 0.05
    margin: float = 1e-6
    prescribed: tuple = None
    workers: int = 1

    _bounds_error = InvalidSpec

    def __post_init__(self):
        try:
            self._check_args(n=int, trials=int, seed=int, descent_steps=int,
                             descent_scale=float, margin=float, workers=int)
        except TypeError as exc:
            raise InvalidSpec(str(exc))
        self._check_bounds(n=">= 1", trials=">= 1", seed=">= 0",
                           descent_steps=">= 0", descent_scale="> 0",
                           margin=("> 0", "< 0.5"), workers=">= 1")
        modes = self.modes
        if isinstance(modes, (str, Mode)):
            modes = (modes,)
        modes = tuple(Mode.parse(m) for m in modes)
        if not modes:
            raise InvalidSpec("At least one generation mode is required.")
        object.__setattr__(self, 'modes', modes)
        if self.prescribed is not None:
            values = tuple(float(x) for x in self.prescribed)
            if len(values) != self.n:
                raise InvalidSpec("prescribed must have %d values (got %d)." %
                                  (self.n, len(values)))
            object.__setattr__(self, 'prescribed', values)

    @property
    def max_norm(self):
        return 1 - 2 * self.margin

    def to_dict(self):
        return {
            'n': self.n,
            'trials': self.trials,
            'seed': self.seed,
            'modes': [m.value for m in self.modes],
            'descent_steps': self.descent_steps,
            'descent_scale': self.descent_scale,
            'margin': self.margin,
            'prescribed': list(self.prescribed) if self.prescribed is not None else None,
            'workers': self.workers,
        }


def trial_matrix(config, trial):
    """The (mode, matrix) of one trial; a function of (config.seed, trial) only.
    """
    rng = rng_for(config.seed, trial)
    mode = config.modes[int(rng.integers(len(config.modes)))]
    # most draws land close to the boundary of the unit ball
    max_norm = config.max_norm * (1 - 0.9 * rng.uniform() ** 4)
    prescribed = None
    if mode in (Mode.PRESCRIBED, Mode.SINGULAR):
        prescribed = config.prescribed
    spec = RandomSpec(config.n, mode, max_norm, prescribed,
                      seed=derive_seed(config.seed, trial))
    return mode, random_matrix(spec, rng)


def evaluate_trial(config, trial):
    mode, a = trial_matrix(config, trial)
    return j_conjecture_slack(a, config.margin,
                              trial_seed=derive_seed(config.seed, trial),
                              trial=trial, mode=mode)


def _evaluate_chunk(config, trials, context):
    with Context(**context):
        out = []
        for t in trials:
            rec = evaluate_trial(config, t)
            out.append((t, rec.mode, rec.min_slack, rec))
        return out


def _better(rec, best):
    if best is None:
        return True
    return (rec.min_slack, rec.trial) < (best.min_slack, best.trial)


def project(arr, margin):
    """Rescale so that sigma_1 <= 1 - 2 * margin.
    """
    target = 1 - 2 * margin
    s1 = singular_values(arr)[0]
    if s1 > target:
        arr = arr * (target / s1)
    return arr


@dataclass
class DescentLog(object):
    steps: int = 0
    accepted: int = 0
    halvings: int = 0
    start_slack: float = None
    final_slack: float = None
    final_scale: float = None


def descend(record, config):
    """Local refinement: accept A' = project(A + eps G) when min_slack drops.

    eps halves after 20 consecutive rejections.
    """
    log = DescentLog(start_slack=record.min_slack)
    if config.descent_steps == 0:
        log.final_slack = record.min_slack
        log.final_scale = config.descent_scale
        return record, log
    rng = rng_for(config.seed, config.trials)
    eps = config.descent_scale
    current = record
    rejections = 0
    for step in range(config.descent_steps):
        g = complex_gaussian(rng, config.n)
        cand = project(current.matrix.asarray() + eps * g, config.margin)
        rec = j_conjecture_slack(cand, config.margin, trial_seed=record.trial_seed,
                                 trial=record.trial, mode=record.mode)
        log.steps += 1
        if rec.min_slack < current.min_slack:
            logger.debug("descent step %d: min_slack %.6g -> %.6g (eps=%g)",
                         step, current.min_slack, rec.min_slack, eps)
            current = rec
            log.accepted += 1
            rejections = 0
        else:
            rejections += 1
            if rejections == REJECTIONS_BEFORE_HALVING:
                eps /= 2
                log.halvings += 1
                rejections = 0
    log.final_slack = current.min_slack
    log.final_scale = eps
    return current, log


@dataclass
class SearchResult(object):
    """Outcome of `search`.

    ``rows`` holds (trial, mode, min_slack) for every trial; ``duration`` is
    kept out of `to_dict` so that summaries of equal runs are identical.
    """
    config: SearchConfig
    best: ConjectureRecord
    trials_completed: int
    histogram: dict
    descent: DescentLog
    violation_threshold: float
    rows: list = field(default_factory=list, repr=False)
    duration: float = 0.0

    @property
    def violation(self):
        return self.best.min_slack < self.violation_threshold

    def to_dict(self):
        return {
            'config': self.config.to_dict(),
            'best_record': self.best.to_dict(),
            'trials_completed': self.trials_completed,
            'histogram': self.histogram,
            'descent': {'steps': self.descent.steps,
                        'accepted': self.descent.accepted,
                        'halvings': self.descent.halvings,
                        'start_slack': self.descent.start_slack,
                        'final_slack': self.descent.final_slack,
                        'final_scale': self.descent.final_scale},
            'violation_threshold': self.violation_threshold,
            'violation': self.violation,
        }

    def write_csv(self, path):
        with open(path, 'w', newline='') as fh:
            writer = csv.writer(fh)
            writer.writerow(['trial', 'mode', 'min_slack'])
            for trial, mode, slack in self.rows:
                writer.writerow([trial, mode, repr(slack)])


def build_histogram(rows, modes):
    labels = histogram_labels()
    hist = {m.value: dict.fromkeys(labels, 0) for m in modes}
    edges = np.array(HISTOGRAM_EDGES)
    for _, mode, slack in rows:
        b = int(np.searchsorted(edges, slack, side='right'))
        hist[mode][labels[b]] += 1
    return hist


def _chunks(trials, workers):
    size = max(1, -(-trials // (4 * workers)))
    return [range(i, min(i + size, trials)) for i in range(0, trials, size)]


def search(config):
    """Random search for a j-conjecture violation, then local descent.

    Parameters
    ----------
    config : SearchConfig

    Returns
    -------
    SearchResult
        The best (smallest min_slack) record, ties broken by the lower trial
        index, with the histogram of min_slack per generation mode.
    """
    if not isinstance(config, SearchConfig):
        raise InvalidSpec("search requires a SearchConfig (got %s)." %
                          type(config).__name__)
    ctx = active_context()
    start = time.perf_counter()
    logger.info("search: n=%d trials=%d seed=%d modes=%s workers=%d",
                config.n, config.trials, config.seed,
                ','.join(m.value for m in config.modes), config.workers)

    rows = []
    best = None
    if config.workers == 1:
        step = max(1, config.trials // 10)
        for t in range(config.trials):
            rec = evaluate_trial(config, t)
            rows.append((t, rec.mode, rec.min_slack))
            if _better(rec, best):
                best = rec
            if (t + 1) % step == 0:
                logger.debug("search: %d/%d trials, best min_slack %.6g",
                             t + 1, config.trials, best.min_slack)
    else:
        chunks = _chunks(config.trials, config.workers)
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = [pool.submit(_evaluate_chunk, config, list(c), ctx.to_dict())
                       for c in chunks]
            for fut in futures:
                for t, mode, slack, rec in fut.result():
                    rows.append((t, mode, slack))
                    if _better(rec, best):
                        best = rec
        logger.debug("search: %d chunks over %d workers done", len(chunks),
                     config.workers)

    best, log = descend(best, config)
    result = SearchResult(config, best, len(rows),
                          build_histogram(rows, config.modes), log,
                          ctx.violation_threshold, rows,
                          time.perf_counter() - start)
    level = logging.WARNING if result.violation else logging.INFO
    logger.log(level, "search done: min_slack=%.6g at j=%d (trial %s, %s) in %.2f s",
               best.min_slack, best.min_j, best.trial, best.mode, result.duration)
    return result
