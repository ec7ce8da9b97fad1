"""Neighborhood directed search for the combining-ratio parameters.

Coordinates are held as integers in hundredths, so every step of the
1 -> 0.1 -> 0.01 schedule lands exactly on the 0.01 grid. Each sweep scans the
origin first and then every combination of (0, -step, +step) per axis in that
order; a candidate replaces the current best only when its mse is strictly
lower, so ties keep the earlier point and every sweep terminates.
"""
import itertools
import logging
from dataclasses import dataclass, field

from iac_link_abstraction.errors import MaxIterationsExceeded

logger = logging.getLogger(__name__)

UNITS_PER_ONE = 100

SCHEDULE_2D = (100, 10, 1)

Y_GUARD = 300

BETA_MIN_GUARD = (-100, 100)

# the floor during the 2D stage: never active for the guarded linear term
BETA_MIN_2D = -100

MAX_MOVES = 100_000

TRACE_COLUMNS = ['stage', 'step', 'y0', 'y1', 'beta_min', 'mse']


@dataclass(frozen=True)
class SearchState:
    origin: tuple
    step: float
    best_mse: float


@dataclass
class SearchTrace:
    rows: list = field(default_factory=list)

    def record(self, stage, step, point, mse):
        """
        point is (y0, y1, beta_min) in hundredths, beta_min None for an unfloored model
        """
        y0, y1, beta_min = point
        self.rows.append((stage,
                          step / UNITS_PER_ONE,
                          y0 / UNITS_PER_ONE,
                          y1 / UNITS_PER_ONE,
                          float('-inf') if beta_min is None else beta_min / UNITS_PER_ONE,
                          mse))

    def stage_end(self, stage):
        """
        Last recorded mse of a stage
        """
        return [row for row in self.rows if row[0] == stage][-1][5]


class _Objective:
    """Memoized objective over hundredth coordinates."""

    def __init__(self, objective):
        self.objective = objective
        self.cache = {}

    def __call__(self, point):
        if point not in self.cache:
            y0, y1, beta_min = point
            self.cache[point] = float(self.objective((y0 / UNITS_PER_ONE,
                                                      y1 / UNITS_PER_ONE,
                                                      float('-inf') if beta_min is None else beta_min / UNITS_PER_ONE)))
        return self.cache[point]


def _within_guards(point):
    y0, y1, beta_min = point
    if abs(y0) > Y_GUARD or abs(y1) > Y_GUARD:
        return False
    return beta_min is None or BETA_MIN_GUARD[0] <= beta_min <= BETA_MIN_GUARD[1]


def _neighborhood(origin, step, axes):
    """
    axes lists groups of coordinates; the coordinates of one group move together
    """
    for offsets in itertools.product((0, -1, 1), repeat=len(axes)):
        point = list(origin)
        for group, offset in zip(axes, offsets):
            for axis in group:
                point[axis] += offset * step
        point = tuple(point)
        if _within_guards(point):
            yield point


def _descend(objective, state, axes, stage, trace, max_moves):
    """
    Moves to the best neighbor until the origin is its own neighborhood minimum
    """
    origin, step, best_mse = state.origin, int(state.step), state.best_mse
    moves = 0
    while True:
        best = origin
        for point in _neighborhood(origin, step, axes):
            mse = objective(point)
            if mse < best_mse:
                best, best_mse = point, mse

        if best == origin:
            return SearchState(origin=origin, step=step, best_mse=best_mse)

        origin = best
        moves += 1
        trace.record(stage, step, origin, best_mse)
        logger.debug('%s step %d moved to %s, mse %.6g', stage, step, origin, best_mse)
        if moves >= max_moves:
            raise MaxIterationsExceeded(f'{stage} search did not settle within {max_moves} moves')


def _run(objective, start, axes, schedule, stage, trace, max_moves):
    objective = _Objective(objective)
    state = SearchState(origin=start, step=schedule[0], best_mse=objective(start))
    trace.record(stage, schedule[0], start, state.best_mse)

    for step in schedule:
        state = _descend(objective, SearchState(origin=state.origin, step=step, best_mse=state.best_mse),
                         axes, stage, trace, max_moves)
        trace.record(stage, step, state.origin, state.best_mse)

    logger.info('%s search finished at %s with mse %.6g after %d evaluations',
                stage, state.origin, state.best_mse, len(objective.cache))
    return state


def directed_search_2d(objective, trace=None, max_moves=MAX_MOVES):
    """
    Searches (y0, y1) from the origin with steps 1, 0.1, 0.01 and no effective floor
    objective takes (y0, y1, beta_min) and returns the mse
    Returns (y0, y1, mse)
    """
    trace = trace if trace is not None else SearchTrace()
    state = _run(objective, (0, 0, BETA_MIN_2D), ((0,), (1,)), SCHEDULE_2D, '2d', trace, max_moves)
    y0, y1, _ = state.origin
    return y0 / UNITS_PER_ONE, y1 / UNITS_PER_ONE, state.best_mse


def directed_search_3d(objective, start, trace=None, max_moves=MAX_MOVES):
    """
    Searches (y0, y1, beta_min) around start with the fixed step 0.01
    Raises MaxIterationsExceeded when the search does not settle within max_moves
    Returns (y0, y1, beta_min, mse)
    """
    trace = trace if trace is not None else SearchTrace()
    origin = tuple(int(round(value * UNITS_PER_ONE)) for value in start)
    state = _run(objective, origin, ((0,), (1,), (2,)), (1,), '3d', trace, max_moves)
    y0, y1, beta_min = state.origin
    return y0 / UNITS_PER_ONE, y1 / UNITS_PER_ONE, beta_min / UNITS_PER_ONE, state.best_mse


def directed_search_1d(objective, trace=None, max_moves=MAX_MOVES):
    """
    Searches a constant beta = y0 = y1 without floor, steps 1, 0.1, 0.01
    Returns (beta, mse)
    """
    trace = trace if trace is not None else SearchTrace()
    state = _run(objective, (0, 0, None), ((0, 1),), SCHEDULE_2D, '1d', trace, max_moves)
    return state.origin[0] / UNITS_PER_ONE, state.best_mse

