"""Real-coded genetic algorithm over array geometry and directivity.

Each individual is a full array configuration: element positions on the
aperture and one directivity parameter per element. Variation operators
are tournament selection, gene-wise blend crossover (BLX-alpha with
alpha = 0.5), and per-gene Gaussian mutation; constraint handling is by
repair, so every individual in every generation satisfies the spacing and
aperture constraints and fitness comparisons never involve penalty terms.

Randomness is derived per (seed, generation, offspring) substream, which
makes runs reproducible bit for bit and lets a checkpointed run resume
mid-way with an identical trajectory.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arraymodel import (
    DEFAULT_CONSTANTS,
    ArrayConfig,
    PhysicalConstants,
    validate_spacing,
)
from .beamformer import DEFAULT_REGULARIZATION
from .errors import InfeasibleError, ValidationError
from .idp import IdpSpec
from .metrics import DesignGrid, overall_error

logger = logging.getLogger(__name__)

_MUTATION_SIGMA_POSITION = 0.1  # fraction of the aperture
_MUTATION_SIGMA_DIRECTIVITY = 0.1
_BLEND_ALPHA = 0.5


@dataclass(frozen=True)
class DesignProblem:
    """Everything the fitness function needs besides the genome."""

    m: int
    min_spacing: float
    aperture: float
    idp: IdpSpec
    grid: DesignGrid
    trunc: int
    regularization: float = DEFAULT_REGULARIZATION
    consts: PhysicalConstants = DEFAULT_CONSTANTS

    def objective(self, cfg: ArrayConfig) -> float:
        return overall_error(cfg, self.idp, self.grid, self.trunc,
                             self.regularization, self.consts)


@dataclass(frozen=True)
class GaParams:
    population_size: int
    generations: int
    crossover_prob: float = 0.8
    mutation_prob: float = 0.05
    tournament_size: int = 3
    elite_count: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.population_size < 4:
            raise ValidationError("population_size must be >= 4")
        if self.generations < 1:
            raise ValidationError("generations must be >= 1")
        for name in ("crossover_prob", "mutation_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValidationError(f"{name} must lie in [0, 1], got {p}")
        if self.tournament_size < 2:
            raise ValidationError("tournament_size must be >= 2")
        # the all-elite corner (elite_count == population_size) is allowed;
        # it turns the step into the identity on the population
        if not 1 <= self.elite_count <= self.population_size:
            raise ValidationError(
                "elite_count must lie in [1, population_size]"
            )


@dataclass
class Individual:
    genome: ArrayConfig
    fitness: float | None = None


@dataclass
class GaRunState:
    generation: int
    population: list[Individual]
    best: Individual | None
    seed: int
    m: int
    min_spacing: float
    aperture: float
    history: list[tuple[int, float, float, float]] = field(default_factory=list)


def _substream(seed: int, generation: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(
        np.random.SeedSequence(entropy=seed, spawn_key=(generation, stream))
    )


def repair(positions: np.ndarray, directivity: np.ndarray,
           min_spacing: float, aperture: float) -> ArrayConfig:
    """Project a raw genome onto the feasible set.

    Positions are sorted ascending (directivities permuted along), clamped
    into the aperture, then minimum gaps are restored by a left-to-right
    sweep; if the sweep overflows the aperture a right-to-left pass pulls
    the chain back, which always succeeds when (M-1) * min_spacing fits
    the aperture. Directivities are clamped into [0, 1].
    """
    order = np.argsort(positions, kind="stable")
    x = np.clip(positions[order].astype(float), 0.0, aperture)
    a = np.clip(directivity[order].astype(float), 0.0, 1.0)
    for i in range(1, x.size):
        gap = x[i - 1] + min_spacing
        if x[i] < gap:
            x[i] = gap
    if x.size and x[-1] > aperture:
        x[-1] = aperture
        for i in range(x.size - 2, -1, -1):
            cap = x[i + 1] - min_spacing
            if x[i] > cap:
                x[i] = cap
    return ArrayConfig(positions=x, directivity=a)


def _check_feasible(m: int, min_spacing: float, aperture: float) -> None:
    if m < 1:
        raise ValidationError(f"need at least one microphone, got {m}")
    if min_spacing < 0 or aperture <= 0:
        raise ValidationError("min_spacing must be >= 0 and aperture > 0")
    if (m - 1) * min_spacing > aperture:
        raise InfeasibleError(
            f"{m} microphones with minimum spacing {min_spacing:g} m cannot "
            f"fit an aperture of {aperture:g} m"
        )


def init_population(params: GaParams, m: int, min_spacing: float,
                    aperture: float) -> GaRunState:
    """Sample a feasible initial population, deterministic in the seed.

    Positions come from the standard order-statistics construction:
    sorted uniforms on the slack interval plus the cumulative minimum
    gaps, which is uniform over the feasible sorted configurations.
    """
    _check_feasible(m, min_spacing, aperture)
    slack = aperture - (m - 1) * min_spacing
    population = []
    for k in range(params.population_size):
        rng = _substream(params.seed, 0, k)
        x = np.sort(rng.uniform(0.0, slack, m)) + np.arange(m) * min_spacing
        a = rng.uniform(0.0, 1.0, m)
        population.append(Individual(genome=ArrayConfig(positions=x,
                                                        directivity=a)))
    return GaRunState(generation=0, population=population, best=None,
                      seed=params.seed, m=m, min_spacing=min_spacing,
                      aperture=aperture)


def _genome_key(cfg: ArrayConfig) -> bytes:
    return cfg.positions.tobytes() + cfg.directivity.tobytes()


def evaluate(state: GaRunState, objective, cache: dict | None = None,
             threads: int = 1) -> GaRunState:
    """Fill in missing fitness values and update the best-ever individual.

    Objective failures are logged and penalized with +inf fitness rather
    than aborting the run. Evaluation is a parallel map over individuals;
    results are assigned by index, so thread scheduling cannot change the
    outcome.
    """
    if cache is None:
        cache = {}
    pending = [ind for ind in state.population if ind.fitness is None]
    todo = []
    for ind in pending:
        key = _genome_key(ind.genome)
        if key in cache:
            ind.fitness = cache[key]
        else:
            todo.append((key, ind))

    def run_one(item):
        key, ind = item
        try:
            return objective(ind.genome)
        except Exception:
            logger.exception("objective failed; penalizing individual")
            return math.inf

    if threads > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_one, todo))
    else:
        results = [run_one(item) for item in todo]
    for (key, ind), fit in zip(todo, results):
        ind.fitness = float(fit)
        cache[key] = ind.fitness

    champion = min(state.population, key=lambda ind: ind.fitness)
    if state.best is None or champion.fitness < state.best.fitness:
        state.best = Individual(genome=champion.genome,
                                fitness=champion.fitness)
    return state


def _tournament(rng: np.random.Generator, fitness: np.ndarray,
                size: int) -> int:
    contenders = rng.integers(0, fitness.size, size)
    return int(contenders[np.argmin(fitness[contenders])])


def step(state: GaRunState, params: GaParams) -> GaRunState:
    """Produce the next generation: elites plus repaired offspring."""
    if any(ind.fitness is None for ind in state.population):
        raise ValidationError("population must be evaluated before stepping")
    fitness = np.array([ind.fitness for ind in state.population])
    m = state.m
    order = np.argsort(fitness, kind="stable")
    next_population = [
        Individual(genome=state.population[i].genome,
                   fitness=state.population[i].fitness)
        for i in order[: params.elite_count]
    ]
    next_generation = state.generation + 1
    sigma = np.concatenate([
        np.full(m, _MUTATION_SIGMA_POSITION * state.aperture),
        np.full(m, _MUTATION_SIGMA_DIRECTIVITY),
    ])
    for k in range(params.elite_count, params.population_size):
        rng = _substream(state.seed, next_generation, k)
        p1 = state.population[_tournament(rng, fitness, params.tournament_size)]
        p2 = state.population[_tournament(rng, fitness, params.tournament_size)]
        g1 = np.concatenate([p1.genome.positions, p1.genome.directivity])
        g2 = np.concatenate([p2.genome.positions, p2.genome.directivity])
        if rng.random() < params.crossover_prob:
            lo = np.minimum(g1, g2)
            hi = np.maximum(g1, g2)
            spread = hi - lo
            child = rng.uniform(lo - _BLEND_ALPHA * spread,
                                hi + _BLEND_ALPHA * spread)
        else:
            child = g1.copy()
        mask = rng.random(2 * m) < params.mutation_prob
        child = child + mask * (sigma * rng.normal(0.0, 1.0, 2 * m))
        genome = repair(child[:m], child[m:], state.min_spacing,
                        state.aperture)
        next_population.append(Individual(genome=genome))
    return GaRunState(generation=next_generation, population=next_population,
                      best=state.best, seed=state.seed, m=m,
                      min_spacing=state.min_spacing, aperture=state.aperture,
                      history=state.history)


@dataclass
class OptimizeResult:
    best_config: ArrayConfig
    best_fitness: float
    history: list[tuple[int, float, float, float]]
    state: GaRunState


def _record_history(state: GaRunState) -> None:
    fits = np.array([ind.fitness for ind in state.population])
    state.history.append((
        state.generation,
        float(np.min(fits)),
        float(np.mean(fits)),
        float(np.median(fits)),
    ))


def optimize(params: GaParams, problem: DesignProblem,
             inject: tuple[ArrayConfig, ...] = (),
             state: GaRunState | None = None,
             callback=None, threads: int = 1) -> OptimizeResult:
    """Run the generational loop and return the best feasible design.

    ``inject`` replaces the first individuals of generation 0 with known
    configurations (for example a reference design); elitism then
    guarantees the final best is at least as good as any injected
    baseline. Passing a previously checkpointed ``state`` resumes the run
    with a bit-identical continuation. ``callback(state)`` fires after
    each generation has been evaluated and recorded.
    """
    if problem.m < 2 * problem.trunc + 2:
        raise ValidationError(
            f"problem needs m >= {2 * problem.trunc + 2} microphones for "
            f"truncation order {problem.trunc}, got {problem.m}"
        )
    if state is None:
        state = init_population(params, problem.m, problem.min_spacing,
                                problem.aperture)
        if len(inject) > params.population_size:
            raise ValidationError("more injected configs than population slots")
        for i, cfg in enumerate(inject):
            if cfg.size != problem.m:
                raise ValidationError(
                    f"injected config {i} has {cfg.size} elements, expected "
                    f"{problem.m}"
                )
            validate_spacing(cfg, problem.min_spacing, problem.aperture)
            state.population[i] = Individual(genome=cfg)
    elif inject:
        raise ValidationError("cannot inject configs into a resumed run")

    cache: dict[bytes, float] = {}
    for ind in state.population:
        if ind.fitness is not None:
            cache[_genome_key(ind.genome)] = ind.fitness

    while True:
        evaluate(state, problem.objective, cache=cache, threads=threads)
        if len(state.history) <= state.generation:
            _record_history(state)
            if callback is not None:
                callback(state)
        if state.generation >= params.generations - 1:
            break
        state = step(state, params)
    best = state.best
    return OptimizeResult(best_config=best.genome, best_fitness=best.fitness,
                          history=state.history, state=state)
