import typing

import pydantic

from config.learn import LearnConfig


class SolverSettings(pydantic.BaseModel):
    """The solver knobs a learner needs, detached from the global configuration so it can be shipped to workers."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    lasso_tol: pydantic.PositiveFloat = 1e-6
    lasso_max_sweeps: pydantic.PositiveInt = 10_000
    lambda_count: pydantic.PositiveInt = 20
    lambda_ratio: float = pydantic.Field(1e-4, gt=0, lt=1)
    smo_tol: pydantic.PositiveFloat = 1e-3
    smo_max_steps: pydantic.PositiveInt = 10_000_000
    smo_cache_rows: pydantic.PositiveInt = 4096
    grid_C: tuple[pydantic.PositiveFloat, ...] = (0.1, 1.0, 10.0, 100.0)
    grid_gamma: tuple[pydantic.PositiveFloat, ...] = (1 / 15, 0.01, 0.1, 1.0)
    grid_epsilon: tuple[pydantic.NonNegativeFloat, ...] = (0.05, 0.1, 0.2)

    @classmethod
    def from_config(cls, config: LearnConfig) -> typing.Self:
        return cls(
            lasso_tol=config.LASSO_TOL,
            lasso_max_sweeps=config.LASSO_MAX_SWEEPS,
            lambda_count=config.LASSO_LAMBDA_COUNT,
            lambda_ratio=config.LASSO_LAMBDA_RATIO,
            smo_tol=config.SMO_TOL,
            smo_max_steps=config.SMO_MAX_STEPS,
            smo_cache_rows=config.SMO_CACHE_ROWS,
            grid_C=tuple(config.GRID_C),
            grid_gamma=tuple(config.GRID_GAMMA),
            grid_epsilon=tuple(config.GRID_EPSILON),
        )
