import json
from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..geodesic.chart import DEFAULT_RADIUS
from ..geodesic.solver import FD_STEP
from ..groups.groupid import GroupId
from ..metric.quadrature import QuadratureSpec, QUADRATURE_MODES, MONTE_CARLO, DEFAULT_GRID
from ..utils.errors import ConfigError, MembershipError, ShapeError
from ..utils.utils_translation import TextTranslation
from .scenarios import SCENARIOS

__all__ = ['SCENARIO_NAMES', 'QuadratureConfig', 'IntegratorConfig', 'ExperimentConfig', 'parse_config',
           'load_config']

SCENARIO_NAMES = ('finite-length', 'mass-concentration', 'totally-geodesic', 'isometry-KxK', 'rigid-geodesic',
                  'fixed-point-algebra', 'lowdim-diagrams', 'corollary7', 'metric-closed-form', 'incompleteness',
                  'bi-invariance', 'oracle-equivalence')


class QuadratureConfig(BaseModel):
    """ Quadrature rule of the kinetic energy metric. """
    model_config = ConfigDict(extra='forbid')

    mode: str = Field(default=MONTE_CARLO, description="monte-carlo, weyl-torus or cubature")
    samples: int = Field(default=1000, gt=0, description="Monte Carlo samples")
    seed: int = Field(default=0, ge=0)
    grid: int = Field(default=DEFAULT_GRID, gt=0, description="nodes per torus angle or cubature axis")
    refine: int = Field(default=0, ge=0, description="graded panels of the torus rule")

    @field_validator('mode')
    @classmethod
    def _known_mode(cls, value):
        if value not in QUADRATURE_MODES:
            raise ValueError('unknown mode %s' % value)
        return value

    def to_spec(self, seed=None):
        return QuadratureSpec(self.mode, self.samples, self.seed if seed is None else seed, self.grid,
                              self.refine)


class IntegratorConfig(BaseModel):
    """ Geodesic integrator parameters. """
    model_config = ConfigDict(extra='forbid')

    T: float = Field(default=1.0, gt=0.0, description="integration time")
    dt: float = Field(default=0.05, gt=0.0, description="RK4 step")
    h: float = Field(default=FD_STEP, gt=0.0, description="finite difference step")
    radius: float = Field(default=DEFAULT_RADIUS, gt=0.0, description="chart radius")
    record_every: int = Field(default=1, gt=0)


class ExperimentConfig(BaseModel):
    """ One experiment: a scenario, its groups, quadrature, integrator and scenario parameters. """
    model_config = ConfigDict(extra='forbid')

    scenario: str
    groups: List[str] = Field(default_factory=list)
    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig)
    integrator: IntegratorConfig = Field(default_factory=IntegratorConfig)
    params: Dict[str, Any] = Field(default_factory=dict)
    output: str = 'results'

    @field_validator('scenario')
    @classmethod
    def _known_scenario(cls, value):
        if value not in SCENARIO_NAMES:
            raise ValueError('%s %s' % (TextTranslation().get_str('Error_scenario'), value))
        return value

    @field_validator('groups')
    @classmethod
    def _known_groups(cls, value):
        for name in value:
            GroupId.parse(name)
        return value

    def group_ids(self):
        return [GroupId.parse(name) for name in self.groups]

    def param(self, name):
        return self.params[name]


def _error_key(error, prefix=None):
    key = '.'.join(str(p) for p in error['loc'])
    if prefix:
        return '%s.%s' % (prefix, key) if key else prefix
    return key or 'config'


def parse_config(data):
    """ Validate a dictionary.

    The ``params`` entry is validated against the model of the scenario, which fills in its defaults, and every
    group is checked against the groups the scenario accepts.

    Raises
    ------
    ConfigError
        Naming the dotted path of the first offending entry.
    """
    try:
        config = ExperimentConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise ConfigError(_error_key(first), first['msg'])

    scenario = SCENARIOS[config.scenario]
    try:
        config.params = scenario.params.model_validate(config.params).model_dump()
    except ValidationError as e:
        first = e.errors()[0]
        raise ConfigError(_error_key(first, 'params'), first['msg'])

    for group in config.group_ids():
        try:
            scenario.check_group(group)
        except (MembershipError, ShapeError) as e:
            raise ConfigError('groups', str(e))
    return config


def load_config(filename):
    """ Read and validate a JSON configuration file. """
    try:
        with open(filename) as f:
            data = json.load(f)
    except (IOError, OSError) as e:
        raise ConfigError(str(filename), str(e))
    except ValueError as e:
        raise ConfigError(str(filename), 'invalid JSON: %s' % e)
    if not isinstance(data, dict):
        raise ConfigError(str(filename), 'a JSON object is required')
    return parse_config(data)
