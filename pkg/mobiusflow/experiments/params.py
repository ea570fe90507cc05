from typing import List, Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, field_validator, model_validator

from ..groups.embeddings import EMBEDDING_PAIRS
from ..groups.groupid import GroupId
from ..metric.kinetic import check_metric_group
from ..utils.errors import MembershipError, ShapeError

__all__ = ['ScenarioParams', 'MetricClosedFormParams', 'BiInvarianceParams', 'IsometryParams', 'FiniteLengthParams',
           'IncompletenessParams', 'MassConcentrationParams', 'RigidGeodesicParams', 'TotallyGeodesicParams',
           'FixedPointAlgebraParams', 'Corollary7Params', 'LowdimDiagramsParams', 'OracleParams',
           'any_split', 'closed_form_group', 'fixed_point_group']

SU11 = GroupId.parse('SU(1,1)')


def _increasing(values):
    if np.any(np.diff(values) <= 0.0):
        raise ValueError('times must be strictly increasing')
    return values


class ScenarioParams(BaseModel):
    """ Base of the scenario parameters, on its own it accepts no entry. """
    model_config = ConfigDict(extra='forbid')


class MetricClosedFormParams(ScenarioParams):
    times: List[float] = Field(default=[0.0, 0.3, 0.6, 0.9], min_length=1, description="points t of [0, 1)")
    torus_grid: PositiveInt = 256
    mc_samples: PositiveInt = 10 ** 6
    torus_tol: PositiveFloat = 1e-6
    mc_tol: PositiveFloat = 1e-2

    @field_validator('times')
    @classmethod
    def _inside(cls, value):
        if any(t < 0.0 or t >= 1.0 for t in value):
            raise ValueError('times must lie in [0, 1)')
        return value


class BiInvarianceParams(ScenarioParams):
    count: PositiveInt = Field(default=20, description="directions per group")


class IsometryParams(ScenarioParams):
    count: PositiveInt = Field(default=1000, description="random (k1, k2, g, X) per group")
    tol: PositiveFloat = 1e-9
    conjugation_count: PositiveInt = 20


class FiniteLengthParams(ScenarioParams):
    epsilons: List[float] = Field(default=[1e-1, 1e-2, 1e-3, 1e-4], min_length=1,
                                  description="the curve is integrated up to t = 1 - epsilon")
    tol: PositiveFloat = 1e-2
    cauchy_tol: PositiveFloat = 5e-2

    @field_validator('epsilons')
    @classmethod
    def _inside(cls, value):
        if any(e <= 0.0 or e >= 1.0 for e in value):
            raise ValueError('epsilons must lie in (0, 1)')
        return value


class IncompletenessParams(ScenarioParams):
    gap_max: float = Field(default=0.1, gt=0.0, lt=1.0, description="largest 1 - t of the speed fit")
    gap_min: float = Field(default=1e-3, gt=0.0, lt=1.0, description="smallest 1 - t of the speed fit")
    points: int = Field(default=12, ge=2)
    slope_tol: PositiveFloat = 0.05
    geodesic_samples: PositiveInt = 512
    distance_tol: PositiveFloat = 1e-4

    @model_validator(mode='after')
    def _ordered(self):
        if self.gap_min >= self.gap_max:
            raise ValueError('gap_min must be smaller than gap_max')
        return self


class MassConcentrationParams(ScenarioParams):
    count: PositiveInt = Field(default=100, description="Haar samples of M")
    det_threshold: PositiveFloat = Field(default=2e-2, description="samples with |det(q + I)| below are dropped")
    times: List[float] = Field(default=[0.0, 1.0, 2.0, 3.0, 4.0, 5.0], min_length=2)
    tol: PositiveFloat = 2e-2
    monotone_tol: PositiveFloat = Field(default=1e-12, description="largest increase of the distance allowed")

    @field_validator('times')
    @classmethod
    def _times(cls, value):
        if value[0] < 0.0:
            raise ValueError('times must be non negative')
        return _increasing(value)


class RigidGeodesicParams(ScenarioParams):
    count: PositiveInt = Field(default=5, description="directions diag(X, 0) per group")
    times: List[float] = Field(default=[0.0, 0.5, 1.0], min_length=1, description="times of the mixed defect")
    tol: PositiveFloat = 1e-4
    energy_tol: PositiveFloat = 5e-3


class TotallyGeodesicParams(ScenarioParams):
    pairs: List[Tuple[Literal['a', 'b', 'c', 'd', 'e'], PositiveInt]] = Field(
        default=[('a', 1), ('b', 1), ('c', 1), ('d', 2), ('e', 1)], min_length=1,
        description="inclusion label and size n of the subgroup")
    tol: PositiveFloat = 1e-4

    @field_validator('pairs')
    @classmethod
    def _nondegenerate(cls, value):
        for label, n in value:
            try:
                check_metric_group(EMBEDDING_PAIRS[label][1](n))
            except MembershipError as e:
                raise ValueError('(%s, %d): %s' % (label, n, e))
        return value


class FixedPointAlgebraParams(ScenarioParams):
    pass


class Corollary7Params(ScenarioParams):
    times: List[float] = Field(default=[0.0, 0.5, 1.0], min_length=1)
    tol: PositiveFloat = 1e-4
    floor_count: PositiveInt = 2
    single_count: PositiveInt = 2
    mixed_count: PositiveInt = 10
    sp11_count: PositiveInt = 3
    separation: PositiveFloat = Field(default=10.0, description="mixed defects over the noise floor")


class LowdimDiagramsParams(ScenarioParams):
    samples: PositiveInt = 1000
    scale: PositiveFloat = Field(default=1.0, description="spread of the random group elements")


class OracleParams(ScenarioParams):
    count: PositiveInt = 1000
    tol: PositiveFloat = 1e-9


# ---------------------------------------------------------------------------------------------------------------------
# groups accepted by a scenario
# ---------------------------------------------------------------------------------------------------------------------

def any_split(group):
    if not group.is_split():
        raise MembershipError('Error_split_only', str(group))


def closed_form_group(group):
    if group != SU11:
        raise MembershipError('Error_closed_form', str(group))


def fixed_point_group(group):
    any_split(group)
    if group.n < 2:
        raise ShapeError('n = %d < 2' % group.n)
