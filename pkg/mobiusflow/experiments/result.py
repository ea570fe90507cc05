import numpy as np

from ..utils.errors import MembershipError
from ..utils.serializable import Serializable
from .params import ScenarioParams

__all__ = ['ScenarioResult', 'Scenario', 'LESS', 'GREATER', 'EQUAL']

LESS = '<'
GREATER = '>'
EQUAL = '=='


class ScenarioResult(Serializable):
    """ Outcome of one scenario: tolerance checks, scalar metrics and tables.

    Attributes
    ----------
    name : str
        Scenario name.

    theorem : str
        Statement the scenario tests.

    checks : list[dict]
        One entry {name, value, threshold, relation, pass} per asserted tolerance.

    metrics : dict
        Reported values without pass/fail.

    tables : dict
        pandas.DataFrame per table name.
    """

    def __init__(self, name, theorem):
        self.name = name
        self.theorem = theorem
        self.checks = []
        self.metrics = {}
        self.tables = {}

    def check(self, name, value, threshold, relation=LESS):
        """ Record a tolerance check and return whether it holds. """
        value = float(value)
        if relation == LESS:
            passed = value < threshold
        elif relation == GREATER:
            passed = value > threshold
        else:
            passed = value == threshold
        passed = bool(passed and np.isfinite(value))
        self.checks.append({'name': name, 'value': value, 'threshold': threshold, 'relation': relation,
                            'pass': passed})
        return passed

    @property
    def passed(self):
        return all(c['pass'] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c['pass']]

    def report(self, config=None, metadata=None):
        """ JSON report; only metadata.timestamp depends on the time of the run. """
        out = {'scenario': self.name, 'theorem': self.theorem, 'pass': self.passed, 'checks': self.checks,
               'failures': [c['name'] for c in self.failures()], 'metrics': self.metrics,
               'tables': sorted(self.tables.keys())}
        if config is not None:
            out['config'] = config
        if metadata is not None:
            out['metadata'] = metadata
        return out


class Scenario(object):
    """ Named experiment.

    Attributes
    ----------
    name : str
        Name used in configuration files.

    theorem : str
        Statement tested (written in every report).

    function : callable
        function(config, result, seed) filling a ScenarioResult.

    defaults : dict
        Built-in configuration used by the acceptance suite.

    params : type
        Pydantic model of the ``params`` entry, unknown keys are rejected.

    group_rule : callable or None
        group_rule(group) raises MembershipError or ShapeError for a group the scenario can not use; None
        when the scenario takes no groups.
    """

    def __init__(self, name, theorem, function, defaults, params=ScenarioParams, group_rule=None):
        self.name = name
        self.theorem = theorem
        self.function = function
        self.defaults = defaults
        self.params = params
        self.group_rule = group_rule

    def check_group(self, group):
        if self.group_rule is None:
            raise MembershipError('Error_no_groups', str(group))
        self.group_rule(group)

    def __call__(self, config, seed):
        result = ScenarioResult(self.name, self.theorem)
        self.function(config, result, seed)
        return result
