""" Library for the kinetic energy metric of Möbius actions of split unitary groups.
"""
from . import algebra
from . import groups
from . import action
from . import metric
from . import geodesic
from . import lowdim
from . import experiments
from . import utils

__version__ = "0.1.dev0"
__author__ = 'pdoren'
__project__ = 'MobiusFlow'
