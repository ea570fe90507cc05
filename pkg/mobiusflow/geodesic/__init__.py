""" Package geodesic: exponential charts, the geodesic equation of the kinetic energy metric and its checks.
"""
from .chart import *
from .solver import *
from .checks import *
