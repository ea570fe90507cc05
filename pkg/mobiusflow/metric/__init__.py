""" Package metric: quadrature over the compact group M and the kinetic energy metric of G.
"""
from .quadrature import *
from .symmetries import *
from .kinetic import *
