""" Package algebra: scalars of R, C, H and dense matrices over them.
"""
from .scalars import *
from .matrices import *
