""" Package action: the Möbius action of a split group G on its compact counterpart M, the graph
picture of M inside the isotropic Grassmannian and the velocity fields induced on M.
"""
from .mobius import *
from .grassmannian import *
from .fields import *
from .concentration import *
