""" Package lowdim: split quaternions, the sphere actions and the morphisms relating them to Möbius actions.
"""
from .splitquaternions import *
from .spheres import *
from .morphisms import *
from .diagrams import *
from .corollary import *
