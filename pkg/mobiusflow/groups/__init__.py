""" Package groups: compact groups SOn, Un, Spn, split groups O0(n,n), SU(n,n), Sp(n,n), their Lie
algebras, Haar sampling, maximal tori and the inclusions between split groups.
"""
from .groupid import *
from .liealgebra import *
from .haarsampling import *
from .maximaltorus import *
from .embeddings import *
from .curves import *
from .cartan import *
