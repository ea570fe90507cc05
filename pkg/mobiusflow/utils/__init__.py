""" Package utils.
"""
from .singleton import *
from .serializable import *
from .logger import *
from .utils_translation import *
from .errors import *
from .utils_io import *
