""" Package experiments: named scenarios, their JSON configuration, the runner and the command line.
"""
from .config import *
from .result import *
from .scenarios import *
from .runner import *
from .cli import *
