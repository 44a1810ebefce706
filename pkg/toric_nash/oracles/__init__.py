from .brute import *
from .hirzebruch_jung import *
