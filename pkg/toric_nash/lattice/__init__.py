from .enumeration import *
from .triangulation import *
from .hilbert import *
