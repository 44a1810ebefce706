from .double_description import *
from .cone import *
from .polyhedron import *
