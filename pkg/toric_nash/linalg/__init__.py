from .vectors import *
from .normal_forms import *
from .solve import *
from .arrays import *
