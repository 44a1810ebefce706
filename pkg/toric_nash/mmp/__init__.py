from .fan import *
from .certificates import *
from .minimal_model import *
