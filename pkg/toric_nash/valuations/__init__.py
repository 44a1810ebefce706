from .newton import *
from .nash import *
from .analysis import *
