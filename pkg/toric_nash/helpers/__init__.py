from .config import *
from .errors import *
from .tools import *
