from .cone_spec import *
from .catalog import *
from .schema import *
from .random_cones import *
from .report import *
