from .singularities import *
