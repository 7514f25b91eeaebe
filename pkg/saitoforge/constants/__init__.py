from .CATALOG import *
from .SCHEMA import *
