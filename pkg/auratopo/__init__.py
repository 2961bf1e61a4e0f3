"""auratopo: finite aura topological spaces.
A topology on a finite set of points, paired with a scope function that
gives every point an open neighbourhood (its aura). The package computes
aura closures and interiors, generalized open classes, continuity and
separation profiles, and reads them as rough-set approximations, spread
of an infection and sensor coverage.
"""

from __future__ import absolute_import

from . import log
from .aura import *
from .classes import *
from .consts import *
from .document import *
from .errors import *
from .fixtures import *
from .generator import *
from .morphism import *
from .pointset import *
from .properties import *
from .rough import *
from .sensor import *
from .separation import *
from .space import *
from .spread import *
from .utils import *
from .validation import *
