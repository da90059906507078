from ._solflow import *  # noqa: F401,F403
from ._solflow import __doc__  # noqa: F401
