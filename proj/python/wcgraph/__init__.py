from ._wcgraph import *  # noqa: F401,F403
from ._wcgraph import __version__  # noqa: F401
