import importlib.metadata
import logging

# Taken from https://stackoverflow.com/a/67097076
__version__ = importlib.metadata.version("sparsekron")

# The library only emits records; handlers are the caller's business.
logging.getLogger(__name__).addHandler(logging.NullHandler())
