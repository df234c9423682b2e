import os

SPARSEKRON_DEBUG = os.getenv("SPARSEKRON_DEBUG", "FALSE").lower() == "true"
