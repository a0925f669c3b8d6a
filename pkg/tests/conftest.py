import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

# Compiled kernels make the first call slow; per-example deadlines are meaningless here.
settings.register_profile("lagint", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("lagint")
