"""
With these settings, tests run quieter.
"""

from .base import *  # noqa
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="spchain-test-Qw7Er2Ty5Ui8Op3As6Df9Gh1Jk4Lz0Xc",
)
TEST_RUNNER = "django.test.runner.DiscoverRunner"

# LOGGING
# ------------------------------------------------------------------------------
LOGGING["loggers"]["spchain"]["level"] = env.str(  # type: ignore[index] # noqa F405
    "SPCHAIN_LOG_LEVEL", default="WARNING"
)
