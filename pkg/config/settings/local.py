from .base import *  # noqa
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
DEBUG = True
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="spchain-local-k3Jq8vTnW2xRb7LmZp4Ys9Hd6Gf1Ce0Ua5Xo",
)

# django-extensions
# ------------------------------------------------------------------------------
try:
    import django_extensions  # noqa

    INSTALLED_APPS += ["django_extensions"]  # noqa F405
except ImportError:
    pass
