#!/usr/bin/env python
import os
import sys

if __name__ == "__main__":
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")

    try:
        from django.core.management import execute_from_command_line
    except ImportError as excp:
        raise ImportError(
            "Couldn't import Django. Install requirements/local.txt into the "
            "active environment before running the solver commands."
        ) from excp

    execute_from_command_line(sys.argv)
