import os

from .errors import ResourceError

OVERRIDE_ENV = "DELAYCODE_GUARD_OVERRIDE"


def guard(ok, message):
    """Raise ResourceError unless ``ok`` or the override variable is set."""
    if not ok and os.environ.get(OVERRIDE_ENV) != "1":
        raise ResourceError(message)
