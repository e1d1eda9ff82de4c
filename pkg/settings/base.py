# Third-Party
from decouple import config

# Python
from pathlib import Path
from logging.config import dictConfig
import logging
import sys
import os


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent
sys.path.append(str(BASE_DIR))
sys.path.append(os.path.join(BASE_DIR, "apps"))

# Required by Django at startup.
SECRET_KEY = config("SECRET_KEY", default="maxdominance-local")
DEBUG = config("DEBUG", default=False, cast=bool)
ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    # Third-Party
    "rest_framework",
    # Django
    "django.contrib.contenttypes",
    "django.contrib.auth",
    # Apps
    "dominance.apps.DominanceConfig",
]

# Database
# Nothing is persisted; the engine only satisfies Django's startup checks.

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": config("DB_NAME", default=os.path.join(BASE_DIR, "db.sqlite3")),
    }
}

# Solver
MAXDOM_MEMORY_BUDGET = config(
    "MAXDOM_MEMORY_BUDGET", default=64 * 1024 * 1024, cast=int
)
MAXDOM_PRED_LIMIT = config("MAXDOM_PRED_LIMIT", default=4_000_000, cast=int)
MAXDOM_ORACLE_LIMIT = config("MAXDOM_ORACLE_LIMIT", default=10**6, cast=int)
MAXDOM_RENDER_MAX_M = config("MAXDOM_RENDER_MAX_M", default=200, cast=int)
MAXDOM_GENERATOR_MAX_POINTS = config(
    "MAXDOM_GENERATOR_MAX_POINTS", default=5_000_000, cast=int
)

# Logger
LOG_LEVEL = config("LOG_LEVEL", default="INFO")
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "level": LOG_LEVEL,
            "formatter": "detailed",
        },
    },
    "formatters": {
        "detailed": {
            "format": "%(asctime)s - %(levelname)s - %(name)s - %(message)s",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": LOG_LEVEL,
    },
} # Logging config

dictConfig(LOGGING)

logger = logging.getLogger(__name__)

# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

# Default primary key field type

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Rest Framework
# Serializers are used for validation and JSON rendering only.
REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
    "COERCE_DECIMAL_TO_STRING": False,
}
