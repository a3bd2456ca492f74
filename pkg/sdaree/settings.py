"""
Django settings for the sdaree project.

The project has no web surface: Django provides the management-command
CLI, the settings layer and the test runner for the ``cipher`` app.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Not used for any cryptographic purpose; Django refuses to start without one.
SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY", "sdaree-cli-no-sessions")

DEBUG = os.environ.get("DJANGO_DEBUG", "") == "1"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Local
    'cipher',
]

# No persistence: every command works on files and stdout.
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# SD-AREE tool defaults. Command-line flags take precedence.
SD_AREE = {
    "DEFAULT_WRAP": os.environ.get("SD_AREE_WRAP", "byte"),
    "DEFAULT_FORMAT": os.environ.get("SD_AREE_FORMAT", "raw"),
    "DIFFUSION_TRIALS": os.environ.get("SD_AREE_DIFFUSION_TRIALS", "200"),
    "DIFFUSION_SEED": os.environ.get("SD_AREE_DIFFUSION_SEED", "0"),
    "KAT_VECTORS": BASE_DIR / "cipher" / "vectors" / "sd_aree.kat",
}


# Logging
# https://docs.djangoproject.com/en/5.2/topics/logging/

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "plain",
        },
    },
    "loggers": {
        "cipher": {
            "handlers": ["console"],
            "level": os.environ.get("SD_AREE_LOG_LEVEL", "WARNING").upper(),
            "propagate": False,
        },
    },
}
