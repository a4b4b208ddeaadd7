"""
Django settings for the halftransitive project.

The project has no database, no URL routing and no web front end: it is a
library app (``gamma``) plus management commands. Settings hold the search
budgets, the worker count for batch commands and the logging setup.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-gamma-census-local-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'gamma',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
        },
    },
]

# No persistence layer; Django falls back to its dummy backend.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Census settings

# Worker processes for batch commands (audit, relations --max-n)
HALFTRANS_THREADS = config('HALFTRANS_THREADS', default=1, cast=int)

# Node budget shared by the automorphism, canonical labeling and probe searches
HALFTRANS_SEARCH_BUDGET = config('HALFTRANS_SEARCH_BUDGET', default=2_000_000, cast=int)

# Expansion budget for the Hamiltonian cycle search
HALFTRANS_HAMILTONIAN_BUDGET = config('HALFTRANS_HAMILTONIAN_BUDGET', default=10 ** 8, cast=int)

# Largest n for which `audit` runs the automorphism stage (3n <= 180 vertices)
HALFTRANS_AUDIT_AUT_MAX_N = config('HALFTRANS_AUDIT_AUT_MAX_N', default=60, cast=int)


# Logging Configuration
HALFTRANS_LOG_LEVEL = config('HALFTRANS_LOG_LEVEL', default='INFO')
HALFTRANS_LOG_FILE = config('HALFTRANS_LOG_FILE', default='')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': False,
        },
        'gamma': {
            'handlers': ['console'],
            'level': HALFTRANS_LOG_LEVEL,
            'propagate': False,
        },
    },
}

# Add file logging when a log file is configured
if HALFTRANS_LOG_FILE:
    LOGGING['handlers']['file'] = {
        'level': 'INFO',
        'class': 'logging.FileHandler',
        'filename': HALFTRANS_LOG_FILE,
        'formatter': 'verbose',
    }
    LOGGING['root']['handlers'] = ['console', 'file']
    LOGGING['loggers']['django']['handlers'] = ['console', 'file']
    LOGGING['loggers']['gamma']['handlers'] = ['console', 'file']
