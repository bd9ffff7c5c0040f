"""
Django settings for PlaneChar project.

The project has no web surface and no database; Django provides the
management-command runner, settings and the test harness.
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='django-insecure-planechar-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
DJANGO_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
]

THIRD_PARTY_APPS = [
    'rest_framework',
]

LOCAL_APPS = [
    'core',
    'charcore',
    'betti',
    'polyring',
    'hilburch',
    'resolve',
]

INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + LOCAL_APPS

MIDDLEWARE = []

# Pure computation, nothing is persisted
DATABASES = {}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework (serializers and JSON rendering only)
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': False,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
}

# Logging Configuration
# stdout carries command output only; everything else goes to stderr or files
LOGS_DIR = Path(config('PLANECHAR_LOGS_DIR', default=str(BASE_DIR / 'logs')))
LOGS_DIR.mkdir(parents=True, exist_ok=True)

LOG_LEVEL = config('PLANECHAR_LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {asctime} {message}',
            'style': '{',
        },
        'json': {
            '()': 'pythonjsonlogger.jsonlogger.JsonFormatter',
            'format': '%(asctime)s %(levelname)s %(name)s %(process)d %(message)s',
        },
    },
    'handlers': {
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'simple',
        },
        'file_planechar': {
            'level': 'INFO',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOGS_DIR / 'planechar.log',
            'maxBytes': 1024*1024*10,  # 10 MB
            'backupCount': 5,
            'formatter': 'json',
        },
        'file_errors': {
            'level': 'ERROR',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOGS_DIR / 'errors.log',
            'maxBytes': 1024*1024*10,  # 10 MB
            'backupCount': 10,
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
        'core': {
            'handlers': ['console', 'file_planechar', 'file_errors'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'charcore': {
            'handlers': ['console', 'file_planechar', 'file_errors'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'betti': {
            'handlers': ['console', 'file_planechar', 'file_errors'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'polyring': {
            'handlers': ['file_planechar', 'file_errors'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'hilburch': {
            'handlers': ['console', 'file_planechar', 'file_errors'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'resolve': {
            'handlers': ['console', 'file_planechar', 'file_errors'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}

# PlaneChar Specific Settings
PLANECHAR_SETTINGS = {
    'DEFAULT_FIELD': config('PLANECHAR_FIELD', default='prime:32003'),
    'DEFAULT_SEED': config('PLANECHAR_SEED', default=0, cast=int),
    'DEFAULT_JOBS': config('PLANECHAR_JOBS', default=1, cast=int),
    'PROBE_TRIALS': config('PLANECHAR_PROBE_TRIALS', default=25, cast=int),

    # selftest windows
    'GHOST_CASES': 50,
    'RESOLVE_DEGREE_LIMIT': 20,
    'RATIONAL_SUBSAMPLE': 25,

    # stabilization search cap for resolve
    'MAX_SWEEP_DEGREE': 64,
}

# Version information
VERSION = '1.0.0'
