from django.apps import AppConfig


class CoreConfig(AppConfig):
    """Exceptions, run configuration, services and the management commands."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'core'
    verbose_name = 'PlaneChar core'
