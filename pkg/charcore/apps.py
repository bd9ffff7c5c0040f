from django.apps import AppConfig


class CharcoreConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'charcore'
