from django.apps import AppConfig


class PolyringConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'polyring'
