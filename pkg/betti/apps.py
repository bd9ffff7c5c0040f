from django.apps import AppConfig


class BettiConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'betti'
