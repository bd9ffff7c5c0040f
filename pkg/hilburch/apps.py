from django.apps import AppConfig


class HilburchConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hilburch'
