from django.apps import AppConfig


class SymcoefConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'symcoef'
    verbose_name = 'Symmetric group structure constants'
