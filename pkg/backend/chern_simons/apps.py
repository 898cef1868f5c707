from django.apps import AppConfig


class ChernSimonsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'chern_simons'
    verbose_name = 'Действие Черна–Саймонса'
