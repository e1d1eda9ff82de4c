from django.apps import AppConfig


class DominanceConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'dominance'
    verbose_name = 'maxDominance solver'
