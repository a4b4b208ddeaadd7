from django.apps import AppConfig


class GammaConfig(AppConfig):
    name = 'gamma'
    verbose_name = 'Γ(n,a) graph family'
