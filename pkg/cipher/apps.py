from django.apps import AppConfig


class CipherConfig(AppConfig):
    name = 'cipher'
    verbose_name = 'SD-AREE cipher'
