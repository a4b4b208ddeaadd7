import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'halftransitive.settings')
django.setup()
