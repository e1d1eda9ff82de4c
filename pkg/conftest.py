# Configure Django before test modules import it (mirrors manage.py).
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "settings.base")
django.setup()
