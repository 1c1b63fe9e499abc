# Test wiring for running the Django test cases under plain pytest:
# mirror what manage.py does before the test runner starts.
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
django.setup()
