"""
Django settings for config project.

Generated by 'django-admin startproject' using Django 5.2.7, trimmed down to
what the symcoef batch tools need (no web front end).

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent
ENV_FILE = BASE_DIR / ".env"
load_dotenv(ENV_FILE)

# キャッシュディレクトリは相対パスなら BASE_DIR 基準で絶対パス化
cache_path = os.getenv("SYMCOEF_CACHE_DIR")
if cache_path:
    cache_path = str((BASE_DIR / cache_path).resolve()) if not cache_path.startswith("/") else cache_path

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "django-insecure-symcoef-batch-only")

DEBUG = os.getenv("DJANGO_DEBUG", "0") == "1"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'symcoef',
]

MIDDLEWARE = []


# Database
# 計算は全てメモリ上。management command の都合で sqlite だけ残す
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Logging
# stdout は計算結果専用。ログは必ず stderr へ
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        "symcoef": {
            "handlers": ["console"],
            "level": os.getenv("SYMCOEF_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
    },
}


# 計算の上限・キャッシュ・並列度をここで制御
SYMCOEF = {
    "CHAR_TABLE_CAP": 20,        # 指標表を作る n の上限（p(20)=627）
    "MAX_DIM_CAP": 40,           # D(n) の全探索
    "KRON_BRUTE_CAP": 8,         # Σg² の全三つ組チェック
    "MAX_KRON_CAP": 12,          # K(n) の三つ組スキャン
    "LR_IDENTITY_CAP": 10,       # LR 恒等式の全列挙
    "SERIES_CAP": 40,            # 冪級数の打ち切り次数
    "LR_CAP": 23,                # C(λ) を求める |λ| の上限
    "TABLE_CAP": 18,             # C(n,k) 表（公開表の範囲）
    "STRETCH_CAP": 23,           # --stretch 指定時の上限
    "STABILIZATION_K_CAP": 6,
    "HIVE_SIDE_CAP": 16,
    "SKEW_CAUCHY_CAP": 8,
    "TREE_CAP": 16,
    "WITNESS_LIMIT": 64,         # 同値の最大値を何個まで保持するか
    "CACHE_DIR": cache_path,     # None ならディスクキャッシュしない
    "THREADS": int(os.getenv("SYMCOEF_THREADS", "0")) or None,
}
