#!/usr/bin/env python
"""Точка входа: команды commutators, spectrum, cs_action, partition."""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'backend.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            'Не удалось импортировать Django. Установите зависимости '
            'из requirements.txt и активируйте виртуальное окружение.'
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
