import json
import sys

from django.core.management.base import CommandError

from api.constants import EXIT_PARSE
from api.reports import cs_action_report

from ._report import ReportCommand


class Command(ReportCommand):
    help = 'Вычисляет действие Черна–Саймонса для связности из JSON файла'
    stealth_options = ('stdin',)

    def add_arguments(self, parser):
        parser.add_argument(
            'connection',
            type=str,
            help='Путь к JSON файлу связности или - для stdin'
        )
        super().add_arguments(parser)

    def read_connection(self, options):
        path = options['connection']

        try:
            if path == '-':
                return json.load(options.get('stdin') or sys.stdin)
            with open(path, 'r', encoding='utf-8') as file:
                return json.load(file)
        except FileNotFoundError:
            raise CommandError(
                f'Файл {path} не найден', returncode=EXIT_PARSE
            )
        except OSError as error:
            raise CommandError(
                f'Не удалось прочитать {path}: {error}',
                returncode=EXIT_PARSE,
            )
        except json.JSONDecodeError as error:
            raise CommandError(
                f'Ошибка декодирования JSON файла: {error}',
                returncode=EXIT_PARSE,
            )

    def build_report(self, config, options):
        return cs_action_report(config, self.read_connection(options))
