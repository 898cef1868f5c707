import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from algebra.exceptions import ContextMismatchError
from api.constants import (EXIT_CONTEXT, EXIT_NUMERIC, EXIT_PARSE,
                           EXIT_VALIDATION, OUTPUT_FORMATS)
from api.formatters import render_report
from api.serializers import RunConfigSerializer

logger = logging.getLogger(__name__)

OPTION_NAMES = (
    'theta', 'dirac', 'cutoff', 'level', 'xi', 'psi', 'tolerance',
    'format', 'seed',
)


class ReportCommand(BaseCommand):
    """Общие флаги запуска, вывод отчёта и коды завершения."""

    def add_arguments(self, parser):
        parser.add_argument('--theta', type=float, help='Параметр θ')
        parser.add_argument(
            '--dirac', type=str, help='Оператор Дирака: d1, d2 или d3'
        )
        parser.add_argument('--cutoff', type=int, help='Обрезание мод N')
        parser.add_argument('--level', type=int, help='Уровень k')
        parser.add_argument(
            '--xi', type=str, help='Параметр калибровки ξ или auto'
        )
        parser.add_argument(
            '--psi', type=str, help='Значение ψ или average'
        )
        parser.add_argument(
            '--tolerance', type=float, help='Допуск сравнения'
        )
        parser.add_argument(
            '--format', type=str, choices=OUTPUT_FORMATS,
            help='Формат вывода'
        )
        parser.add_argument('--seed', type=int, help='Зерно выборки ψ')
        parser.add_argument(
            '--out', type=str, help='Путь к файлу для записи отчёта'
        )

    def build_report(self, config, options):
        raise NotImplementedError

    def get_config(self, options):
        data = {
            name: options[name] for name in OPTION_NAMES
            if options.get(name) is not None
        }
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(
                f'Неверные параметры: {serializer.errors}',
                returncode=EXIT_VALIDATION,
            )
        return serializer.validated_data

    def handle(self, *args, **options):
        config = self.get_config(options)

        try:
            report = self.build_report(config, options)
        except ContextMismatchError as error:
            raise CommandError(str(error), returncode=EXIT_CONTEXT)
        except serializers.ValidationError as error:
            raise CommandError(
                f'Неверный документ: {error.detail}',
                returncode=EXIT_VALIDATION,
            )
        except ValueError as error:
            raise CommandError(str(error), returncode=EXIT_VALIDATION)
        except ArithmeticError as error:
            raise CommandError(str(error), returncode=EXIT_NUMERIC)

        content = render_report(report, config['format'])

        if options.get('out'):
            try:
                with open(options['out'], 'w', encoding='utf-8') as file:
                    file.write(content)
            except OSError as error:
                raise CommandError(
                    f'Не удалось записать {options["out"]}: {error}',
                    returncode=EXIT_PARSE,
                )
            self.stdout.write(
                self.style.SUCCESS(f'Отчёт записан в {options["out"]}')
            )
        else:
            self.stdout.write(content)
