from api.reports import partition_report

from ._report import ReportCommand


class Command(ReportCommand):
    help = 'Вычисляет статсумму Z′(k) и классическое Z(k) на S³'

    def build_report(self, config, options):
        report = partition_report(config)
        if config['level'] == 0:
            self.stdout.write(
                self.style.WARNING(
                    'При k = 0 выводится только классическое значение'
                )
            )
        return report
