from api.reports import spectrum_report

from ._report import ReportCommand


class Command(ReportCommand):
    help = 'Выводит спектр оператора Дирака до уровня --cutoff'

    def build_report(self, config, options):
        return spectrum_report(config)
