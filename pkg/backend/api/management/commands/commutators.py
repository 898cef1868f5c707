from api.reports import commutators_report

from ._report import ReportCommand


class Command(ReportCommand):
    help = 'Выводит коммутаторы [D, x] для образующих S³_θ'

    def build_report(self, config, options):
        return commutators_report(config)
