import logging

from rest_framework import status, viewsets
from rest_framework.decorators import action
from rest_framework.response import Response

from .constants import NUMERIC_ERROR_STATUS
from .reports import (commutators_report, cs_action_report, partition_report,
                      spectrum_report)
from .serializers import RunConfigSerializer

logger = logging.getLogger(__name__)


class ReportViewSet(viewsets.ViewSet):
    """
    Вьюсет для отчётов.

    Эндпоинты:
    - GET /api/reports/commutators/ - таблица [D, x] для образующих;
    - GET /api/reports/spectrum/ - спектр оператора Дирака;
    - POST /api/reports/cs-action/ - действие Черна–Саймонса;
    - GET /api/reports/partition/ - статсумма Z′(k).
    """

    def get_config(self, request):
        """Параметры запуска из строки запроса."""
        serializer = RunConfigSerializer(data=request.query_params.dict())
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    def build(self, builder, *args):
        """Ошибки входа дают 400, вычислительные ошибки 422."""
        try:
            report = builder(*args)
        except ArithmeticError as error:
            logger.warning('Вычисление не выполнено: %s', error)
            return Response(
                {'detail': str(error)}, status=NUMERIC_ERROR_STATUS
            )
        except ValueError as error:
            return Response(
                {'detail': str(error)}, status=status.HTTP_400_BAD_REQUEST
            )
        return Response(report.data)

    @action(detail=False, methods=['get'])
    def commutators(self, request):
        return self.build(commutators_report, self.get_config(request))

    @action(detail=False, methods=['get'])
    def spectrum(self, request):
        return self.build(spectrum_report, self.get_config(request))

    @action(detail=False, methods=['post'], url_path='cs-action')
    def cs_action(self, request):
        """Тело запроса: JSON связности {theta, pairs}."""
        return self.build(
            cs_action_report, self.get_config(request), request.data
        )

    @action(detail=False, methods=['get'])
    def partition(self, request):
        return self.build(partition_report, self.get_config(request))
