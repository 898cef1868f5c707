"""
Вывод отчётов в JSON, CSV и Markdown.
"""
import pandas as pd
from rest_framework.renderers import JSONRenderer


def render_report(report, output_format):
    """Строка отчёта в выбранном формате."""
    if output_format == 'json':
        return JSONRenderer().render(report.data).decode('utf-8')
    frame = pd.DataFrame(report.rows)
    if output_format == 'csv':
        return frame.to_csv(index=False)
    if output_format == 'markdown':
        return frame.to_markdown(index=False)
    raise ValueError(f'Неизвестный формат вывода {output_format!r}.')
