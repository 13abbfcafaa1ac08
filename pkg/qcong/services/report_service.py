"""Report rendering and loading"""
import csv
import io
import json
import logging
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError

from qcong.core.exceptions import ReportFormatError, ReportWriteError
from qcong.schemas.report import InstanceRecord, Report
from qcong.schemas.run_config import OutputFormat

logger = logging.getLogger(__name__)

COLUMNS = ["id", "p", "m", "kind", "verdict", "oracle", "limit_check", "millis", "note"]


def _cells(record: InstanceRecord) -> List[str]:
    data = record.model_dump(mode="json")
    return ["" if data[column] is None else str(data[column]) for column in COLUMNS]


class ReportService:
    """Render a Report as table, csv or json; load json reports back"""

    @staticmethod
    def render(report: Report, output_format: Union[OutputFormat, str]) -> str:
        output_format = OutputFormat(output_format)
        if output_format is OutputFormat.JSON:
            return ReportService.to_json(report)
        if output_format is OutputFormat.CSV:
            return ReportService.to_csv(report)
        return ReportService.to_table(report)

    @staticmethod
    def to_json(report: Report) -> str:
        return json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def to_csv(report: Report) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(COLUMNS)
        for record in report.records:
            writer.writerow(_cells(record))
        return buffer.getvalue()

    @staticmethod
    def to_table(report: Report) -> str:
        rows = [COLUMNS] + [_cells(record) for record in report.records]
        # the free-text note stays unpadded in the last column
        widths = [max(len(row[i]) for row in rows) for i in range(len(COLUMNS) - 1)]
        lines = []
        for row in rows:
            padded = [cell.ljust(width) for cell, width in zip(row, widths)]
            lines.append("  ".join(padded + [row[-1]]).rstrip())
        summary = report.summary
        lines.append("")
        lines.append(
            f"total={summary.total} holds={summary.holds} violated={summary.violated} "
            f"not_applicable={summary.not_applicable} error={summary.error} "
            f"oracle_disagree={summary.oracle_disagree} limit_disagree={summary.limit_disagree}"
            + (" (truncated)" if summary.truncated else "")
        )
        return "\n".join(lines) + "\n"

    @staticmethod
    def write(report: Report, output_format: Union[OutputFormat, str], path: Path) -> None:
        try:
            Path(path).write_text(ReportService.render(report, output_format), encoding="utf-8")
        except OSError as exc:
            logger.error(f"❌ [REPORT] cannot write {path}: {exc}")
            raise ReportWriteError(f"cannot write report {path}: {exc}") from exc
        logger.info(f"📝 [REPORT] wrote {len(report.records)} records to {path}")

    @staticmethod
    def load(path: Union[Path, str]) -> Report:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ReportFormatError(f"cannot read report {path}: {exc}") from exc
        return ReportService.parse(text)

    @staticmethod
    def parse(text: str) -> Report:
        try:
            return Report.model_validate(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ReportFormatError(f"report is not valid JSON: {exc}") from exc
        except ValidationError as exc:
            raise ReportFormatError(f"report does not match the schema: {exc.error_count()} errors") from exc
