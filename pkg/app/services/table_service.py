"""
Grid evaluation and table rendering.

Cells are independent, so a grid may be evaluated in a process pool; rows are
always assembled in row-major order (m outer, n inner) so the output does not
depend on the number of workers.
"""
import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from app.core.config import settings
from app.schemas.table import CSV_COLUMNS, CSV_ORACLE_COLUMNS, TableDocument, TableGrid, TableRow
from app.services.homcount import brute_force_count, count_homs

logger = logging.getLogger(__name__)


def evaluate_cell(m: int, n: int, with_oracle: bool = False) -> TableRow:
    result = count_homs(m, n)
    if not with_oracle:
        return TableRow(m=m, n=n, case=result.case, count=result.count)
    oracle = brute_force_count(m, n).count
    return TableRow(
        m=m, n=n, case=result.case, count=result.count, oracle=oracle, agree=result.count == oracle
    )


def _evaluate_row(m: int, max_n: int, with_oracle: bool) -> List[TableRow]:
    return [evaluate_cell(m, n, with_oracle) for n in range(1, max_n + 1)]


def evaluate_grid(
    max_m: int,
    max_n: int,
    with_oracle: bool = False,
    workers: Optional[int] = None,
) -> List[TableRow]:
    """All cells 1 <= m <= max_m, 1 <= n <= max_n in row-major order"""
    workers = workers or settings.TABLE_WORKERS
    logger.info(f"Evaluating {max_m}x{max_n} grid (oracle={with_oracle}, workers={workers})")

    ms = range(1, max_m + 1)
    if workers <= 1:
        chunks = [_evaluate_row(m, max_n, with_oracle) for m in ms]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            # map preserves submission order
            chunks = list(executor.map(
                _evaluate_row, ms, [max_n] * max_m, [with_oracle] * max_m
            ))
    return [row for chunk in chunks for row in chunk]


def mismatches(rows: List[TableRow]) -> List[TableRow]:
    return [row for row in rows if row.agree is False]


def render_csv(rows: List[TableRow], with_oracle: bool) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS + (CSV_ORACLE_COLUMNS if with_oracle else []))
    for row in rows:
        writer.writerow(row.csv_fields(with_oracle))
    return buffer.getvalue()


def render_json(rows: List[TableRow], max_m: int, max_n: int) -> str:
    document = TableDocument(rows=rows, grid=TableGrid(max_m=max_m, max_n=max_n))
    return document.model_dump_json(indent=2, exclude_none=True) + "\n"
