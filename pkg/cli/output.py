# -*- coding: utf-8 -*-
"""
结果表输出：CSV / JSON

浮点数按 repr 输出（最短可往返表示），CSV 换行符固定为 \\n。
"""

import csv
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import IO, List, Optional, Sequence

from cli.scenario import OutputFormat, OutputSpec

INTERFERENCE_COLUMNS = ["sweep_param", "sweep_value", "value", "error_envelope", "terms_used", "method"]
SINR_COLUMNS = INTERFERENCE_COLUMNS + ["sinr", "sinr_db"]
VALIDATION_COLUMNS = ["sweep_param", "sweep_value", "oracle", "closed_form", "abs_error",
                      "error_envelope", "status"]


@dataclass(frozen=True)
class SweepRow:
    """扫描结果中的一行"""
    sweep_param: str
    sweep_value: float
    value: float
    error_envelope: Optional[float]
    terms_used: int
    method: str
    sinr: Optional[float] = None
    sinr_db: Optional[float] = None


@dataclass(frozen=True)
class ValidationRow:
    """oracle 与闭式近似对比结果中的一行"""
    sweep_param: str
    sweep_value: float
    oracle: float
    closed_form: float
    abs_error: float
    error_envelope: Optional[float]
    status: str

    @property
    def passed(self) -> bool:
        return self.status == "PASS"


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(rows: Sequence, columns: List[str], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        record = asdict(row)
        writer.writerow([_cell(record[name]) for name in columns])


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def write_json(rows: Sequence, columns: List[str], stream: IO[str]) -> None:
    """
    写出 JSON 数组

    非有限浮点数写为 null；SINR 为 +∞ 的行额外带 "unbounded": true。
    """
    records = []
    for row in rows:
        record = asdict(row)
        item = {name: _json_value(record[name]) for name in columns}
        if record.get("sinr") == math.inf:
            item["unbounded"] = True
        records.append(item)
    json.dump(records, stream, ensure_ascii=False, indent=2, allow_nan=False)
    stream.write("\n")


def emit(rows: Sequence, columns: List[str], output: OutputSpec,
         stream: Optional[IO[str]] = None) -> None:
    """
    按输出配置写出结果表

    Args:
        rows: SweepRow 或 ValidationRow 序列
        columns: 列名（决定 CSV 表头）
        output: 输出位置与格式，path 为空时写到 stream（默认标准输出）
    """
    writer = write_json if output.format == OutputFormat.JSON else write_csv
    if output.path:
        path = Path(output.path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer(rows, columns, f)
        return
    writer(rows, columns, stream if stream is not None else sys.stdout)
