"""
Rendering of reports and sample tables as text, JSON and CSV.

JSON floats use Python's shortest round-trip repr, so parsing and re-dumping a
document is byte-identical. CSV floats use 17 significant digits.
"""
import io
import json
from typing import Iterable, List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel

from . import config
from .classifier.report import ClassificationReport, SweepRow
from .polynomial.oracle import OracleReport

SAMPLE_COLUMNS = ["theta", "f"]
SWEEP_COLUMNS = ["alpha", "beta", "gamma", "n_int", "f0", "fpi"]


def to_json(model: BaseModel) -> str:
    """Pretty-printed JSON in field-declaration order"""
    return json.dumps(model.model_dump(mode="json"), indent=2)


def canonical_json(text: str) -> str:
    """Re-serialize a JSON document the way to_json does"""
    return json.dumps(json.loads(text), indent=2)


def _num(value: Optional[float], decimals: Optional[int] = None) -> str:
    if value is None:
        return "-"
    decimals = config.TEXT_DECIMALS if decimals is None else decimals
    return f"{value:.{decimals}f}"


def _nums(values: Iterable[float]) -> str:
    return "[" + ", ".join(_num(v) for v in values) + "]"


def format_report(report: ClassificationReport, verbose: bool = False) -> str:
    """Human-readable classification summary"""
    lines = [
        f"degree:        {report.degree}",
        f"real roots:    {report.n_real} (complex {report.n_complex})",
        f"interior:      {report.n_int}",
        f"exterior:      +{report.n_ext_plus} / -{report.n_ext_minus}",
        f"method:        {report.method.value}",
        f"scenario:      {report.scenario or '-'}",
    ]
    if report.u is not None:
        lines += [
            f"u:             {_num(report.u)}",
            f"alpha:         {_num(report.alpha)}",
            f"beta:          {_num(report.beta)}",
            f"gamma:         {_num(report.gamma)}",
            f"f(0), f(pi):   {_num(report.f0)}, {_num(report.fpi)}",
        ]
    lines.append(f"roots:         {_nums(report.roots)}")
    if report.degenerate:
        lines.append("flags:         " + ", ".join(f.value for f in report.degenerate))
    for m in report.multiplicities:
        lines.append(f"multiplicity:  {_num(m.root)} x{m.multiplicity}")
    if verbose:
        lines += [
            f"shift:         {_num(report.shift)}",
            f"t roots:       {_nums(report.t_roots)}",
            f"theta zeros:   {_nums(report.theta_zeros)}",
            f"critical:      {report.critical_method or '-'}",
            f"oracle count:  {report.oracle_n_real}",
        ]
        for lo, hi in report.interior_brackets:
            lines.append(f"bracket:       [{_num(lo)}, {_num(hi)}]")
    return "\n".join(lines)


def format_oracle(report: OracleReport) -> str:
    lines = [
        f"degree:        {report.degree}",
        f"real roots:    {report.n_real}",
        f"cauchy bound:  {_num(report.cauchy_bound)}",
        f"roots:         {_nums(report.roots)}",
    ]
    for m in report.multiplicities:
        lines.append(f"multiplicity:  {_num(m.root)} x{m.multiplicity}")
    if not report.square_free:
        lines.append("flags:         MultipleRoot")
    return "\n".join(lines)


def _csv(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=config.CSV_FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def samples_csv(thetas: np.ndarray, values: np.ndarray) -> str:
    """`theta,f` table"""
    return _csv(pd.DataFrame({"theta": thetas, "f": values}, columns=SAMPLE_COLUMNS))


def sweep_csv(rows: List[SweepRow]) -> str:
    """`alpha,beta,gamma,n_int,f0,fpi` table in grid order"""
    frame = pd.DataFrame([row.model_dump() for row in rows], columns=SWEEP_COLUMNS)
    return _csv(frame)


def report_csv(report: ClassificationReport) -> str:
    """Single-row table of the scalar report fields"""
    data = report.model_dump(mode="json")
    scalar = {k: v for k, v in data.items() if not isinstance(v, (list, dict))}
    return _csv(pd.DataFrame([scalar]))
