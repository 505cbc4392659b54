"""
Report records and their JSON / CSV forms

JSON is written with sorted keys so that identical runs give identical bytes.
Tables go through pandas with a fixed column order.
"""
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from config.settings import REPORT_SCHEMA_VERSION, TOOLKIT_VERSION
from src.limits import SearchCaps

PARAM_CSV_COLUMNS = ["graph_id", "n", "m", "param", "value_num", "value_den", "exhaustive", "witness_ref"]

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CAPACITY = 3
EXIT_VERIFICATION = 4


def encode_value(value: Any) -> Any:
    """Fractions become {"num", "den"}; everything else passes through"""
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    return value


def value_parts(value: Any):
    """(numerator, denominator) of an int or Fraction value"""
    if isinstance(value, Fraction):
        return value.numerator, value.denominator
    if isinstance(value, dict) and "num" in value:
        return value["num"], value["den"]
    return value, 1


def dump_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_text(path: Optional[str], text: str):
    """Write to path, or to stdout when path is None or '-'"""
    if path in (None, "-"):
        print(text, end="")
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


def write_csv(rows: Sequence[Dict[str, Any]], columns: List[str], path: str):
    frame = pd.DataFrame(list(rows), columns=columns)
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(target, index=False)


@dataclass
class ParamReport:
    """
    Computed parameter values for one graph

    Args:
        graph_id: Short name used in tables
        descriptor: Where the graph came from ({"file": ...} or a construction provenance)
        n, m: Size of the graph
        t: Depth for the minor parameters
        caps: Search limits in force
        params: Requested parameter names, in request order
    """
    graph_id: str
    descriptor: Dict[str, Any]
    n: int
    m: int
    t: int
    caps: SearchCaps
    params: List[str]
    results: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    errors: List[Dict[str, str]] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        kinds = {error["kind"] for error in self.errors}
        if "validation" in kinds:
            return EXIT_VALIDATION
        if "capacity" in kinds:
            return EXIT_CAPACITY
        return EXIT_OK

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "toolkit_version": TOOLKIT_VERSION,
            "command": "compute",
            "graph_id": self.graph_id,
            "input": self.descriptor,
            "graph": {"n": self.n, "m": self.m},
            "t": self.t,
            "caps": asdict(self.caps),
            "params": list(self.params),
            "results": self.results,
            "errors": self.errors,
        }

    def to_json(self) -> str:
        return dump_json(self.to_dict())

    def csv_rows(self) -> List[Dict[str, Any]]:
        rows = []
        for param in self.params:
            if param not in self.results:
                continue
            entry = self.results[param]
            num, den = value_parts(entry["value"])
            rows.append({
                "graph_id": self.graph_id,
                "n": self.n,
                "m": self.m,
                "param": param,
                "value_num": num,
                "value_den": den,
                "exhaustive": entry["exhaustive"],
                "witness_ref": f"{self.graph_id}#{param}",
            })
        return rows
