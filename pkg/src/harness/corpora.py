"""
Corpus specifications

A corpus spec names a construction and its parameters, with inclusive
ranges written a..b:

    incomparability:n=6..9,density=0.5,seeds=0..9
    obs2:n=6,t=1..3
    all:n=5                  every labelled graph on 5 vertices
    file:graphs/             every graph file in a directory (or one file)

Named default corpora live in config/corpora.json.
"""
import json
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional

from config.settings import CORPORA_PATH, DEFAULT_SEED
from src.constructions.generators import all_labeled_graphs
from src.constructions.registry import DETERMINISTIC, build_construction
from src.errors import GraphValidationError
from src.graphs.graph import Graph
from src.graphs.reader import GraphReader
from src.minors.models import MinorModel


class CorpusItem(NamedTuple):
    graph_id: str
    graph: Graph
    provenance: Dict[str, Any]
    model: Optional[MinorModel] = None


def parse_scalar(text: str):
    text = text.strip()
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def parse_range(text: str) -> List[int]:
    """'3' -> [3]; '3..5' -> [3, 4, 5]"""
    if ".." in text:
        low, high = text.split("..", 1)
        try:
            low, high = int(low), int(high)
        except ValueError:
            raise GraphValidationError(f"bad range {text!r}; expected A..B") from None
        if high < low:
            raise GraphValidationError(f"empty range {text!r}")
        return list(range(low, high + 1))
    value = parse_scalar(text)
    if not isinstance(value, int):
        raise GraphValidationError(f"expected an integer or A..B, got {text!r}")
    return [value]


def parse_params(text: Optional[str]) -> Dict[str, Any]:
    """'n=6,t=3,density=0.5' -> {'n': 6, 't': 3, 'density': 0.5}"""
    params: Dict[str, Any] = {}
    if not text:
        return params
    for part in text.split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise GraphValidationError(f"expected key=value, got {part!r}")
        key, value = part.split("=", 1)
        params[key.strip()] = parse_scalar(value)
    return params


def graph_id_for(family: str, params: Dict[str, Any], seed: Optional[int]) -> str:
    parts = [family] + [f"{key}{value}" for key, value in sorted(params.items())]
    if seed is not None:
        parts.append(f"s{seed}")
    return "-".join(parts)


def expand_corpus(spec: str) -> List[CorpusItem]:
    """
    All items of one corpus spec, in deterministic order (ranges expanded
    in key order, seeds innermost)

    Raises:
        GraphValidationError: malformed spec or unknown family
    """
    family, _, rest = spec.partition(":")
    family = family.strip()

    if family == "file":
        path = Path(rest.strip())
        reader = GraphReader.from_directory(path) if path.is_dir() else GraphReader([path])
        graphs = reader.load_all()
        return [CorpusItem(Path(p).stem, g, {"file": str(p)}) for p, g in graphs.items()]

    ranges: Dict[str, List[Any]] = {}
    for part in rest.split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise GraphValidationError(f"expected key=value in corpus spec, got {part!r}")
        key, value = (s.strip() for s in part.split("=", 1))
        ranges[key] = parse_range(value) if ".." in value else [parse_scalar(value)]

    if family == "all":
        sizes = ranges.get("n", [])
        if not sizes or not all(isinstance(n, int) for n in sizes):
            raise GraphValidationError("corpus 'all' needs n=<int> or n=A..B")
        return [CorpusItem(f"all-n{n}-g{index}", g, {"family": "all", "params": {"index": index, "n": n}, "seed": None})
                for n in sizes for index, g in enumerate(all_labeled_graphs(n))]

    seeds = ranges.pop("seeds", ranges.pop("seed", [DEFAULT_SEED]))
    if family in DETERMINISTIC:
        seeds = [None]
    keys = sorted(ranges)
    items = []
    for values in product(*(ranges[key] for key in keys)):
        params = dict(zip(keys, values))
        for seed in seeds:
            built = build_construction(family, params, seed)
            items.append(CorpusItem(graph_id_for(family, params, built.provenance["seed"]),
                                    built.graph, built.provenance, built.model))
    return items


def load_named_corpora(path: Path = CORPORA_PATH) -> Dict[str, List[str]]:
    if not path.exists():
        return {}
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def resolve_corpus(specs: List[str]) -> List[CorpusItem]:
    """Expand specs in order; a bare name refers to a corpus in config/corpora.json"""
    named = load_named_corpora()
    items: List[CorpusItem] = []
    for spec in specs:
        if ":" not in spec:
            if spec not in named:
                raise GraphValidationError(f"unknown corpus {spec!r}; known: {sorted(named)}")
            items.extend(resolve_corpus(named[spec]))
        else:
            items.extend(expand_corpus(spec))
    return items
