import os
import sys
from pathlib import Path

from src.graphs.formats import DIMACS, EDGE_LIST, parse_graph


class GraphReader:
    """ graph reader - loads graphs from edge-list and DIMACS files"""

    FORMAT_BY_EXTENSION = {
        ".txt": EDGE_LIST,
        ".el": EDGE_LIST,
        ".edges": EDGE_LIST,
        ".dimacs": DIMACS,
        ".col": DIMACS,
    }

    def __init__(self, file_paths=None, fmt=None, verbose=True):
        """
        Args:
            file_paths: list of file paths to read
            fmt: force a format instead of detecting it from the extension
            verbose: print a status line per file (to stderr)
        """
        self.file_paths = [str(p) for p in (file_paths or [])]
        self.fmt = fmt
        self.verbose = verbose
        self.graphs = {}  # file_path -> Graph

    @classmethod
    def from_directory(cls, directory, fmt=None, verbose=True):
        """Reader over every supported file in a directory, sorted by name"""
        paths = sorted(
            p for p in Path(directory).iterdir()
            if p.is_file() and (fmt or p.suffix.lower() in cls.FORMAT_BY_EXTENSION)
        )
        return cls(paths, fmt=fmt, verbose=verbose)

    def detect_format(self, file_path):
        if self.fmt:
            return self.fmt
        ext = os.path.splitext(file_path)[1].lower()
        if ext not in self.FORMAT_BY_EXTENSION:
            raise ValueError(f"Unsupported file type: {ext}")
        return self.FORMAT_BY_EXTENSION[ext]

    def read_file(self, file_path):
        """
        read a single graph file

        Args:
            file_path: Path to the file

        Returns:
            the parsed Graph
        """
        if not os.path.exists(file_path):
            raise FileNotFoundError(f"File not found: {file_path}")
        return parse_graph(self._read_text(file_path), self.detect_format(file_path))

    def _read_text(self, file_path):
        """Read text file with encoding fallback"""
        for encoding in ("utf-8", "latin-1"):
            try:
                with open(file_path, "r", encoding=encoding) as f:
                    return f.read()
            except UnicodeDecodeError:
                continue
        with open(file_path, "r", encoding="utf-8", errors="replace") as f:
            return f.read()

    def _status(self, message):
        if self.verbose:
            print(message, file=sys.stderr)

    def load_all(self):
        """
        load all files; a file that fails is reported and skipped
        """
        self._status(f"Loading {len(self.file_paths)} graph file(s)...")

        for file_path in self.file_paths:
            try:
                graph = self.read_file(file_path)
                self.graphs[file_path] = graph
                self._status(f"✓ {file_path} (n={graph.n}, m={graph.m})")
            except (OSError, ValueError) as e:
                self._status(f"✗ {file_path}\n  Error: {e}")

        self._status(f"✓ Loaded {len(self.graphs)}/{len(self.file_paths)} graphs successfully")
        return self.graphs

    def get_graph(self, file_path):
        return self.graphs.get(str(file_path))
