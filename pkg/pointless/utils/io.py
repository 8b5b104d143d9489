import json
import os
from dataclasses import dataclass
from typing import Iterable, List, Optional

import toml

from ..errors import ConfigurationError
from ..forms import ConicQuartic


class FileIOHelper:
    @staticmethod
    def dump_json(obj, file_name, encoding="utf-8"):
        with open(file_name, "w", encoding=encoding) as fw:
            json.dump(obj, fw, default=FileIOHelper.handle_non_serializable)

    @staticmethod
    def handle_non_serializable(obj):
        return "non-serializable contents"  # mark the non-serializable part

    @staticmethod
    def load_json(file_name, encoding="utf-8"):
        with open(file_name, "r", encoding=encoding) as fr:
            return json.load(fr)


@dataclass
class CurveFile:
    """
    Contents of a curve file.

    Attributes:
        conic: The [conic-quartic] section, if present.
        D: Discriminant parameter of the [model] section, if present.
        h: The 18 integers (c0, c1 pairs for h_0..h_8) of the [model] section.
        translates: The translates of the [model] section, or None to choose them.
    """

    conic: Optional[ConicQuartic] = None
    D: Optional[int] = None
    h: Optional[List[int]] = None
    translates: Optional[List[int]] = None

    @property
    def has_model(self) -> bool:
        return self.D is not None


def _int_list(section: dict, key: str, length: int, where: str) -> List[int]:
    values = section.get(key)
    if not isinstance(values, list) or len(values) != length or not all(isinstance(v, int) for v in values):
        raise ConfigurationError(f"[{where}] {key} must be a list of {length} integers")
    return values


def load_curve_file(path: str) -> CurveFile:
    """
    Read a TOML curve file with a [conic-quartic] section (g: 6 integers,
    f: 15 integers, monomials in lex order X >= Y >= Z), a [model] section
    (D, h: 18 integers, optional translates: 3 integers), or both.

    Raises:
        ConfigurationError: If the file is missing, unparsable or malformed.
    """
    if not os.path.isfile(path):
        raise ConfigurationError(f"curve file {path} does not exist")
    try:
        data = toml.load(path)
    except toml.TomlDecodeError as exc:
        raise ConfigurationError(f"cannot parse {path}: {exc}") from exc

    curve = CurveFile()
    if "conic-quartic" in data:
        section = data["conic-quartic"]
        g = _int_list(section, "g", 6, "conic-quartic")
        f = _int_list(section, "f", 15, "conic-quartic")
        try:
            curve.conic = ConicQuartic.from_coefficients(g, f)
        except ValueError as exc:
            raise ConfigurationError(str(exc)) from exc
    if "model" in data:
        section = data["model"]
        D = section.get("D")
        if not isinstance(D, int):
            raise ConfigurationError("[model] D must be an integer")
        curve.D = D
        curve.h = _int_list(section, "h", 18, "model")
        if "translates" in section:
            curve.translates = _int_list(section, "translates", 3, "model")
    if curve.conic is None and not curve.has_model:
        raise ConfigurationError(f"{path} has neither a [conic-quartic] nor a [model] section")
    return curve


def write_jsonl(lines: Iterable[str], path: str):
    """Write pre-serialized records, one per line."""
    with open(path, "w", encoding="utf-8") as f:
        for line in lines:
            f.write(line)
            f.write("\n")
