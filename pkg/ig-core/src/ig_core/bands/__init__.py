# src/ig_core/bands/__init__.py

from .band import Band, load_band_json, multiply
from .checks import BandCheck, is_band, is_band_pairs, is_band_table
from .construction import build_bg, expected_bg_size, upper_pair
from .green import GreenStructure, green_classes
from .grid import DClassGrid, dclass_grid, kernel_grid
from .index_sets import IndexBase, IndexSets, IndexSymbol
from .labels import ElementLabel, LabelKind, parse_element_word
from .transformations import TransformationPair, compose_pairs

__all__ = [
    "Band",
    "BandCheck",
    "DClassGrid",
    "ElementLabel",
    "GreenStructure",
    "IndexBase",
    "IndexSets",
    "IndexSymbol",
    "LabelKind",
    "TransformationPair",
    "build_bg",
    "compose_pairs",
    "dclass_grid",
    "expected_bg_size",
    "green_classes",
    "is_band",
    "is_band_pairs",
    "is_band_table",
    "kernel_grid",
    "load_band_json",
    "multiply",
    "parse_element_word",
    "upper_pair",
]
