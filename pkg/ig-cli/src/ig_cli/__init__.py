# src/ig_cli/__init__.py
"""
Command-line pipeline for IG(B_G): presentation in, band, squares,
maximal-subgroup presentation, simplification, verification and Rees model out.
"""
