# src/ig_core/__init__.py
