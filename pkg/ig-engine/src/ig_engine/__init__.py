# src/ig_engine/__init__.py
