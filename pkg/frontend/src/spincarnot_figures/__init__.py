"""Render work/efficiency/friction figures from spincarnot sweep CSVs."""

from .render import FigureSpec, SchemaError, load_sweep, render

__version__ = "0.1.0"
