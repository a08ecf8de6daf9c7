"""Static figure rendering for colldeph CSV outputs."""

from .figspec import Curve, FigureInputError, FigureSpec, Panel, load_csv, render

__all__ = ["Curve", "FigureInputError", "FigureSpec", "Panel", "load_csv", "render"]
