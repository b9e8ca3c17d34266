"""Utilities for rendering command output."""

from .formatting import render, render_lines, render_text

__all__ = ["render", "render_lines", "render_text"]
