"""PerfectLab - exact recognition of perfect-graph generalizations on small graphs."""

__version__ = "0.1.0"
