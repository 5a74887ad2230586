"""Exact Gromov-Witten invariants of BG and [C^r/G] by Givental-Teleman graph sums."""

__version__ = "0.1.0"
