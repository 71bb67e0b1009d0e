"""Hereditary graph classes, their edge/vertex edit operators, and minimal
forbidden induced subgraphs; plus the analogue for binary and ternary matroids."""

__version__ = "0.1.0"
