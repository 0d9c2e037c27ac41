"""Observability module for run logging and metrics."""
from bellmono.observability.logger import RunLogger

__all__ = ['RunLogger']
