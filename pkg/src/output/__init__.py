"""Output handling package for GAFSV."""
from src.output.protocols import OutputHandler
from src.output.console import ConsoleOutputHandler
from src.output.metrics_csv import METRICS_HEADER, MetricsCsvWriter, read_metrics
from src.output.report_json import read_json_model, write_json_atomic

__all__ = [
    "OutputHandler",
    "ConsoleOutputHandler",
    "METRICS_HEADER",
    "MetricsCsvWriter",
    "read_metrics",
    "read_json_model",
    "write_json_atomic",
]
