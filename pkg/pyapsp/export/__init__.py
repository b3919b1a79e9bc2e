"""
Export module - Pipelines de experimento e exportadores.
"""

from pyapsp.export.exporters import CsvExporter, ExcelExporter, MarkdownExporter, emit_csv, emit_markdown
from pyapsp.export.experiment_pipeline import ExperimentPipeline

__all__ = [
    "CsvExporter",
    "MarkdownExporter",
    "ExcelExporter",
    "emit_csv",
    "emit_markdown",
    "ExperimentPipeline"
]
