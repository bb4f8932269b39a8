"""Analysis pipeline producing AnalysisReport documents."""

from .analyzer import ChainAnalysis, ChainAnalyzer, exit_code

__all__ = ["ChainAnalysis", "ChainAnalyzer", "exit_code"]
