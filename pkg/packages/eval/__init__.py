"""Verification suite and benchmark harness."""

from .benchmark import BenchReport, BenchRow, baseline_kmeanspp, format_table, run_bench
from .tiny_suite import TinyInstance, make_tiny_instance, tiny_suite
from .verification import InstanceReport, run_verification, verify_instance

__all__ = [
    "run_bench",
    "baseline_kmeanspp",
    "format_table",
    "BenchReport",
    "BenchRow",
    "tiny_suite",
    "make_tiny_instance",
    "TinyInstance",
    "verify_instance",
    "run_verification",
    "InstanceReport",
]
