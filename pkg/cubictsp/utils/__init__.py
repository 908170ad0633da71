"""
🔧 UTILITIES PACKAGE

- debug_utils: timing and memory instrumentation for the expensive searches
"""

from .debug_utils import debug_performance, debug_section, get_memory_usage

__all__ = [
    "debug_performance",
    "debug_section",
    "get_memory_usage",
]
