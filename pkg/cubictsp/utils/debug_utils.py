"""
🔧 DEBUGGING UTILITIES

Instrumentation for the expensive parts of the library: factor enumeration,
branch-and-bound, Held-Karp, family builds and verification runs.

Usage:
    @debug_performance
    def min_excess(host):
        ...

    with debug_section("Lemma 1 on A_2"):
        ...
"""

import functools
import time
from contextlib import contextmanager
from typing import Callable, Dict

import psutil
from loguru import logger

from cubictsp.core.config import get_settings

# Argument reprs get cut at this length so graph objects do not flood the log
_MAX_ARG_REPR = 80


def _short_repr(value) -> str:
    text = repr(value)
    if len(text) > _MAX_ARG_REPR:
        return f"{text[:_MAX_ARG_REPR]}...[{len(text)} chars]"
    return text


def get_memory_usage() -> Dict[str, float]:
    """
    📊 Current resident memory of this process in MB.
    """
    try:
        process = psutil.Process()
        return {"process_memory_mb": process.memory_info().rss / 1024 / 1024}
    except psutil.Error as e:
        logger.warning(f"Failed to read memory usage: {e}")
        return {"process_memory_mb": 0.0}


def debug_performance(func: Callable) -> Callable:
    """
    ⏱️ PERFORMANCE MONITORING

    - DEBUG: entry with arguments, fast completion
    - INFO:  completion taking more than 100ms, tagged "PERF:"
    - WARNING: completion above the configured threshold, tagged "SLOW"
    - ERROR: failures (the exception is re-raised untouched)
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        func_name = f"{func.__module__}.{func.__name__}"
        threshold = get_settings().perf_threshold
        start_time = time.perf_counter()
        memory_before = get_memory_usage()["process_memory_mb"]

        logger.debug(f"⚡ ENTERING {func_name}")
        logger.debug(f"   📥 Args: {[_short_repr(a) for a in args[:3]]} Kwargs: {sorted(kwargs)}")

        try:
            result = func(*args, **kwargs)
        except Exception as e:
            elapsed = time.perf_counter() - start_time
            logger.error(f"❌ FAILED {func_name} after {elapsed:.3f}s: {type(e).__name__}: {e}")
            raise

        elapsed = time.perf_counter() - start_time
        memory_diff = get_memory_usage()["process_memory_mb"] - memory_before

        if elapsed > threshold:
            logger.warning(f"🐌 SLOW {func_name} | TIME: {elapsed:.3f}s | MEMORY: {memory_diff:+.2f}MB")
        elif elapsed > 0.1:
            logger.info(f"✅ PERF: {func_name} took {elapsed:.3f}s ({memory_diff:+.2f}MB)")
        else:
            logger.debug(f"✅ COMPLETED {func_name} in {elapsed:.4f}s")

        return result

    return wrapper


@contextmanager
def debug_section(section_name: str):
    """
    📍 Context manager that logs start, end and elapsed time of a code section.
    """
    start_time = time.perf_counter()
    logger.debug(f"🟢 STARTING: {section_name}")
    try:
        yield
    except Exception as e:
        logger.error(f"❌ FAILED: {section_name} ({time.perf_counter() - start_time:.3f}s): {e}")
        raise
    elapsed = time.perf_counter() - start_time
    if elapsed > get_settings().perf_threshold:
        logger.warning(f"🐌 SLOW section {section_name} | TIME: {elapsed:.3f}s")
    else:
        logger.debug(f"✅ COMPLETED: {section_name} ({elapsed:.3f}s)")
