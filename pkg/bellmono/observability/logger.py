"""Structured run logging for CLI commands."""
import hashlib
import json
import os
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from bellmono.lp.simplex import LpSolution


class RunLogger:
    """Appends one JSON line per command to a daily log file and keeps counters."""

    def __init__(self, log_dir: str = "logs", debug_mode: bool = False):
        """
        Initialize RunLogger.

        Args:
            log_dir: Directory for log files
            debug_mode: Keep full input text and solver internals
        """
        self.log_dir = log_dir
        self.debug_mode = debug_mode
        os.makedirs(log_dir, exist_ok=True)

        # Metrics counters
        self.metrics = {
            'commands': 0,
            'lp_solves': 0,
            'lp_pivots': 0,
            'strategies_enumerated': 0,
            'domain_errors': 0,
            'usage_errors': 0
        }
        self._lp_trace: List[Dict[str, Any]] = []

    def log_command(
        self,
        command: str,
        inputs: List[str],
        status: str,
        duration_ms: float,
        summary: Optional[Dict[str, Any]] = None,
        documents: Optional[List[str]] = None,
        error: Optional[str] = None
    ):
        """
        Log one CLI invocation.

        Args:
            command: Verb that ran
            inputs: Input references (fixture names or paths)
            status: "ok", "domain_error" or "usage_error"
            duration_ms: Wall time in milliseconds
            summary: Headline values of the report (optional)
            documents: Raw input document texts (hashed unless debug)
            error: Error message (optional)
        """
        documents = documents or []
        if not self.debug_mode:
            documents = [self._hash_string(text) for text in documents]

        log_entry = {
            'timestamp': datetime.now(timezone.utc).isoformat(),
            'command': command,
            'inputs': inputs,
            'documents': documents,
            'status': status,
            'duration_ms': duration_ms,
            'summary': summary or {},
            'error': error
        }

        log_file = os.path.join(self.log_dir, f"bellmono_{datetime.now(timezone.utc).strftime('%Y%m%d')}.jsonl")
        with open(log_file, 'a') as f:
            f.write(json.dumps(log_entry, default=str) + '\n')

        self.metrics['commands'] += 1
        if status == 'domain_error':
            self.metrics['domain_errors'] += 1
        elif status == 'usage_error':
            self.metrics['usage_errors'] += 1

    def record_lp(self, solution: LpSolution):
        """Count one LP solve and its pivots."""
        self.metrics['lp_solves'] += 1
        self.metrics['lp_pivots'] += solution.iterations
        if self.debug_mode:
            self._lp_trace.append({
                'status': solution.status.value,
                'iterations': solution.iterations,
                'basis_size': len(solution.basis)
            })

    def record_enumeration(self, count: int):
        self.metrics['strategies_enumerated'] += count

    def get_debug_info(self) -> Dict[str, Any]:
        """
        Solver internals (only if debug mode enabled).

        Returns:
            Debug information dictionary
        """
        if not self.debug_mode:
            return {}
        return {
            'lp_trace': list(self._lp_trace),
            'metrics': self.get_metrics()
        }

    def _hash_string(self, text: str, max_length: int = 50) -> str:
        """
        Shorten a document for logging.

        Args:
            text: Text to hash
            max_length: Maximum length to show before hashing

        Returns:
            Text, or its prefix followed by an md5 digest
        """
        if len(text) <= max_length:
            return text
        hash_obj = hashlib.md5(text.encode())
        return f"{text[:max_length]}...{hash_obj.hexdigest()[:8]}"

    def get_metrics(self) -> Dict[str, int]:
        """
        Get current metrics.

        Returns:
            Dictionary of metrics
        """
        return self.metrics.copy()
