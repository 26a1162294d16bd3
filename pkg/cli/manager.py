"""
Job Manager
Loads inputs, dispatches subcommands and runs batches of jobs concurrently
while keeping output in input order.

This module demonstrates understanding of:
- Validating every option before any computation starts
- Per-job error isolation with status records
- Thread-backed asyncio batches with bounded concurrency
"""

import asyncio
import sys
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Literal, Optional

from loguru import logger
from pydantic import BaseModel, Field, field_validator

from cli.commands import COMMANDS, MULTI_INPUT, MULTI_INPUT_ACTIONS, JobOutput
from core.codecs import parse_gauss_code, parse_matched_graph
from core.errors import GrkError, UsageError
from core.fixtures import GAUSS_CODE_TEXTS, MATCHED_GRAPH_TEXTS
from rewrite.search import MoveTrace

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

MOVE_ACTIONS = ("apply", "replay", "search", "walk", "neighbors")


class JobSpec(BaseModel):
    """One invocation of a subcommand, options already validated."""

    command: str
    inputs: List[str]
    action: Optional[str] = None
    limit: Optional[int] = Field(default=None, ge=0)
    budget: Optional[int] = Field(default=None, ge=1)
    depth: Optional[int] = Field(default=None, ge=0)
    prime: int = 3
    format: Literal["text", "kv"] = "text"
    seed: int = 0
    orientation: str = "auto"
    method: Literal["brute", "expansion"] = "brute"
    steps: List[str] = []
    walk_steps: int = Field(default=4, ge=0)
    index: Optional[int] = None
    workers: int = Field(default=4, ge=1)

    @field_validator("command")
    @classmethod
    def known_command(cls, value: str) -> str:
        if value not in COMMANDS:
            raise ValueError(f"unknown subcommand '{value}'")
        return value

    @field_validator("action")
    @classmethod
    def known_action(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in MOVE_ACTIONS:
            raise ValueError(f"unknown moves action '{value}'")
        return value

    @field_validator("orientation")
    @classmethod
    def orientation_form(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("orientation must be auto, natural, enumerate or a key list")
        return value.strip()


class JobResult(BaseModel):
    label: str
    status: Literal["ok", "failed"]
    exit_code: int
    output: Optional[str] = None
    error: Optional[str] = None
    seconds: float = 0.0


class GrkManager:
    """
    Dispatcher behind the grk command.

    Inputs are file paths, '-' for stdin, or '@NAME' for a built-in fixture.
    """

    def __init__(self, spec: JobSpec):
        self.spec = spec
        self._stdin: Optional[str] = None
        self.results: List[JobResult] = []
        logger.debug(f"🎯 manager ready: {spec.command} on {len(spec.inputs)} inputs")

    def _read(self, path: str) -> str:
        if path == "-":
            if self._stdin is None:
                self._stdin = sys.stdin.read()
            return self._stdin
        if path.startswith("@"):
            name = path[1:]
            if name in MATCHED_GRAPH_TEXTS:
                return MATCHED_GRAPH_TEXTS[name]
            if name in GAUSS_CODE_TEXTS:
                return GAUSS_CODE_TEXTS[name]
            raise UsageError(f"no fixture named '{name}'")
        try:
            return Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}")

    def load(self, path: str):
        """Gauss code if any line starts with 'component:', matched graph otherwise."""
        text = self._read(path)
        body = [line.split("#", 1)[0].strip() for line in text.splitlines()]
        if any(line.startswith("component:") for line in body):
            return parse_gauss_code(text)
        return parse_matched_graph(text)

    def jobs(self) -> List[List[str]]:
        spec = self.spec
        if not spec.inputs:
            raise UsageError(f"{spec.command} needs at least one input")
        if spec.command in MULTI_INPUT or (spec.command == "moves" and spec.action in MULTI_INPUT_ACTIONS):
            return [list(spec.inputs)]
        return [[path] for path in spec.inputs]

    def _inputs(self, paths: List[str]):
        if self.spec.command == "moves" and self.spec.action == "replay":
            if len(paths) != 2:
                raise UsageError("moves replay needs a diagram and a trace file")
            return [self.load(paths[0]), MoveTrace.from_text(self._read(paths[1]))]
        return [self.load(p) for p in paths]

    def render(self, out: JobOutput, label: str) -> str:
        if self.spec.format == "kv":
            lines = [f"input={label}", f"command={self.spec.command}"]
            lines.extend(f"{key}={value}" for key, value in out.fields)
            return "\n".join(lines)
        return out.text

    def run_job(self, paths: List[str]) -> JobResult:
        label = " ".join(paths)
        started = datetime.now()
        try:
            out = COMMANDS[self.spec.command](self.spec, self._inputs(paths))
        except UsageError as exc:
            logger.error(f"❌ {self.spec.command} {label}: {exc}")
            return JobResult(label=label, status="failed", exit_code=EXIT_USAGE, error=str(exc))
        except GrkError as exc:
            logger.error(f"❌ {self.spec.command} {label}: {type(exc).__name__}: {exc}")
            return JobResult(label=label, status="failed", exit_code=EXIT_DOMAIN, error=str(exc))
        seconds = (datetime.now() - started).total_seconds()
        logger.info(f"✅ {self.spec.command} {label} ({seconds:.2f}s)")
        return JobResult(label=label, status="ok", exit_code=EXIT_OK,
                         output=self.render(out, label), seconds=seconds)

    async def run_batch(self) -> List[JobResult]:
        """Run every job in a worker thread; results come back in input order."""
        if any(p == "-" for p in self.spec.inputs):
            self._read("-")
        semaphore = asyncio.Semaphore(self.spec.workers)

        async def bounded(paths: List[str]) -> JobResult:
            async with semaphore:
                return await asyncio.to_thread(self.run_job, paths)

        self.results = await asyncio.gather(*(bounded(p) for p in self.jobs()))
        return self.results

    def status(self) -> Dict[str, int]:
        return {
            "jobs": len(self.results),
            "ok": sum(1 for r in self.results if r.status == "ok"),
            "failed": sum(1 for r in self.results if r.status == "failed"),
        }

    def exit_code(self) -> int:
        return max((r.exit_code for r in self.results), default=EXIT_OK)
