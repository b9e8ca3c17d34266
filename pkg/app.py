"""
Command line front end.

    python app.py normal-form --strands 3 "1 2 1 1"
    python app.py compare --strands 3 "1" "2"
    python app.py essential --graph triangle.cox --word "1 2 3"
    python app.py batch requests.txt --jobs 4
"""

import argparse
import logging
import shlex
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from config.logging_config import configure_logging
from config.settings import ScalarMode, get_settings, settings
from models.errors import UsageError
from routers.commands import dispatch
from routers.schemas import CommandResult, RunConfig
from utils.formatting import render

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--format", dest="output_format", choices=["lines", "text"], default=None)
    parser.add_argument("--log-level", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidforge", description="Braid groups, Garside normal forms and Coxeter roots")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, nwords, text in (
        ("normal-form", 1, "Garside normal form of a braid word"),
        ("compare", 2, "Dehornoy comparison of two braid words"),
        ("classify", 1, "Periodic / reducible classification of a braid"),
    ):
        p = sub.add_parser(name, help=text)
        _common(p)
        p.add_argument("--strands", type=int, required=True)
        p.add_argument("words", nargs=nwords)
        if name == "classify":
            p.add_argument("--radius", type=int, default=None)

    for name, text in (
        ("roots", "Positive roots up to a depth"),
        ("inversions", "Inversion set and length of a group word"),
        ("essential", "Essential-element certificate"),
        ("surface", "Monodromy surface of a small-type graph"),
    ):
        p = sub.add_parser(name, help=text)
        _common(p)
        p.add_argument("--graph", required=True)
        p.add_argument("--mode", choices=[m.value for m in ScalarMode], default=None)
        if name == "inversions":
            p.add_argument("words", nargs=1)
        if name == "essential":
            p.add_argument("--word", default=None, help="Group word, e.g. \"1 2 3\"")
            p.add_argument("words", nargs="*", help="Positional form of --word")
        if name in ("roots", "essential"):
            p.add_argument("--depth", type=int, default=None)
        if name == "roots":
            p.add_argument("--full", action="store_true")
        if name == "essential":
            p.add_argument("--mmax", dest="m_max", type=int, default=None)
            p.add_argument("--closure-depth", type=int, default=None)
        if name == "surface":
            p.add_argument("--order", default=None)
            p.add_argument("--rep", default=None)

    batch = sub.add_parser("batch", help="Run one command per line of a file")
    _common(batch)
    batch.add_argument("file")
    batch.add_argument("--jobs", type=int, default=None)
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if k not in ("log_level", "jobs", "file", "word")}
    if getattr(args, "word", None) is not None:
        fields["words"] = [*fields.get("words", []), args.word]
    fields["output_format"] = fields.get("output_format") or settings.output_format
    fields = {k: v for k, v in fields.items() if v is not None}
    try:
        return RunConfig(**fields)
    except ValidationError as e:
        raise UsageError("; ".join(err["msg"] for err in e.errors())) from None


def run_line(line: str, output_format: Optional[str] = None) -> CommandResult:
    """Parse and run one command line; usage problems become exit code 2."""
    try:
        args = build_parser().parse_args(shlex.split(line))
        if args.command == "batch":
            raise UsageError("batch files cannot nest batch commands")
        if output_format and args.output_format is None:
            args.output_format = output_format
        return dispatch(to_config(args))
    except UsageError as e:
        return CommandResult(exit_code=2, records=[("error", str(e))])


def run_batch(path: str, jobs: Optional[int], output_format: str) -> int:
    """Run a batch file; blocks are printed in file order."""
    file = Path(path)
    if not file.is_file():
        raise UsageError(f"Batch file not found: {path}")
    requests = [
        (number, line.strip())
        for number, line in enumerate(file.read_text(encoding="utf-8").splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if jobs is None:
        jobs = settings.jobs
    if jobs < 1:
        raise UsageError(f"--jobs must be at least 1, got {jobs}")
    logger.info(f"Running {len(requests)} requests with {jobs} jobs")
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(lambda item: run_line(item[1], output_format), requests))
    worst = 0
    for (number, _), result in zip(requests, results):
        sys.stdout.write(render([("request", str(number))] + result.records, output_format))
        worst = max(worst, result.exit_code)
    return worst


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        config = get_settings()
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 2

    configure_logging(args.log_level or config.log_level)
    output_format = args.output_format or config.output_format

    try:
        if args.command == "batch":
            return run_batch(args.file, args.jobs, output_format)
        result = dispatch(to_config(args))
    except UsageError as e:
        sys.stdout.write(render([("error", str(e))], output_format))
        return 2

    sys.stdout.write(render(result.records, output_format))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
