from pathlib import Path
from typing import Optional

from django.core.management.base import BaseCommand, CommandError

from spchain.solver.reports import RunReport, render_report
from spchain.utils.exceptions import SolverError


class ReportCommand(BaseCommand):
    """
    Shared plumbing for commands that produce a RunReport
    """

    def add_output_arguments(self, parser, default_format: str):
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=["json", "csv"],
            default=default_format,
            help="report format",
        )
        parser.add_argument("--output", help="write the report here instead of stdout")

    def run(self, step, config) -> RunReport:
        try:
            return step(config)
        except SolverError as excp:
            raise CommandError(str(excp), returncode=excp.exit_code)

    def emit(self, report: RunReport, output: Optional[str] = None):
        text = render_report(report)
        if output:
            Path(output).write_bytes(text.encode("utf-8"))
            self.stdout.write(self.style.SUCCESS("Report written to {}".format(output)))
        else:
            self.stdout.write(text, ending="")
