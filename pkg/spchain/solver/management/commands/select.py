from django.conf import settings
from django.core.management.base import CommandError

from spchain.solver.management.commands._base import ReportCommand
from spchain.solver.pipeline import cmd_select
from spchain.solver.reports import RunConfig
from spchain.utils.exceptions import SolverError


class Command(ReportCommand):
    help = "Select the k points of a staircase point set maximizing SP diversity or MPD"

    def add_arguments(self, parser):
        parser.add_argument("--input", dest="input_path", required=True)
        parser.add_argument("--objective", choices=["sp", "mpd"], default="sp")
        parser.add_argument("--k", type=int, required=True, help="subset cardinality")
        parser.add_argument(
            "--q",
            type=float,
            default=settings.SPCHAIN_DEFAULT_Q,
            help="kernel parameter (sp only)",
        )
        self.add_output_arguments(parser, settings.SPCHAIN_OUTPUT_FORMAT)
        parser.add_argument(
            "--validate",
            action="store_true",
            help="compare against the brute-force oracle",
        )
        parser.add_argument(
            "--max-brute-n",
            dest="max_brute_n",
            type=int,
            default=settings.SPCHAIN_MAX_BRUTE_N,
        )

    def handle(self, *args, **options):
        try:
            config = RunConfig(
                input_path=options["input_path"],
                objective=options["objective"],
                k=options["k"],
                q=options["q"],
                output_format=options["output_format"],
                validate=options["validate"],
                max_brute_n=options["max_brute_n"],
            )
        except SolverError as excp:
            raise CommandError(str(excp), returncode=excp.exit_code)

        report = self.run(cmd_select, config)
        self.emit(report, options["output"])

        if report.validation is not None and not report.validation.passed:
            raise CommandError(
                "validation failed: |delta| = {:.3e}".format(report.validation.abs_delta),
                returncode=5,
            )
