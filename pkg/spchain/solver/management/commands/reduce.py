from django.conf import settings
from django.core.management.base import CommandError

from spchain.solver.management.commands._base import ReportCommand
from spchain.solver.pipeline import cmd_reduce
from spchain.solver.reports import RunConfig
from spchain.utils.exceptions import SolverError


class Command(ReportCommand):
    help = "Reduce a staircase point set to ordered line coordinates"

    def add_arguments(self, parser):
        parser.add_argument("--input", dest="input_path", required=True)
        self.add_output_arguments(parser, settings.SPCHAIN_OUTPUT_FORMAT)

    def handle(self, *args, **options):
        try:
            config = RunConfig(
                input_path=options["input_path"],
                output_format=options["output_format"],
            )
        except SolverError as excp:
            raise CommandError(str(excp), returncode=excp.exit_code)

        self.emit(self.run(cmd_reduce, config), options["output"])
