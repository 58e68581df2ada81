from django.core.management.base import BaseCommand, CommandError

from spchain.solver.fixtures import FIXTURES, cmd_fixture
from spchain.utils.exceptions import SolverError


class Command(BaseCommand):
    help = "Write a reference point set as CSV ({})".format(", ".join(sorted(FIXTURES)))

    def add_arguments(self, parser):
        parser.add_argument("--name", required=True)
        parser.add_argument("--output")

    def handle(self, *args, **options):
        try:
            text = cmd_fixture(options["name"], options["output"])
        except SolverError as excp:
            raise CommandError(str(excp), returncode=excp.exit_code)

        if options["output"]:
            self.stdout.write(
                self.style.SUCCESS(
                    "Fixture {} written to {}".format(options["name"], options["output"])
                )
            )
        else:
            self.stdout.write(text, ending="")
