# cipher/management/commands/kat.py
from django.conf import settings
from django.core.management.base import CommandError

from cipher.exceptions import KatParseError
from cipher.kat import failing_counts, run_kat
from cipher.management.base import EXIT_MISMATCH, CipherCommand, usage_error


class Command(CipherCommand):
    help = "Re-verify a known-answer test file (default: the shipped SD-AREE vectors)."

    def add_arguments(self, parser):
        parser.add_argument("file", nargs="?", help="KAT file (default: SD_AREE KAT_VECTORS)")

    def handle(self, *args, **options):
        path = options.get("file") or str(settings.SD_AREE["KAT_VECTORS"])
        try:
            text = self.read_bytes(path).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise usage_error(f"{path} is not UTF-8 text: {exc}") from exc
        try:
            outcomes = run_kat(text)
        except KatParseError as exc:
            raise usage_error(f"{path}: {exc}") from exc

        for outcome in outcomes:
            if not outcome.passed:
                self.stderr.write(f"COUNT {outcome.case.count} FAILED (line {outcome.case.line}): {outcome.detail}")

        failed = failing_counts(outcomes)
        if failed:
            raise CommandError(
                f"{len(failed)} of {len(outcomes)} case(s) failed: COUNT {', '.join(map(str, failed))}",
                returncode=EXIT_MISMATCH,
            )
        return f"{len(outcomes)} case(s) passed"
