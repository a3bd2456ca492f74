# cipher/management/base.py
"""Shared plumbing for the cipher management commands.

Exit codes: 0 success, 1 usage/parse, 2 KAT mismatch, 3 I/O.
"""
import logging
import os
import sys
from pathlib import Path
from typing import Optional

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cipher.exceptions import CipherError
from cipher.key_schedule import KeyMaterial
from cipher.schemas import OutputFormat, PowerExRule, WrapMode

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_IO = 3


def usage_error(message: str) -> CommandError:
    return CommandError(message, returncode=EXIT_USAGE)


def io_error(message: str) -> CommandError:
    return CommandError(message, returncode=EXIT_IO)


class CipherCommand(BaseCommand):
    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # argparse would exit 2, which is reserved for KAT mismatches;
        # raising CommandError instead gives the usage exit code
        parser.called_from_command_line = False
        return parser

    def run_from_argv(self, argv):
        try:
            super().run_from_argv(argv)
        except CommandError as exc:
            # only argument-parsing errors get here; BaseCommand handles the rest
            self.stderr.write(str(exc))
            sys.exit(exc.returncode)

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except CipherError as exc:
            raise usage_error(str(exc)) from exc

    # ---------- arguments ----------
    def add_key_arguments(self, parser, required: bool = True):
        group = parser.add_mutually_exclusive_group()
        group.add_argument("--key", help="Pass-key as literal text (taken as raw bytes)")
        group.add_argument("--key-file", help="Read the pass-key bytes from this file")
        parser.add_argument(
            "--power-ex-rule",
            choices=[rule.value for rule in PowerExRule],
            default=PowerExRule.KEY_LENGTH.value,
            help="Rule deriving power_ex from pseudo_code (default: key-length)",
        )
        self._key_required = required

    def add_wrap_argument(self, parser):
        parser.add_argument(
            "--wrap",
            choices=[mode.value for mode in WrapMode],
            help="Caesar wrap mode: byte (mod 256) or paper (conditional mod 255)",
        )

    def add_format_argument(self, parser, help_text: str):
        parser.add_argument("--format", choices=[fmt.value for fmt in OutputFormat], help=help_text)

    # ---------- option resolution ----------
    def read_key(self, options) -> Optional[KeyMaterial]:
        if options.get("key_file"):
            data = self.read_bytes(options["key_file"])
        elif options.get("key") is not None:
            # os.fsencode recovers the exact bytes given on the command line
            data = os.fsencode(options["key"])
        elif getattr(self, "_key_required", True):
            raise usage_error("one of --key or --key-file is required")
        else:
            return None
        return KeyMaterial(data)

    def power_ex_rule(self, options) -> PowerExRule:
        return PowerExRule(options.get("power_ex_rule") or PowerExRule.KEY_LENGTH.value)

    def wrap_mode(self, options) -> WrapMode:
        value = options.get("wrap") or settings.SD_AREE["DEFAULT_WRAP"]
        try:
            return WrapMode(value)
        except ValueError:
            raise usage_error(f"unknown wrap mode {value!r}") from None

    def output_format(self, options) -> OutputFormat:
        value = options.get("format") or settings.SD_AREE["DEFAULT_FORMAT"]
        try:
            return OutputFormat(value)
        except ValueError:
            raise usage_error(f"unknown format {value!r}") from None

    def int_setting(self, name: str) -> int:
        value = settings.SD_AREE[name]
        try:
            return int(value)
        except (TypeError, ValueError):
            raise usage_error(f"SD_AREE {name} must be an integer, got {value!r}") from None

    # ---------- I/O ----------
    def read_bytes(self, path: str) -> bytes:
        if path == "-":
            return sys.stdin.buffer.read()
        try:
            return Path(path).read_bytes()
        except OSError as exc:
            raise io_error(f"cannot read {path}: {exc.strerror or exc}") from exc

    def write_bytes(self, path: Optional[str], data: bytes):
        if path is None or path == "-":
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
            return
        try:
            Path(path).write_bytes(data)
        except OSError as exc:
            raise io_error(f"cannot write {path}: {exc.strerror or exc}") from exc
        logger.debug("wrote %d byte(s) to %s", len(data), path)

    def write_text(self, path: Optional[str], text: str):
        if path is None or path == "-":
            self.stdout.write(text)
            return
        self.write_bytes(path, (text + "\n").encode("utf-8"))
