# cipher/management/commands/analyze.py
import io
from pathlib import Path

from cipher.analysis import analyze, diffusion_test, leakage_report, write_spectrum_csv
from cipher.management.base import CipherCommand, io_error, usage_error
from cipher.schemas import AnalyzeOutput


class Command(CipherCommand):
    help = (
        "Byte-frequency spectra and leakage statistics for one or more files. "
        "With --plain and --cipher, emits the comparative leakage report."
    )

    def add_arguments(self, parser):
        parser.add_argument("inputs", nargs="*", help="Files to analyze")
        parser.add_argument("--plain", help="Plaintext file for the comparative report")
        parser.add_argument("--cipher", help="Ciphertext file for the comparative report")
        parser.add_argument("--csv-dir", help="Write one <name>.csv spectrum per input into this directory")
        parser.add_argument("--json", dest="json_path", help="Write the JSON report here (default: stdout)")
        parser.add_argument(
            "--diffusion",
            action="store_true",
            help="Also run the single-bit diffusion test on the plaintext (needs a key)",
        )
        parser.add_argument("--trials", type=int, help="Diffusion trials (default: SD_AREE DIFFUSION_TRIALS)")
        parser.add_argument("--seed", type=int, help="Diffusion seed (default: SD_AREE DIFFUSION_SEED)")
        self.add_key_arguments(parser, required=False)
        self.add_wrap_argument(parser)

    def handle(self, *args, **options):
        named = {Path(path).name: path for path in options["inputs"]}
        if len(named) != len(options["inputs"]):
            raise usage_error("input file names must be distinct")
        for label in ("plain", "cipher"):
            if options.get(label):
                if label in named:
                    raise usage_error(f"input file name '{label}' clashes with --{label}")
                named[label] = options[label]
        if not named:
            raise usage_error("nothing to analyze: give input files or --plain/--cipher")

        data = {name: self.read_bytes(path) for name, path in named.items()}
        output = AnalyzeOutput()
        if options.get("plain") and options.get("cipher"):
            output.leakage = leakage_report(data["plain"], data["cipher"])
            reports = {"plain": output.leakage.plain, "cipher": output.leakage.cipher}
            output.reports = {name: analyze(blob) for name, blob in data.items() if name not in reports}
            reports.update(output.reports)
        else:
            output.reports = {name: analyze(blob) for name, blob in data.items()}
            reports = output.reports

        if options["diffusion"]:
            output.diffusion = self._diffusion(options, data)

        if options.get("csv_dir"):
            self._write_spectra(Path(options["csv_dir"]), reports)
        self.write_text(options.get("json_path"), output.model_dump_json(indent=2, exclude_none=True))

    def _diffusion(self, options, data):
        key = self.read_key(options)
        if key is None:
            raise usage_error("--diffusion needs --key or --key-file")
        if "plain" in data:
            message = data["plain"]
        elif len(data) == 1:
            message = next(iter(data.values()))
        else:
            raise usage_error("--diffusion needs --plain or exactly one input file")
        trials = options["trials"] if options.get("trials") is not None else self.int_setting("DIFFUSION_TRIALS")
        seed = options["seed"] if options.get("seed") is not None else self.int_setting("DIFFUSION_SEED")
        return diffusion_test(message, key, trials, seed, self.wrap_mode(options), self.power_ex_rule(options))

    def _write_spectra(self, directory: Path, reports):
        try:
            directory.mkdir(parents=True, exist_ok=True)
            for name, report in reports.items():
                buf = io.StringIO()
                write_spectrum_csv(report.histogram, buf)
                (directory / f"{name}.csv").write_text(buf.getvalue(), encoding="utf-8")
        except OSError as exc:
            raise io_error(f"cannot write spectra to {directory}: {exc.strerror or exc}") from exc
