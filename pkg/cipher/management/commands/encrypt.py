# cipher/management/commands/encrypt.py
from cipher.formats import encode
from cipher.management.base import CipherCommand
from cipher.pipeline import sd_aree_encrypt
from cipher.schemas import OutputFormat


class Command(CipherCommand):
    help = "Encrypt a file with SD-AREE (bit-matrix cycling, then the polynomial Caesar layer)."

    def add_arguments(self, parser):
        self.add_key_arguments(parser)
        parser.add_argument("--in", dest="in_path", required=True, help="Plaintext file ('-' for stdin)")
        parser.add_argument("--out", dest="out_path", help="Ciphertext destination (default: stdout)")
        self.add_wrap_argument(parser)
        self.add_format_argument(parser, "Ciphertext encoding: raw, hex or base64 (default: raw)")

    def handle(self, *args, **options):
        key = self.read_key(options)
        fmt = self.output_format(options)
        plaintext = self.read_bytes(options["in_path"])

        ciphertext = sd_aree_encrypt(plaintext, key, self.wrap_mode(options), self.power_ex_rule(options))
        encoded = encode(ciphertext, fmt)
        if options.get("out_path") is None and fmt is not OutputFormat.RAW:
            self.stdout.write(encoded.decode("ascii"))
        else:
            self.write_bytes(options.get("out_path"), encoded)
