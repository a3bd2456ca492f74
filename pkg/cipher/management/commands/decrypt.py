# cipher/management/commands/decrypt.py
from cipher.formats import decode
from cipher.management.base import CipherCommand
from cipher.pipeline import sd_aree_decrypt


class Command(CipherCommand):
    help = "Decrypt an SD-AREE ciphertext file."

    def add_arguments(self, parser):
        self.add_key_arguments(parser)
        parser.add_argument("--in", dest="in_path", required=True, help="Ciphertext file ('-' for stdin)")
        parser.add_argument("--out", dest="out_path", help="Plaintext destination (default: stdout)")
        self.add_wrap_argument(parser)
        self.add_format_argument(parser, "Encoding of the ciphertext input: raw, hex or base64 (default: raw)")

    def handle(self, *args, **options):
        key = self.read_key(options)
        fmt = self.output_format(options)
        ciphertext = decode(self.read_bytes(options["in_path"]), fmt)

        plaintext = sd_aree_decrypt(ciphertext, key, self.wrap_mode(options), self.power_ex_rule(options))
        self.write_bytes(options.get("out_path"), plaintext)
