# cipher/management/commands/derive.py
from cipher.key_schedule import derive_schedule
from cipher.management.base import CipherCommand


class Command(CipherCommand):
    help = "Print the constants SD-AREE derives from a pass-key as JSON."

    def add_arguments(self, parser):
        self.add_key_arguments(parser)

    def handle(self, *args, **options):
        schedule = derive_schedule(self.read_key(options), self.power_ex_rule(options))
        # csum is unbounded; JSON integers carry it exactly
        return schedule.model_dump_json(indent=2)
