from .brandt_validate import brandt_validate
from .emit import emit
from .selftest import selftest
from .ss_enum import ss_enum
from .table import table
from .verify import verify
from .zeta import zeta

COMMANDS = [ss_enum, brandt_validate, emit, zeta, verify, table, selftest]

__all__ = ["COMMANDS", "brandt_validate", "emit", "selftest", "ss_enum", "table", "verify", "zeta"]
