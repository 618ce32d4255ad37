from enum import IntEnum


class ExitCode(IntEnum):
    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2
