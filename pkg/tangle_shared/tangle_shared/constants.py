SUPPORTED_QUBIT_COUNTS = (3, 4)
FOUR_QUBITS = 4
THREE_QUBITS = 3

BITS = (0, 1)

STATE_FILE_VERSION = 1
