VERSION = "v1"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

THREADS_ENV = "SAITO_FORGE_THREADS"
DEFAULT_THREADS = 1

KIND_GROUP = "group"
KIND_CONNECTION = "connection"
KIND_SAITO = "saito"
KIND_ALMOST_SAITO = "almost_saito"
KIND_REPORT = "report"
