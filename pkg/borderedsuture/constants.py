from typing import Final

# Probabilistic rank: evaluate at random points of GF(2^m), keep the best of r tries.
DEFAULT_MODE: Final[str] = "probabilistic"
DEFAULT_SEED: Final[int] = 1
DEFAULT_FIELD_DEGREE: Final[int] = 32
DEFAULT_REPETITIONS: Final[int] = 3

# Above this Mor-matrix dimension the exact (Bareiss) cross-check is skipped.
DEFAULT_EXACT_MAX_DIM: Final[int] = 200

# Upper bound on the number of algebra inputs fed to a single DA action
# during a box tensor product, and on chain lengths during reduction.
DEFAULT_ITERATION_CAP: Final[int] = 64

# Domains in a nice diagram are unions of regions; larger searches are refused.
MAX_DOMAIN_REGIONS: Final[int] = 16

MODES: Final[tuple[str, ...]] = ("probabilistic", "exact")

SEED_ENVVAR: Final[str] = "BSF_SEED"
MODE_ENVVAR: Final[str] = "BSF_MODE"

TYPED_SCHEMA: Final[str] = "bsf.typed/1"
TYPEDA_SCHEMA: Final[str] = "bsf.typeda/1"
HEEGAARD_SCHEMA: Final[str] = "bsf.heegaard/1"
REPORT_SCHEMA: Final[str] = "bsf.report/1"

EXIT_OK: Final[int] = 0
EXIT_FAILURE: Final[int] = 1
EXIT_SCHEMA: Final[int] = 2
EXIT_INTERFACE: Final[int] = 3
EXIT_DISAGREEMENT: Final[int] = 4
EXIT_TERMINATION: Final[int] = 5

# Strands algebras kept alive by strand_algebra, and memoized products and
# differentials per algebra.
ALGEBRA_CACHE_SIZE: Final[int] = 32
PRODUCT_CACHE_SIZE: Final[int] = 1 << 16
