"""Constants for blobalg."""

from pathlib import Path


# Algebra kinds and scalar fields accepted by the CLI and RunConfig
ALGEBRA_KINDS = ("tl", "blob")
FIELD_KINDS = ("generic", "cyclo")
OUTPUT_FORMATS = ("text", "json", "csv")

# Parameters used when a subcommand does not receive them explicitly
DEFAULT_N = 3
DEFAULT_L = 5
DEFAULT_M = 2
DEFAULT_WORKERS = 1

# Environment variables read by the CLI
ENV_WORKERS = "BLOBALG_WORKERS"
ENV_GOLDEN_DIR = "BLOBALG_GOLDEN_DIR"
ENV_LOG_LEVEL = "BLOBALG_LOG_LEVEL"

# Versioned golden corpus shipped with the package
GOLDEN_VERSION = "v1"
GOLDEN_DIR = Path(__file__).resolve().parent.parent / "golden" / GOLDEN_VERSION
GOLDEN_FILES = {
    "tl3_l3": "tl3_l3.json",
    "b3_l5_m2": "b3_l5_m2.json",
}

# Generator names
GEN_U = "U"
GEN_E = "e"

# Upper bound on the number of terms tried when inverting 1 + nilpotent
# in a corner algebra; the actual nilpotency order is discovered at runtime.
MAX_NEUMANN_TERMS = 64

# Names of the relations checked by the KLR suite, in report order
KLR_RELATIONS = (
    "y1_vanishing",
    "first_residue",
    "idempotent_orthogonality",
    "idempotent_completeness",
    "y_idempotent_commute",
    "psi_idempotent_swap",
    "y_commute",
    "psi_y_commute",
    "psi_commute",
    "psi_y_next",
    "y_next_psi",
    "psi_quadratic",
    "psi_braid",
    "cyclotomic_vanishing",
    "jm_recovery",
    "hecke_recovery",
)
