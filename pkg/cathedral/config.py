"""
Configuration module for the cathedral package.
Contains solver bounds, verification defaults and logging settings.
"""

from decouple import config
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Join solver configuration
SOLVER_CONFIG = {
    # Brute-force oracle refuses grafts with more edges than this
    "bruteforce_max_edges": config("GRAFT_BRUTEFORCE_MAX_EDGES", default=20, cast=int),

    # Exhaustive matching up to this many terminals per component, branch-and-bound above
    "exhaustive_matching_max": config("GRAFT_EXHAUSTIVE_MATCHING_MAX", default=12, cast=int),

    # auto | exhaustive | branch-and-bound | networkx
    "matching_backend": config("GRAFT_MATCHING_BACKEND", default="auto"),

    # Simple-path enumeration is only attempted on grafts this small
    "path_oracle_max_n": config("GRAFT_PATH_ORACLE_MAX_N", default=9, cast=int),

    # Circuit enumeration (negative/zero circuit lemmas)
    "circuit_oracle_max_n": config("GRAFT_CIRCUIT_ORACLE_MAX_N", default=8, cast=int),

    "nu_cache_size": config("GRAFT_NU_CACHE_SIZE", default=200000, cast=int),
}

# Verification harness configuration
VERIFY_CONFIG = {
    "seed": config("GRAFT_SEED", default=42, cast=int),
    "max_n": config("GRAFT_MAX_N", default=8, cast=int),
    "trials": config("GRAFT_TRIALS", default=500, cast=int),
    "exhaustive_max_n": config("GRAFT_EXHAUSTIVE_MAX_N", default=6, cast=int),
    "max_random_edges": config("GRAFT_MAX_RANDOM_EDGES", default=20, cast=int),
    "max_skeleton_n": 8,
    "max_tooth_n": 6,
    "generator_attempts": 50,
    "progress": config("GRAFT_PROGRESS", default=False, cast=bool),
}

# Output configuration
OUTPUT_CONFIG = {
    "json_indent": 2,
    "dot_colors": {
        "spine": "lightblue",
        "tooth": "lightyellow",
        "fringe": "lightgray",
    },
}

# Logging configuration
LOGGING_CONFIG = {
    "level": config("LOG_LEVEL", default="INFO"),
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    "file": config("LOG_FILE", default=None),
}
