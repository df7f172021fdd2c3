"""Class, suite and size-cap configuration for PerfectLab."""

import logging
import os
from dataclasses import dataclass
from pathlib import Path

# Size caps (vertex counts). Every SizeLimitError names one of these.
MAX_VERTICES = 30        # one machine word per VertexSet
CACHE_WIDTH = 24         # SubsetCache stops memoizing above this
DEFINITION_CAP = 16      # chi == omega sweep over all 2^n subsets
HEREDITARY_MEMO_CAP = 16 # subset-memoized perfection; odd-hole search above
CANONICAL_CAP = 10       # permutation canonical form / builtin enumeration
TWO_PERFECT_CAP = 24
STABLE_PERFECT_CAP = 24
PERFECTLY_DIVISIBLE_CAP = 12
NICE_CAP = 14
TWO_DIVISIBLE_CAP = 12
INDEPENDENT_SET_DP_CAP = 16

DEFAULT_DATA_DIR = Path(__file__).parent.parent / "data"


@dataclass(frozen=True)
class ClassConfig:
    name: str       # Display name
    checker: str    # Checker key in perfectlab.classes.CHECKERS
    cap: int        # Largest supported vertex count


@dataclass(frozen=True)
class SuiteConfig:
    name: str           # Display name
    tier: str           # "lemma" (gates CI) or "conjecture" (report only)
    filter: str         # Universe filter: "all" or "triangle-free"
    default_n_max: int
    cap: int            # Largest n_max the invoked checkers support


@dataclass(frozen=True)
class PredicateConfig:
    name: str
    description: str
    property: str       # "perfect" or a key of CLASSES; the graphs searched fail it
    cap: int


CLASSES: dict[str, ClassConfig] = {
    "2-perfect": ClassConfig(name="2-perfect", checker="two_perfect", cap=TWO_PERFECT_CAP),
    "perfectly-divisible": ClassConfig(
        name="perfectly divisible",
        checker="perfectly_divisible",
        cap=PERFECTLY_DIVISIBLE_CAP,
    ),
    "nice": ClassConfig(name="nice", checker="nice", cap=NICE_CAP),
    "stable-perfect": ClassConfig(name="stable-perfect", checker="stable_perfect", cap=STABLE_PERFECT_CAP),
    "2-divisible": ClassConfig(name="2-divisible", checker="two_divisible", cap=TWO_DIVISIBLE_CAP),
}

SUITES: dict[str, SuiteConfig] = {
    "lemma3": SuiteConfig(
        name="Triangle-free: perfect iff bipartite",
        tier="lemma",
        filter="triangle-free",
        default_n_max=8,
        cap=DEFINITION_CAP,
    ),
    "lemma4": SuiteConfig(
        name="Triangle-free: 2-perfect iff 4-colorable",
        tier="lemma",
        filter="triangle-free",
        default_n_max=8,
        cap=TWO_PERFECT_CAP,
    ),
    "lemma6": SuiteConfig(
        name="Triangle-free: 3-colorable = perfectly divisible = stable-perfect = nice",
        tier="lemma",
        filter="triangle-free",
        default_n_max=8,
        cap=PERFECTLY_DIVISIBLE_CAP,
    ),
    "inclusion-chain": SuiteConfig(
        name="perfect => stable-perfect => 2-perfect, perfectly divisible, nice",
        tier="lemma",
        filter="all",
        default_n_max=7,
        cap=PERFECTLY_DIVISIBLE_CAP,
    ),
    "perfect-oracle": SuiteConfig(
        name="Definition route agrees with odd-hole route",
        tier="lemma",
        filter="all",
        default_n_max=7,
        cap=DEFINITION_CAP,
    ),
    "self-duality": SuiteConfig(
        name="G perfect iff complement perfect",
        tier="lemma",
        filter="all",
        default_n_max=7,
        cap=DEFINITION_CAP,
    ),
    "heredity": SuiteConfig(
        name="All five classes closed under induced subgraphs",
        tier="lemma",
        filter="all",
        default_n_max=6,
        cap=PERFECTLY_DIVISIBLE_CAP,
    ),
    "hoang-mcdiarmid": SuiteConfig(
        name="2-divisible iff odd-hole-free",
        tier="conjecture",
        filter="all",
        default_n_max=8,
        cap=TWO_DIVISIBLE_CAP,
    ),
}

PREDICATES: dict[str, PredicateConfig] = {
    "minimal-imperfect": PredicateConfig("minimal imperfect", "not perfect", "perfect", DEFINITION_CAP),
    "minimal-non-2-perfect": PredicateConfig(
        "minimal non-2-perfect", "not 2-perfect", "2-perfect", TWO_PERFECT_CAP
    ),
    "minimal-non-nice": PredicateConfig("minimal non-nice", "not nice", "nice", NICE_CAP),
    "minimal-non-stable-perfect": PredicateConfig(
        "minimal non-stable-perfect", "not stable-perfect", "stable-perfect", STABLE_PERFECT_CAP
    ),
    "minimal-non-perfectly-divisible": PredicateConfig(
        "minimal non-perfectly-divisible", "not perfectly divisible", "perfectly-divisible",
        PERFECTLY_DIVISIBLE_CAP,
    ),
    "minimal-non-2-divisible": PredicateConfig(
        "minimal non-2-divisible", "not 2-divisible", "2-divisible", TWO_DIVISIBLE_CAP
    ),
}


def data_dir() -> Path:
    """Directory for the findings DB, log file and dashboard."""
    override = os.getenv("PERFECTLAB_DATA_DIR", "")
    return Path(override) if override else DEFAULT_DATA_DIR


def log_level() -> int:
    """Stderr log level from PERFECTLAB_LOG_LEVEL (a level name), default INFO."""
    name = os.getenv("PERFECTLAB_LOG_LEVEL", "").strip().upper()
    level = logging.getLevelName(name) if name else logging.INFO
    return level if isinstance(level, int) else logging.INFO


def default_threads() -> int:
    """Worker count from PERFECTLAB_THREADS, else all available cores."""
    raw = os.getenv("PERFECTLAB_THREADS", "")
    if raw.strip().isdigit() and int(raw) > 0:
        return int(raw)
    return os.cpu_count() or 1
