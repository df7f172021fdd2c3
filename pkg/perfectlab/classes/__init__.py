"""Checker registry and the all-classes classifier."""

from ..certificates import CliqueWitness, Exhausted, PropertyReport
from ..config import CLASSES
from ..errors import InconsistencyError
from ..graph import Graph, find_odd_cycle, find_triangle, is_bipartite
from ..invariants import SubsetCache
from ..perfection import is_perfect
from .nice import NiceChecker
from .perfectly_divisible import PerfectlyDivisibleChecker
from .stable_perfect import StablePerfectChecker
from .two_divisible import TwoDivisibleChecker
from .two_perfect import TwoPerfectChecker

CHECKERS: dict[str, type] = {
    "two_perfect": TwoPerfectChecker,
    "perfectly_divisible": PerfectlyDivisibleChecker,
    "nice": NiceChecker,
    "stable_perfect": StablePerfectChecker,
    "two_divisible": TwoDivisibleChecker,
}

# every class the perfect graphs (resp. stable-perfect graphs) belong to
_BELOW_PERFECT = ("stable-perfect",)
_BELOW_STABLE_PERFECT = ("2-perfect", "perfectly-divisible", "nice")


def get_checker(class_key: str):
    """Checker instance for a CLI class key such as ``2-perfect``."""
    config = CLASSES.get(class_key)
    if not config:
        raise ValueError(f"Unknown class: {class_key}")
    return CHECKERS[config.checker]()


def check_class(g: Graph, class_key: str, cache: SubsetCache | None = None, direct: bool = False) -> PropertyReport:
    return get_checker(class_key).check(g, cache=cache, direct=direct)


def structure_flags(g: Graph) -> list[PropertyReport]:
    """triangle-free and bipartite verdicts with their witnesses."""
    triangle = find_triangle(g)
    flags = [
        PropertyReport("triangle-free", True, Exhausted("no triangle"))
        if triangle is None
        else PropertyReport("triangle-free", False, CliqueWitness(triangle))
    ]
    part = is_bipartite(g)
    flags.append(
        PropertyReport("bipartite", True, part)
        if part is not None
        else PropertyReport("bipartite", False, find_odd_cycle(g))
    )
    return flags


def classify_all(
    g: Graph, classes: list[str] | None = None, verify: bool = False, strict: bool = True
) -> list[PropertyReport]:
    """Perfection, structure flags and the requested class verdicts (all five by default).

    With `strict`, raises InconsistencyError when the verdicts break the
    inclusion chain perfect => stable-perfect => 2-perfect, perfectly
    divisible, nice.
    """
    keys = list(CLASSES) if classes is None else classes
    cache = SubsetCache(g)
    reports = [is_perfect(g, verify=verify), *structure_flags(g)]
    reports += [check_class(g, key, cache) for key in keys]
    if strict:
        check_inclusions(reports)
    return reports


def check_inclusions(reports: list[PropertyReport]) -> None:
    verdicts = {r.name: r.holds for r in reports}
    chain = [("perfect", _BELOW_PERFECT), ("stable-perfect", _BELOW_STABLE_PERFECT)]
    for upper, lowers in chain:
        if not verdicts.get(upper):
            continue
        for lower in lowers:
            if verdicts.get(lower) is False:
                raise InconsistencyError(f"inclusion violated: {upper} holds but {lower} does not")
    if verdicts.get("perfect"):
        for lower in _BELOW_STABLE_PERFECT:
            if verdicts.get(lower) is False:
                raise InconsistencyError(f"inclusion violated: perfect holds but {lower} does not")
