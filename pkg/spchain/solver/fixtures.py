"""
Reference point sets shipped with the solver.

Rows are kept as the literal text that is written out, so every fixture is
byte-stable. The parabola front holds the printed 4-decimal coordinates of a
20-point sample of f2 = 1 - f1^2; it is never regenerated from a seed.
"""
import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

from spchain.utils.exceptions import UnknownFixture

logger = logging.getLogger(__name__)

FIXTURES: Dict[str, Tuple[str, ...]] = {
    "pareto5": (
        "0,5",
        "2,3",
        "2.5,2.5",
        "4,0.5",
        "5,0",
    ),
    "parabola20": (
        "0.0446,0.9980",
        "0.1602,0.9743",
        "0.2061,0.9575",
        "0.2500,0.9375",
        "0.2836,0.9196",
        "0.3278,0.8926",
        "0.3816,0.8544",
        "0.4289,0.8161",
        "0.4568,0.7913",
        "0.5207,0.7289",
        "0.5714,0.6735",
        "0.5781,0.6658",
        "0.6032,0.6362",
        "0.6535,0.5730",
        "0.6750,0.5444",
        "0.8133,0.3385",
        "0.8236,0.3217",
        "0.8602,0.2601",
        "0.9528,0.0921",
        "0.9966,0.0069",
    ),
    "staircase3d": (
        "0,0,0",
        "1,1,2",
        "2,3,3",
        "4,5,6",
    ),
}


def render_fixture(name: str) -> str:
    try:
        rows = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(
            "unknown fixture {!r}, expected one of {}".format(name, ", ".join(sorted(FIXTURES)))
        )
    return "\n".join(rows) + "\n"


def cmd_fixture(name: str, output: Optional[str] = None) -> str:
    """
    Renders fixture ``name`` as CSV and writes it to ``output`` when given
    """
    text = render_fixture(name)
    if output:
        Path(output).write_bytes(text.encode("utf-8"))
        logger.info("fixture %s written to %s", name, output)
    return text
