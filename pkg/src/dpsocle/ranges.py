"""Good, weakly fair and mediocre ranges for ``A_(m,n)[h]``."""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInput
from .rational import fmt_seq, is_integral
from .theta import DFMParam

__all__ = ["range_predicates", "classify_range", "range_report", "LABELS"]

LABELS = ("good", "weakly_fair", "mediocre", "outside")


def range_predicates(param: DFMParam) -> dict[str, bool]:
    """All three range conditions, evaluated exactly."""
    h = param.h
    c = param.pair.blocks
    if len(h) != len(c):
        raise InvalidInput("h and pair lengths differ")
    if not all(is_integral(x) for x in h):
        raise InvalidInput(f"range classification needs integral h, got {fmt_seq(h)}")
    ell = len(c)
    good = all(h[i] >= h[i + 1] for i in range(ell - 1))
    weakly_fair = all(
        h[i] - h[i + 1] >= -Fraction(c[i] + c[i + 1], 2) for i in range(ell - 1)
    )
    mediocre = all(
        h[i] - h[j] >= -max(c[i], c[j]) - sum(c[i + 1:j])
        for i in range(ell) for j in range(i + 1, ell)
    )
    return {"good": good, "weakly_fair": weakly_fair, "mediocre": mediocre}


def classify_range(param: DFMParam) -> str:
    preds = range_predicates(param)
    for label in LABELS[:3]:
        if preds[label]:
            return label
    return "outside"


def range_report(param: DFMParam) -> dict:
    preds = range_predicates(param)
    label = classify_range(param)
    report = {"pair": str(param.pair), "h": fmt_seq(param.h), **preds, "label": label}
    if label == "mediocre":
        report["note"] = "in the mediocre range the module is zero or irreducible"
    return report
