"""Questionnaire scoring: item stats, factor means, reliability, quality band.

Statistics follow one pinned convention: population variance and standard
deviation (divisor n) throughout, rounding only at presentation time.

Factor taxonomy (codes as used in the item catalog, dual-coded items carry
two codes joined by ``/``):

- player experience: FA, F, Ch, S, R
- usability: L, O, As, Acc
- motivation and real-world impact: C, A, SE, RW, I, SP, RCL

Cronbach's alpha: α = (k/(k−1)) · (1 − Σ item variance / total variance),
k items, totals summed per respondent.  The quality score scales the alpha
over the union of player-experience and usability items by a multiplier
(default 100, so an alpha of 0.693 maps to 69.3); bands are "excellent"
above 65, "better" from 42.5 to 65 inclusive, "below" under 42.5.

A group mean over several factors (e.g. the motivation/impact factors) is
the unweighted mean of the distinct member items' means; an item coded
into two factors of the group still counts once.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

FACTOR_CODES = (
    "I", "SP", "C", "A", "SE", "RW", "RCL",  # motivation / real-world impact
    "FA", "S", "R", "F", "Ch",  # player experience
    "L", "O", "As", "Acc",  # usability
)
PLAYER_EXPERIENCE_FACTORS = frozenset({"FA", "F", "Ch", "S", "R"})
USABILITY_FACTORS = frozenset({"L", "O", "As", "Acc"})
MOTIVATION_IMPACT_FACTORS = frozenset({"C", "A", "SE", "RW", "I", "SP", "RCL"})

LIKERT_MIN = 1
LIKERT_MAX = 5


class SurveyError(ValueError):
    pass


class UnknownItem(SurveyError):
    pass


class EmptyFactor(SurveyError):
    pass


class SingleItem(SurveyError):
    pass


class ZeroTotalVariance(SurveyError):
    pass


@dataclass(frozen=True)
class SurveyItem:
    id: str
    factors: tuple[str, ...]
    text: str

    def __post_init__(self) -> None:
        if not self.factors:
            raise SurveyError(f"item {self.id!r} has no factor code")
        for code in self.factors:
            if code not in FACTOR_CODES:
                raise SurveyError(f"item {self.id!r} has unknown factor {code!r}")


@dataclass(frozen=True, eq=False)
class ResponseMatrix:
    respondents: tuple[str, ...]
    items: tuple[str, ...]
    values: np.ndarray  # (len(respondents), len(items)), small ints

    def __post_init__(self) -> None:
        n, k = self.values.shape
        if n != len(self.respondents) or k != len(self.items):
            raise SurveyError("matrix shape does not match id lists")
        if len(set(self.items)) != k:
            raise SurveyError("duplicate item ids")
        if self.values.size and (
            self.values.min() < LIKERT_MIN or self.values.max() > LIKERT_MAX
        ):
            raise SurveyError(
                f"responses must be in {LIKERT_MIN}..{LIKERT_MAX}"
            )
        self.values.setflags(write=False)

    def column(self, item_id: str) -> np.ndarray:
        try:
            idx = self.items.index(item_id)
        except ValueError:
            raise UnknownItem(f"no item {item_id!r} in matrix") from None
        return self.values[:, idx]

    def submatrix(self, item_ids: Sequence[str]) -> "ResponseMatrix":
        cols = [self.items.index(i) if i in self.items else -1 for i in item_ids]
        for i, c in zip(item_ids, cols):
            if c < 0:
                raise UnknownItem(f"no item {i!r} in matrix")
        return ResponseMatrix(
            self.respondents, tuple(item_ids), self.values[:, cols].copy()
        )


def item_stats(m: ResponseMatrix, item_id: str) -> tuple[float, float]:
    """(mean, population sd) for one item column."""
    col = m.column(item_id).astype(np.float64)
    return float(col.mean()), float(col.std(ddof=0))


def factor_means(
    m: ResponseMatrix, catalog: Sequence[SurveyItem]
) -> dict[str, float]:
    """Per-factor mean of member items' means; dual-coded items count in both.

    Every factor that appears in the catalog must have at least one item in
    the matrix; a factor whose items are all absent raises EmptyFactor.
    """
    sums: dict[str, list[float]] = {}
    for item in catalog:
        if item.id not in m.items:
            continue
        mean, _ = item_stats(m, item.id)
        for code in item.factors:
            sums.setdefault(code, []).append(mean)
    out = {}
    for item in catalog:
        for code in item.factors:
            if code not in sums:
                raise EmptyFactor(f"factor {code!r} has no items in the matrix")
    for code, means in sums.items():
        out[code] = sum(means) / len(means)
    return out


def select_items(catalog: Sequence[SurveyItem], factors: Iterable[str]) -> list[str]:
    """Ids of catalog items coded into any of the factors, catalog order."""
    wanted = frozenset(factors)
    return [item.id for item in catalog if wanted.intersection(item.factors)]


def group_mean_from_item_means(item_means: Sequence[float]) -> float:
    if not item_means:
        raise EmptyFactor("group has no items")
    return sum(item_means) / len(item_means)


def group_mean(
    m: ResponseMatrix, catalog: Sequence[SurveyItem], factors: Iterable[str]
) -> float:
    """Mean over the distinct items of a factor group (each item once)."""
    ids = select_items(catalog, factors)
    present = [i for i in ids if i in m.items]
    if not present:
        raise EmptyFactor("no items of the group are in the matrix")
    return group_mean_from_item_means([item_stats(m, i)[0] for i in present])


def cronbach_alpha(m: ResponseMatrix) -> float:
    values = m.values.astype(np.float64)
    k = values.shape[1]
    if k < 2:
        raise SingleItem("alpha needs at least 2 items")
    if values.shape[0] < 2:
        raise SurveyError("alpha needs at least 2 respondents")
    item_vars = values.var(axis=0, ddof=0)
    total_var = values.sum(axis=1).var(ddof=0)
    if total_var == 0.0:
        raise ZeroTotalVariance("total-score variance is zero")
    return float(k / (k - 1) * (1.0 - item_vars.sum() / total_var))


def classify_band(score: float) -> str:
    """"excellent" above 65, "better" in [42.5, 65], "below" under 42.5."""
    if score > 65:
        return "excellent"
    if score >= 42.5:
        return "better"
    return "below"


def quality_score(
    m: ResponseMatrix,
    px_items: Sequence[str],
    usability_items: Sequence[str],
    multiplier: float = 100.0,
) -> tuple[float, str]:
    """Alpha over the union of the two item sets, scaled; plus its band."""
    if not px_items or not usability_items:
        raise SurveyError("both item sets must be non-empty")
    if multiplier <= 0:
        raise SurveyError("multiplier must be positive")
    union: list[str] = []
    for item_id in list(px_items) + list(usability_items):
        if item_id not in union:
            union.append(item_id)
    score = cronbach_alpha(m.submatrix(union)) * multiplier
    return score, classify_band(score)


# -- file formats -----------------------------------------------------------


def parse_catalog(text: str) -> tuple[SurveyItem, ...]:
    """CSV with header ``id,factors,text``; factors joined by ``/``."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise SurveyError("empty catalog") from None
    if header != ["id", "factors", "text"]:
        raise SurveyError(f"catalog header must be id,factors,text, got {header}")
    items = []
    seen = set()
    for row in reader:
        if not row:
            continue
        if len(row) != 3:
            raise SurveyError(f"bad catalog row: {row}")
        item_id, factors, text_ = row
        if item_id in seen:
            raise SurveyError(f"duplicate item id {item_id!r}")
        seen.add(item_id)
        items.append(SurveyItem(item_id, tuple(factors.split("/")), text_))
    if not items:
        raise SurveyError("catalog has no items")
    return tuple(items)


def load_catalog(path: str) -> tuple[SurveyItem, ...]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_catalog(fh.read())


def parse_responses(text: str) -> ResponseMatrix:
    """CSV with header ``respondent,<item_id>,...``; one row per respondent."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise SurveyError("empty responses file") from None
    if not header or header[0] != "respondent" or len(header) < 2:
        raise SurveyError("header must be respondent,<item_id>,...")
    items = tuple(header[1:])
    respondents = []
    rows = []
    for row in reader:
        if not row:
            continue
        if len(row) != len(header):
            raise SurveyError(f"row for {row[0]!r} has {len(row) - 1} values, expected {len(items)}")
        respondents.append(row[0])
        try:
            rows.append([int(v) for v in row[1:]])
        except ValueError:
            raise SurveyError(f"non-integer response in row for {row[0]!r}") from None
    if not respondents:
        raise SurveyError("no respondent rows")
    return ResponseMatrix(
        tuple(respondents), items, np.array(rows, dtype=np.int64)
    )


def load_responses(path: str) -> ResponseMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_responses(fh.read())


# -- report -----------------------------------------------------------------


@dataclass(frozen=True)
class SurveyReport:
    item_rows: tuple[tuple[str, str, float, float], ...]  # id, factors, mean, sd
    factor_means: Mapping[str, float]
    group_means: Mapping[str, float]
    alpha: float
    score: float
    band: str
    multiplier: float


def build_report(
    m: ResponseMatrix, catalog: Sequence[SurveyItem], multiplier: float = 100.0
) -> SurveyReport:
    item_rows = []
    for item in catalog:
        if item.id not in m.items:
            continue
        mean, sd = item_stats(m, item.id)
        item_rows.append((item.id, "/".join(item.factors), mean, sd))
    fmeans = factor_means(m, catalog)
    groups = {
        "player_experience": group_mean(m, catalog, PLAYER_EXPERIENCE_FACTORS),
        "usability": group_mean(m, catalog, USABILITY_FACTORS),
        "motivation_impact": group_mean(m, catalog, MOTIVATION_IMPACT_FACTORS),
    }
    px = select_items(catalog, PLAYER_EXPERIENCE_FACTORS)
    us = select_items(catalog, USABILITY_FACTORS)
    score, band = quality_score(m, px, us, multiplier)
    alpha = score / multiplier
    return SurveyReport(
        item_rows=tuple(item_rows),
        factor_means=fmeans,
        group_means=groups,
        alpha=alpha,
        score=score,
        band=band,
        multiplier=multiplier,
    )


def report_table(report: SurveyReport) -> str:
    lines = [f"{'item':<6} {'factors':<8} {'mean':>6} {'sd':>6}"]
    for item_id, factors, mean, sd in report.item_rows:
        lines.append(f"{item_id:<6} {factors:<8} {mean:>6.2f} {sd:>6.2f}")
    lines.append("")
    lines.append("factor means:")
    for code in FACTOR_CODES:
        if code in report.factor_means:
            lines.append(f"  {code:<4} {report.factor_means[code]:.2f}")
    lines.append("")
    for name, value in report.group_means.items():
        lines.append(f"{name} mean: {value:.2f}")
    lines.append(f"alpha (player experience + usability): {report.alpha:.3f}")
    lines.append(f"quality score (x{report.multiplier:g}): {report.score:.1f}")
    lines.append(f"band: {report.band}")
    return "\n".join(lines) + "\n"


def report_csv(report: SurveyReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["section", "key", "value", "extra"])
    for item_id, factors, mean, sd in report.item_rows:
        writer.writerow(["item", item_id, repr(mean), repr(sd)])
    for code in FACTOR_CODES:
        if code in report.factor_means:
            writer.writerow(["factor_mean", code, repr(report.factor_means[code]), ""])
    for name, value in report.group_means.items():
        writer.writerow(["group_mean", name, repr(value), ""])
    writer.writerow(["alpha", "px+usability", repr(report.alpha), ""])
    writer.writerow(["quality_score", f"x{report.multiplier:g}", repr(report.score), report.band])
    return buf.getvalue()
