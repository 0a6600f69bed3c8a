"""
JSON-ready dictionaries describing analyses, for the command line interface.

Exact coordinates are written as decimal strings with `format_scalar`. Labels are
written as "max", "min" or "none", and as null where they are undefined.
"""
from typing import Dict, List, Optional

from .common import Point, format_scalar
from .components import Polygon
from .decomposition import (
    AuditSummary,
    Decomposition,
    FourVertexCertificate,
    InequalityReport,
)
from .evolute import CuspFlag, cusp_flags, evolute, winding_number
from .exceptions import PreconditionError
from .extremality import (
    Extremality,
    ExtremalityReport,
    Labels,
    bose_counts,
    count_labels,
    global_labels,
    local_labels,
    radial_labels,
    vertex_sign,
)


def _label(label: Optional[Extremality]) -> Optional[str]:
    return label.name.lower() if label is not None else None


def _point(point: Point) -> List[str]:
    return [format_scalar(point.x), format_scalar(point.y)]


def _optional(function, *args):
    try:
        return function(*args)
    except PreconditionError:
        return None


def _counts(prefix: str, labels: Labels) -> Dict[str, int]:
    return {
        f"{prefix}_minus": count_labels(labels, Extremality.MAX),
        f"{prefix}_plus": count_labels(labels, Extremality.MIN),
    }


def polygon_report(polygon: Polygon) -> Dict:
    return {
        "n": polygon.n,
        "vertices": [_point(point) for point in polygon],
        "reversed_on_load": polygon.reversed_on_load,
        "predicates": polygon.predicates.to_dict(),
    }


def analysis_report(
    polygon: Polygon, report: Optional[ExtremalityReport] = None
) -> Dict:
    """
    Describes the polygon's predicates, angles, signs and extremal labels.

    Without a precomputed report, labels are computed leniently: vertices where a
    label is undefined (for example because four vertices are concyclic) get null, and
    the circle statistics are only included for generic convex polygons.
    """
    result = polygon_report(polygon)
    result["angles"] = [
        _optional(polygon.left_angle, index) for index in range(polygon.n)
    ]
    result["signs"] = [
        _optional(lambda i: vertex_sign(polygon, i).name.lower(), index)
        for index in range(polygon.n)
    ]
    if polygon.n < 4:
        return result

    if report is not None:
        labels = {
            "global": report.global_labels,
            "local": report.local_labels,
            "radial": report.radial_labels,
        }
        bose = report.bose
    else:
        labels = {
            "global": global_labels(polygon, strict=False),
            "local": local_labels(polygon, strict=False),
            "radial": radial_labels(polygon, strict=False),
        }
        predicates = polygon.predicates
        generic_convex = predicates.convex and predicates.generic
        bose = bose_counts(polygon) if generic_convex else None

    result["labels"] = {
        kind: [_label(label) for label in values] for kind, values in labels.items()
    }
    counts: Dict[str, Optional[int]] = {
        **_counts("s", labels["global"]),
        **_counts("l", labels["local"]),
        **_counts("r", labels["radial"]),
    }
    if bose is not None:
        counts.update(
            t_plus=bose.t_plus,
            t_minus=bose.t_minus,
            u_plus=bose.u_plus,
            u_minus=bose.u_minus,
        )
        difference = bose.difference_residuals()
        total = bose.sum_residuals(polygon.n)
        result["bose_residuals"] = {
            "difference_plus": difference[0],
            "difference_minus": difference[1],
            "sum_plus": total[0],
            "sum_minus": total[1],
        }
    result["counts"] = counts
    return result


def evolute_report(polygon: Polygon) -> Dict:
    """
    Describes the evolute: its exact centers, the two winding numbers (null where
    undefined) and the cusp flags (null where undefined).
    """
    centers = evolute(polygon)
    result = {
        "n": polygon.n,
        "centers": [_point(center) for center in centers],
        "distinct_centers": [
            _point(center) for center in centers.distinct_centers()
        ],
        "degenerate": centers.degenerate,
        "winding_p": None,
        "winding_e": None,
        "cusps": None,
        "flags": None,
    }
    winding_p = _optional(winding_number, polygon)
    if winding_p is not None:
        result["winding_p"] = winding_p.value
    if not centers.degenerate:
        winding_e = _optional(winding_number, centers)
        if winding_e is not None:
            result["winding_e"] = winding_e.value
        flags = cusp_flags(polygon, strict=False)
        result["flags"] = [flag.name.lower() if flag else None for flag in flags]
        result["cusps"] = [
            index for index, flag in enumerate(flags) if flag == CuspFlag.CUSP
        ]
    return result


def decomposition_report(
    decomposition: Decomposition, report: InequalityReport
) -> Dict:
    return {
        **report.to_dict(),
        "parts": [
            list(part.parent_indices) for part in decomposition.parts
        ],
    }


def certificate_report(certificate: FourVertexCertificate) -> Dict:
    return {
        "s_bound": certificate.s_bound,
        "l_bound": certificate.l_bound,
        "depth": certificate.depth,
        "traces": {
            trace.quantity: {
                "lower_bound": trace.lower_bound,
                "depth": trace.depth,
                "steps": [step._asdict() for step in trace.steps],
            }
            for trace in certificate
        },
    }


def audit_report(summary: AuditSummary) -> Dict:
    return {
        "holds": summary.holds,
        "worst_slack": {
            f"{name}/{quantity}": slack
            for (name, quantity), slack in sorted(summary.worst_slack.items())
        },
        "reports": [report.to_dict() for report in summary.reports],
    }
