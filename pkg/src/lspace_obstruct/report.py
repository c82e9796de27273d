"""JSON / CSV / plain-table rendering of computation results.

Rationals are always written as ``"p/q"`` strings (``"p"`` for integers) so
that no consumer ever sees a float. Key order is fixed by construction, which
makes repeated runs byte-identical.
"""

import csv
import io
import json
import re
from fractions import Fraction

from . import __version__
from .floer_d import DInvariantTable
from .numtheory import IntegerInterval
from .obstruction import ObstructionReport, ScanResult

_RATIONAL_RE = re.compile(r"-?\d+(/[1-9]\d*)?")


def format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text):
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def _window(interval):
    if interval is None:
        return None
    return {"lower": interval.lower, "upper_exclusive": interval.upper}


def _unwindow(obj):
    if obj is None:
        return None
    return IntegerInterval(obj["lower"], obj["upper_exclusive"])


# -- payload encoders / decoders -------------------------------------------


def dtable_to_dict(table):
    return {
        "n": table.n,
        "entries": [{"i": i, "d": format_rational(d)} for i, d in table],
        "max4d": format_rational(4 * max(table.entries)),
        "argmax": table.argmax(),
    }


def dtable_from_dict(obj):
    entries = sorted(obj["entries"], key=lambda e: e["i"])
    return DInvariantTable(obj["n"], tuple(parse_rational(e["d"]) for e in entries))


def torsion_to_dict(poly, torsion, closed_form_agrees=None):
    return {
        "coeffs": list(poly.coeffs),
        "genus": poly.genus,
        "values": list(torsion.values),
        "closed_form_agrees": closed_form_agrees,
    }


def obstruction_to_dict(report):
    return {
        "n": report.n,
        "delta": report.delta,
        "squarefree": report.squarefree,
        "max4d": format_rational(report.max4d),
        "threshold": format_rational(report.threshold),
        "inequality_holds": report.inequality_holds,
        "conclusive": report.conclusive,
        "argmax": report.argmax,
        "lspace": report.lspace,
        "verdict": report.verdict,
        "reasoning": list(report.reasoning),
    }


def obstruction_from_dict(obj):
    return ObstructionReport(
        n=obj["n"],
        delta=obj["delta"],
        squarefree=obj["squarefree"],
        max4d=parse_rational(obj["max4d"]),
        threshold=parse_rational(obj["threshold"]),
        inequality_holds=obj["inequality_holds"],
        conclusive=obj["conclusive"],
        argmax=obj["argmax"],
        lspace=obj["lspace"],
        reasoning=tuple(obj["reasoning"]),
    )


def scan_to_dict(result):
    interval = result.certified_interval
    return {
        "m": result.m,
        "lspace_min": result.lspace_min,
        "window": _window(result.window),
        "lemma_window": _window(result.lemma_slopes),
        "certified_s": result.certified_s,
        "certified_interval": (
            None if interval is None else {"lower": interval[0], "upper_inclusive": interval[1]}
        ),
        "unresolved": _window(result.unresolved),
        "squarefree_slopes": result.squarefree_slopes(),
        "per_slope": [obstruction_to_dict(r) for r in result.per_slope],
    }


def scan_from_dict(obj):
    window = _unwindow(obj["window"])
    return ScanResult(
        m=obj["m"],
        lspace_min=window.lower,
        scan_upper=window.upper,
        per_slope=tuple(obstruction_from_dict(r) for r in obj["per_slope"]),
        certified_s=obj["certified_s"],
        lemma_slopes=_unwindow(obj["lemma_window"]),
    )


# -- documents ---------------------------------------------------------------


def make_document(command, inputs, payload, version=__version__):
    return {"tool_version": version, "command": command, "inputs": inputs, "payload": payload}


def dumps_json(document):
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


_REPORT_COLUMNS = ["n", "squarefree", "max4d", "threshold", "inequality_holds", "conclusive"]


def _report_row(d):
    return [str(d[c]).lower() if isinstance(d[c], bool) else d[c] for c in _REPORT_COLUMNS]


def dtable_csv(payload):
    return _csv([["i", "d"]] + [[e["i"], e["d"]] for e in payload["entries"]])


def torsion_csv(payload):
    return _csv([["i", "t"]] + [[i, t] for i, t in enumerate(payload["values"])])


def obstruction_csv(payload):
    return _csv([_REPORT_COLUMNS, _report_row(payload)])


def scan_csv(payloads):
    rows = [["m"] + _REPORT_COLUMNS + ["certified_s"]]
    for p in payloads:
        s = "" if p["certified_s"] is None else p["certified_s"]
        rows.extend([p["m"]] + _report_row(r) + [s] for r in p["per_slope"])
    return _csv(rows)


def dtable_text(payload, label):
    width = len(str(payload["entries"][-1]["i"]))
    lines = [f"d-invariants of {payload['n']}-surgery on {label}", f"{'i'.rjust(width)} | d"]
    lines += [f"{str(e['i']).rjust(width)} | {e['d']}" for e in payload["entries"]]
    return "\n".join(lines) + "\n"


def torsion_text(payload, label):
    lines = [
        f"knot: {label}",
        f"genus: {payload['genus']}",
        f"t_0..t_{payload['genus']}: " + ",".join(str(t) for t in payload["values"]),
    ]
    if payload["closed_form_agrees"] is not None:
        lines.append("closed form agrees: " + ("yes" if payload["closed_form_agrees"] else "NO"))
    return "\n".join(lines) + "\n"


def obstruction_text(payload, label):
    lines = [
        f"{payload['n']}-surgery on {label}",
        f"  |H_1|            {payload['delta']}",
        f"  squarefree       {str(payload['squarefree']).lower()}",
        f"  max 4d           {payload['max4d']}",
        f"  threshold        {payload['threshold']}",
        f"  inequality holds {str(payload['inequality_holds']).lower()}",
        f"  conclusive       {str(payload['conclusive']).lower()}",
        f"  verdict          {payload['verdict']}",
        "reasoning:",
    ]
    lines += [f"  - {step}" for step in payload["reasoning"]]
    return "\n".join(lines) + "\n"


def _fmt_window(w, closing=")"):
    if w is None:
        return "none"
    upper = w.get("upper_exclusive", w.get("upper_inclusive"))
    return f"[{w['lower']},{upper}{closing}"


def scan_text(payloads):
    lines = []
    for p in payloads:
        if p["certified_interval"] is None:
            head = f"m={p['m']}: no slope certified in {_fmt_window(p['window'])}"
        else:
            head = f"m={p['m']}: non-fillable for all r in {_fmt_window(p['certified_interval'], ']')}"
        upper = p["window"]["upper_exclusive"]
        if p["unresolved"] is None:
            unresolved = "none"
        elif p["certified_s"] is None:
            unresolved = f"[{p['lspace_min']},{upper})"
        else:
            unresolved = f"({p['certified_s']},{upper})"
        lines.append(
            f"{head}; lemma window {_fmt_window(p['lemma_window'])}; unresolved {unresolved}"
        )
    return "\n".join(lines) + "\n"
