"""Readers and writers for models, datasets, results and reports.

Model (JSON)::

    {"d": 4, "order": [0, 1, 2, 3],
     "noise": {"0": 0.1, ...},
     "functions": {"0": {"parents": [], "table": [0]}, ...}}

Dataset (CSV): header ``v0,v1,...`` then one row of 0/1 tokens per sample.

Result (JSON)::

    {"order": [...],               # causal-top first
     "steps": [{"target": 3, "mi_score": 0.0, "conditioning": [0, 1, 2],
                "entries": [0, 1, null, ...]}, ...]}   # null = void
"""

import csv
import json
import re

import numpy as np

from .discovery import VOID, DiscoveryResult, DiscoveryStep, TruthTableEstimate
from .exceptions import DataError
from .generator import Dataset
from .model import BexsamModel

_NAME = re.compile(r"^v(\d+)$")


def _dump(obj, path):
    with open(path, "w", newline="\n") as fh:
        json.dump(obj, fh, indent=2, sort_keys=False)
        fh.write("\n")


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DataError("%s: invalid JSON (%s)" % (path, exc)) from None


def model_to_dict(model):
    return {
        "d": model.d,
        "order": list(model.order),
        "noise": {str(j): model.noise[j] for j in range(model.d)},
        "functions": {
            str(j): {"parents": list(model.parents[j]), "table": list(model.functions[j])}
            for j in range(model.d)
        },
    }


def model_from_dict(obj):
    try:
        d = int(obj["d"])
        noise = tuple(float(obj["noise"][str(j)]) for j in range(d))
        fns = [obj["functions"][str(j)] for j in range(d)]
        return BexsamModel(
            order=tuple(obj["order"]),
            parents=tuple(tuple(f["parents"]) for f in fns),
            functions=tuple(tuple(f["table"]) for f in fns),
            noise=noise,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError("malformed model document: %r" % (exc,)) from None


def save_model(model, path):
    _dump(model_to_dict(model), path)


def load_model(path):
    return model_from_dict(_load(path))


def save_dataset(data, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["v%d" % lab for lab in data.labels])
        w.writerows(data.rows.tolist())


def load_dataset(path):
    """Read a 0/1 CSV. Returns ``(Dataset, names)``.

    Headers of the form ``v<k>`` become label ``k``; any other header set is
    labelled ``0..d-1`` in column order.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise DataError("%s: file is empty" % path) from None
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise DataError(
                    "%s: line %d has %d fields, header has %d" % (path, lineno, len(row), len(header))
                )
            vals = []
            for col, tok in zip(header, row):
                tok = tok.strip()
                if tok not in ("0", "1"):
                    raise DataError(
                        "%s: line %d, column %r: non-binary value %r" % (path, lineno, col, tok)
                    )
                vals.append(tok == "1")
            rows.append(vals)
    if not rows:
        raise DataError("%s: no data rows" % path)
    matches = [_NAME.match(h) for h in header]
    if all(matches) and len({int(m.group(1)) for m in matches}) == len(header):
        labels = tuple(int(m.group(1)) for m in matches)
    else:
        labels = tuple(range(len(header)))
    names = {lab: h for lab, h in zip(labels, header)}
    return Dataset(labels=labels, rows=np.asarray(rows, dtype=np.uint8)), names


def result_to_dict(result):
    steps = []
    for s in result.steps:
        entries = [None if e == VOID else int(e) for e in s.tt.entries.tolist()]
        steps.append(
            {
                "target": s.target,
                "mi_score": s.mi_score,
                "conditioning": list(s.tt.conditioning),
                "entries": entries,
            }
        )
    return {"order": list(result.order), "steps": steps}


def result_from_dict(obj):
    try:
        steps = []
        for s in obj["steps"]:
            entries = [VOID if e is None else int(e) for e in s["entries"]]
            tt = TruthTableEstimate(int(s["target"]), tuple(s["conditioning"]), entries)
            steps.append(DiscoveryStep(int(s["target"]), float(s["mi_score"]), tt, ()))
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError("malformed result document: %r" % (exc,)) from None
    return DiscoveryResult(tuple(steps))


def save_result(result, path):
    _dump(result_to_dict(result), path)


def load_result(path):
    return result_from_dict(_load(path))


def save_json(obj, path):
    _dump(obj, path)


BENCH_COLUMNS = ("d", "n", "trials", "mean_FA", "mean_FTT", "mean_CT_ms")


def write_bench_csv(rows, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(BENCH_COLUMNS)
    for r in rows:
        w.writerow([r.d, r.n, r.trials, repr(r.mean_FA), repr(r.mean_FTT), "%.4f" % r.mean_CT_ms])


def write_confusion_csv(conf, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["true", "directed", "no_edge", "undirected"])
    for name, row in zip(("directed", "no_edge"), conf.tolist()):
        w.writerow([name] + row)
