#!/usr/bin/env python3
"""End-to-end checks of the seedcomm binary: exit codes, schemas, CSV layout, determinism.

usage: cli_test.py <seedcomm binary> <schema dir>
"""

import csv
import io
import json
import os
import pathlib
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

try:
    import jsonschema
    from referencing import Registry, Resource
except ImportError:  # schema checks are skipped, everything else still runs
    jsonschema = None

failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def validate(doc, name):
    if jsonschema is None:
        return
    resources = []
    for p in SCHEMAS.glob("*.schema.json"):
        resources.append((p.name, Resource.from_contents(json.loads(p.read_text()))))
    registry = Registry().with_resources(resources)
    schema = json.loads((SCHEMAS / name).read_text())
    try:
        jsonschema.Draft202012Validator(schema, registry=registry).validate(doc)
        check(True, f"{name} validates")
    except jsonschema.ValidationError as e:
        check(False, f"{name} validates: {e.message}")


# seeds
r = run("seeds", "--dataset", "karate", "--delta", "6", "--format", "json")
check(r.returncode == 0, "seeds karate delta 6 exits 0")
doc = json.loads(r.stdout)
validate(doc, "seeds.schema.json")
check(doc["tau"] == 6 and doc["seed_count"] == 3, "seeds karate delta 6: tau 6, 3 seeds")
check([s["label"] for s in doc["seeds"]] == ["34", "1", "33"], "seeds karate delta 6 labels")

r = run("seeds", "--dataset", "karate", "--delta", "1", "--format", "json")
check(json.loads(r.stdout)["seed_count"] == 34, "seeds karate delta 1: 34 seeds")

r = run("seeds", "--dataset", "karate", "--delta", "1", "--format", "csv")
rows = list(csv.reader(io.StringIO(r.stdout)))
check(rows[0] == ["seed_label", "degree_rank", "lcc_rank", "eigenvector_rank", "pagerank_rank"]
      and len(rows) == 35, "seeds csv layout")

r = run("seeds", "--dataset", "karate", "--delta", "34")
check(r.returncode == 3 and "smaller delta" in r.stderr, "seeds with empty intersection exits 3")

for args, what in [
    (["seeds", "--input", "missing.txt", "--delta", "1"], "missing input file"),
    (["seeds", "--dataset", "lesmis", "--delta", "1"], "unknown dataset"),
    (["seeds", "--dataset", "karate", "--delta", "0"], "delta 0"),
    (["seeds", "--dataset", "karate", "--delta", "35"], "delta above n"),
    (["seeds", "--dataset", "karate"], "missing --delta"),
    (["seeds", "--delta", "2"], "no input at all"),
    (["detect", "--dataset", "karate", "--delta", "2", "--strategy", "nearest"], "bad strategy"),
    (["detect", "--dataset", "karate", "--delta", "2", "--tol", "0"], "non-positive tolerance"),
    (["sweep", "--dataset", "karate", "--delta-range", "5..2"], "reversed range"),
]:
    r = run(*args)
    check(r.returncode == 2, f"{what} exits 2 (got {r.returncode})")

# detect
r = run("detect", "--dataset", "karate", "--delta", "6", "--format", "json")
check(r.returncode == 0, "detect karate delta 6 exits 0")
doc = json.loads(r.stdout)
validate(doc, "detect.schema.json")
check(len(doc["cover"]["communities"]) == 3 and doc["report"]["all_pass"], "karate: 3 communities, all pass")
check(abs(doc["report"]["rho"] - 78 / 561) < 1e-15, "karate rho")

for name, delta, n in [("dolphin", "3", 62), ("football", "3", 115)]:
    for strategy in ["closest", "maxdeg"]:
        r = run("detect", "--dataset", name, "--delta", delta, "--strategy", strategy, "--format", "json")
        doc = json.loads(r.stdout)
        union = set()
        for c in doc["cover"]["communities"]:
            union.update(c["member_labels"])
        check(len(union) == n and not doc["cover"]["residual"], f"{name} {strategy}: cover spans all {n} nodes")
        check(r.returncode == (0 if doc["report"]["all_pass"] else 4), f"{name} {strategy}: exit code follows all_pass")

r = run("detect", "--dataset", "karate", "--delta", "34")
check(r.returncode == 3, "detect karate delta 34 exits 3")

with tempfile.TemporaryDirectory() as tmp:
    star = pathlib.Path(tmp) / "star.txt"
    star.write_text("hub a\nhub b\nhub c\nhub d\nhub e\n")
    r = run("detect", "--input", str(star), "--delta", "1", "--format", "csv")
    check(r.returncode == 4, "star at delta 1 fails the density inequality and exits 4")
    cover_csv, report_csv = r.stdout.split("\n\n")
    cover_rows = list(csv.reader(io.StringIO(cover_csv)))
    check(cover_rows[0] == ["node_label", "community_index"], "cover csv header")
    check(sum(1 for row in cover_rows[1:] if row[0] == "hub") == 6, "overlapping node emits one row per community")
    report_rows = list(csv.reader(io.StringIO(report_csv)))
    check(report_rows[0] == ["community", "n_c", "m_int", "m_bnd", "delta_int", "delta_ext", "rho", "passes"],
          "report csv header")

    loops = pathlib.Path(tmp) / "loops.txt"
    loops.write_text("a a\na b\nb a\nb c\n")
    r = run("scores", "--input", str(loops), "--measure", "degree")
    check(r.returncode == 0 and "self-loop" in r.stderr and "duplicate" in r.stderr, "input warnings on stderr")
    check(r.stdout.splitlines()[0] == "label,measure,score" and "b,degree,2" in r.stdout, "scores csv")

    bad = pathlib.Path(tmp) / "bad.txt"
    bad.write_text("a b\nc\n")
    r = run("seeds", "--input", str(bad), "--delta", "1")
    check(r.returncode == 2 and "line 2" in r.stderr, "parse error reports its line and exits 2")

    out = pathlib.Path(tmp) / "out.json"
    r = run("detect", "--dataset", "karate", "--delta", "6", "--format", "json", "--output", str(out))
    check(r.returncode == 0 and r.stdout == "" and json.loads(out.read_text())["tau"] == 6, "--output writes the file")

    data = pathlib.Path(tmp) / "data"
    data.mkdir()
    (data / "karate.txt").write_text("1 2\n")
    env = dict(os.environ, SEEDCOMM_DATA_DIR=str(data))
    r = run("seeds", "--dataset", "karate", "--delta", "1", env=env)
    check(r.returncode == 2 and "expected 34" in r.stderr, "SEEDCOMM_DATA_DIR is honoured and counts are checked")

# sweep
r = run("sweep", "--dataset", "karate", "--delta-range", "1..10", "--format", "csv")
rows = list(csv.DictReader(io.StringIO(r.stdout)))
check([int(x["tau"]) for x in rows] == [34, 17, 11, 8, 7, 6, 5, 4, 4, 3], "sweep tau column")
counts = [int(x["seed_count"]) for x in rows]
check(counts[0] == 34 and all(a >= b for a, b in zip(counts, counts[1:])), "sweep seed counts non-increasing")
check(rows[5]["seed_labels"] == "34;1;33", "sweep labels are ';'-joined in ranking order")
r = run("sweep", "--dataset", "football", "--delta-range", "1..6", "--format", "json")
doc = json.loads(r.stdout)
validate(doc, "sweep.schema.json")
check(doc["rows"][0]["seed_count"] == 115, "football delta 1 row selects every node")

# bench
r = run("bench", "--dataset", "karate", "--delta", "6", "--reps", "5", "--format", "json")
doc = json.loads(r.stdout)
validate(doc, "bench.schema.json")
check(len(doc["samples_s"]) == 5 and doc["median_s"] < 1.0, "bench karate: 5 samples, median under 1 s")
r = run("bench", "--dataset", "football", "--delta", "3", "--reps", "5", "--format", "json")
check(json.loads(r.stdout)["median_s"] < 2.0, "bench football median under 2 s")

# datasets
r = run("datasets", "--format", "json")
doc = json.loads(r.stdout)
check([(d["name"], d["nodes"], d["edges"]) for d in doc["datasets"]]
      == [("karate", 34, 78), ("dolphin", 62, 159), ("football", 115, 613)], "datasets listing")

# determinism
for args in (["detect", "--dataset", "football", "--delta", "4", "--format", "json"],
             ["detect", "--dataset", "dolphin", "--delta", "2", "--strategy", "maxdeg", "--format", "csv"],
             ["scores", "--dataset", "karate", "--format", "csv"],
             ["sweep", "--dataset", "dolphin", "--delta-range", "1..", "--format", "csv"]):
    a, b = run(*args), run(*args)
    check(a.stdout == b.stdout and a.stdout != "", "byte-identical reruns: " + " ".join(args))

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
