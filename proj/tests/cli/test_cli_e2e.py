#!/usr/bin/env python3
"""End-to-end checks of the cq4 binary: exit codes, stream discipline,
byte-identical output across runs and job counts."""
import json
import subprocess
import sys

CQ4 = sys.argv[1]
CORPUS = sys.argv[2]
failures = []


def run(*args, expect_code=0):
    proc = subprocess.run([CQ4, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures.append(f"{args}: exit {proc.returncode} != {expect_code}\n{proc.stderr}")
    return proc


def check(cond, msg):
    if not cond:
        failures.append(msg)


# certify --z 5: conductor and verdict
p = run("certify", "--z", "5")
cert = json.loads(p.stdout)
check(cert["conductor"] == "12259", f"conductor: {cert['conductor']}")
check(cert["monogenic"] is True, "monogenic should be true")
check(cert["disc_field"] == "80100882173", "disc_field")

# all stdout lines are JSON; diagnostics only on stderr
p = run("search", "--a-max", "8", "--b-max", "4", "--x-max", "2", "--g-max", "120")
for line in p.stdout.splitlines():
    json.loads(line)
check("triples=" in p.stderr, "search counters belong on stderr")
check("triples=" not in p.stdout, "no diagnostics on stdout")

# byte-identical across runs and job counts
args = ["search", "--a-max", "10", "--b-max", "6", "--x-max", "2", "--g-max", "150"]
out1 = run(*args).stdout
out2 = run(*args).stdout
out4 = run(*args, "--jobs", "4").stdout
check(out1 == out2, "search output differs between runs")
check(out1 == out4, "search output differs with --jobs 4")

# family polynomials
p = run("family", "--family", "fz", "--z", "0", "--z", "1")
lines = [json.loads(l) for l in p.stdout.splitlines()]
check(lines[0]["poly"] == "2,0,4,0,1", f"f_0: {lines[0]['poly']}")
check(lines[1]["poly"] == "1,-1,1,-1,1", f"f_1: {lines[1]['poly']}")

# corpus passes on the shipped file
p = run("corpus", "--file", CORPUS)
check("failed=0" in p.stderr, "corpus should pass")

# corpus failure exit code 1
import tempfile, os
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump([{"label": "broken", "conductor": 9, "field_disc": 9,
                "source": "t", "family_z": 3}], f)
    badpath = f.name
run("corpus", "--file", badpath, expect_code=1)
os.unlink(badpath)

# usage errors exit 2
run("certify", expect_code=2)
run("nonsense", expect_code=2)
run("certify", "--z", "5", "--poly", "1,1,1", expect_code=2)

# x-check
p = run("x-check", "--x", "11", "--x", "13", "--x", "6")
lines = [json.loads(l) for l in p.stdout.splitlines()]
check(lines[0]["result"] is True, "x=11 should pass")
check(lines[1]["result"] is False, "x=13 should fail")
check("error" in lines[2], "x=6 should carry the rejection reason")

# xy-search base family row
p = run("xy-search", "--c", "1", "--g-max", "10")
rows = [json.loads(l) for l in p.stdout.splitlines()]
check({"c": "1", "g": "7", "m": "53", "sign": "+"} in rows, "xy-search misses (7,53,+)")

# certify a raw polynomial
p = run("certify", "--poly", "-1069,-747,-149,-3,1")
cert = json.loads(p.stdout)
check(cert["irreducible"] is True and cert["is_c4"] is True, "raw poly pipeline")
check(cert["monogenic"] is None, "raw poly cannot decide monogenicity")

# certify explicit params (the a=1, x=y=1 family at v = 0)
p = run("certify", "--params", "1,2,4,5,1,1,2,2,1")
cert = json.loads(p.stdout)
check(cert["conductor"] == "20", "params conductor")
check(cert["monogenic"] is True, "params monogenic")

if failures:
    print("FAILURES:")
    for f in failures:
        print(" -", f)
    sys.exit(1)
print("cli end-to-end: all checks passed")
