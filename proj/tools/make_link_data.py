#!/usr/bin/env python3
"""Regenerate data/links and data/knots from the KnotInfo/LinkInfo tables.

Needs the `database_knotinfo` package and a built birack-tool. Each PD code is
converted with `birack-tool convert --mirror`, i.e. the stored diagram is the
mirror image of the tabulated one; see README for the orientation notes.
"""
import argparse
import csv
import os
import subprocess
import sys
import tempfile

import database_knotinfo

LINKS = {
    # name -> LinkInfo orientation suffix
    "L2a1": "{0}", "L4a1": "{0}", "L5a1": "{0}",
    "L6a1": "{0}", "L6a2": "{0}", "L6a3": "{0}", "L6a4": "{0,0}", "L6a5": "{0,0}",
    "L6n1": "{0,1}",
    "L7a1": "{0}", "L7a2": "{0}", "L7a3": "{0}", "L7a4": "{0}", "L7a5": "{0}",
    "L7a6": "{1}", "L7a7": "{0,0}",
    "L7n1": "{1}", "L7n2": "{0}",
}
KNOTS = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_4", "8_19", "8_20"]


def table(name):
    path = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data", name)
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh, delimiter="|"))


def convert(tool, pd):
    with tempfile.NamedTemporaryFile("w", suffix=".pd", delete=False) as fh:
        fh.write(pd + "\n")
        tmp = fh.name
    try:
        return subprocess.run([tool, "convert", tmp, "--mirror"], check=True, capture_output=True, text=True).stdout
    finally:
        os.unlink(tmp)


def write(path, header, body):
    with open(path, "w") as fh:
        for line in header:
            fh.write("# " + line + "\n")
        fh.write(body)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tool", default="build/tools/birack-tool")
    ap.add_argument("--out", default="data")
    args = ap.parse_args()

    links = {r["name"]: r for r in table("linkinfo_data_complete.csv")}
    for name, orient in LINKS.items():
        row = links.get(name + orient)
        if row is None:
            sys.exit(f"{name}{orient} not in LinkInfo")
        pd = row["pd_notation_vector"]
        write(os.path.join(args.out, "links", name + ".xl"),
              [f"{name}: mirror of LinkInfo {name}{orient}", f"PD {pd}"],
              convert(args.tool, pd))

    knots = {r["name"]: r for r in table("knotinfo_data_complete.csv")}
    for name in KNOTS:
        pd = knots[name]["pd_notation"]
        write(os.path.join(args.out, "knots", name + ".xl"),
              [f"{name}: mirror of KnotInfo {name}", f"PD {pd}"],
              convert(args.tool, pd))


if __name__ == "__main__":
    main()
