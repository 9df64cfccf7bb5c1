#!/usr/bin/env python3
"""Download PJM 2021 hourly solar, wind, nuclear and load into data/pjm2021.

Uses the PJM Data Miner 2 API, which needs a (free) subscription key:

    PJM_API_KEY=... python3 scripts/fetch_pjm_2021.py [--out data/pjm2021]

Writes solar.csv, wind.csv, nuclear.csv and load.csv, each with columns
timestamp_utc,value and 8760 rows in UTC order. Generation comes from
gen_by_fuel. Load comes from hrl_load_metered summed over every row of each
hour (--load rto keeps only the RTO-wide rows instead).
"""

import argparse
import collections
import csv
import os
import pathlib
import sys

import requests

API = "https://api.pjm.com/api/v1"
RANGE = "2021-01-01 00:00 to 2021-12-31 23:59"
PAGE = 50000
HOURS = 8760


def fetch(feed, key, fields, extra=None):
    rows = []
    start = 1
    while True:
        params = {
            "rowCount": PAGE,
            "startRow": start,
            "datetime_beginning_ept": RANGE,
            "fields": ",".join(fields),
            "format": "json",
        }
        params.update(extra or {})
        r = requests.get(f"{API}/{feed}", params=params,
                         headers={"Ocp-Apim-Subscription-Key": key}, timeout=120)
        r.raise_for_status()
        body = r.json()
        items = body.get("items", [])
        rows.extend(items)
        total = body.get("totalRows", len(rows))
        if not items or len(rows) >= total:
            return rows
        start += len(items)


def hourly(rows, keep=lambda row: True):
    totals = collections.OrderedDict()
    for row in sorted(rows, key=lambda r: r["datetime_beginning_utc"]):
        if keep(row):
            t = row["datetime_beginning_utc"]
            totals[t] = totals.get(t, 0.0) + float(row["mw"])
    return totals


def write(path, series):
    if len(series) != HOURS:
        sys.exit(f"{path.name}: expected {HOURS} hours, got {len(series)}")
    with path.open("w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["timestamp_utc", "value"])
        for t, v in series.items():
            w.writerow([t, repr(v)])
    mean = sum(series.values()) / len(series)
    print(f"wrote {path} (mean {mean:.2f})")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "pjm2021"))
    ap.add_argument("--load", choices=["all", "rto"], default="all")
    args = ap.parse_args()

    key = os.environ.get("PJM_API_KEY")
    if not key:
        sys.exit("set PJM_API_KEY to a Data Miner 2 subscription key")
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    gen = fetch("gen_by_fuel", key, ["datetime_beginning_utc", "fuel_type", "mw"])
    for name, fuel in (("solar", "Solar"), ("wind", "Wind"), ("nuclear", "Nuclear")):
        write(out / f"{name}.csv", hourly(gen, lambda r, fuel=fuel: r["fuel_type"] == fuel))

    load = fetch("hrl_load_metered", key, ["datetime_beginning_utc", "load_area", "mw"])
    keep = (lambda r: True) if args.load == "all" else (lambda r: r["load_area"] == "RTO")
    write(out / "load.csv", hourly(load, keep))


if __name__ == "__main__":
    main()
