#!/usr/bin/env python3
"""Export knot tables in the kcg CSV schema from the KnotInfo database.

The KnotInfo data ships with the `database_knotinfo` package (GPL-3). Point
--source at its knotinfo_data_complete.csv, or install the package and omit
the flag.

    python3 tools/knotinfo_export.py --out data
"""

import argparse
import csv
import re
import sys
from pathlib import Path

HEADER = ["name", "crossings", "alexander", "signature", "genus3",
          "genus4_min", "genus4_max", "slice", "seifert", "concordant_to"]

SLICE_11 = [
    "11a_28", "11a_35", "11a_36", "11a_58", "11a_87", "11a_96", "11a_103",
    "11a_115", "11a_164", "11a_165", "11a_169", "11a_201", "11a_316", "11a_326",
    "11n_4", "11n_21", "11n_37", "11n_39", "11n_42", "11n_49", "11n_50",
    "11n_67", "11n_73", "11n_74", "11n_83", "11n_97", "11n_116", "11n_132",
    "11n_139", "11n_172",
]

CONCORDANCES = {
    "3_1": ["11a_196", "11a_216", "11a_283", "11a_286", "11n_106", "11n_122"],
    "4_1": ["11a_5", "11a_104", "11a_112", "11a_168", "11n_85", "11n_100"],
    "5_1": ["11n_69", "11n_76", "11n_78"],
    "5_2": ["11n_68", "11n_71", "11n_75"],
    "6_2": ["11a_57", "11a_102", "11a_139", "11a_199", "11a_231"],
    "6_3": ["11a_38", "11a_44", "11a_47", "11a_187"],
    "3_1+4_1": ["11a_132", "11a_157"],
}
CONCORDANT_TO = {k: target for target, ks in CONCORDANCES.items() for k in ks}

# name: (signature, genus3, genus4_min, genus4_max) for the knots whose
# concordance genus is open.
UNKNOWN_11 = {
    "11a_6": (2, 3, 1, 2), "11a_8": (0, 3, 1, 1), "11a_67": (0, 3, 1, 2),
    "11a_72": (0, 4, 1, 2), "11a_108": (2, 4, 1, 2), "11a_109": (0, 4, 1, 2),
    "11a_135": (0, 3, 1, 2), "11a_181": (-2, 3, 1, 2), "11a_249": (0, 3, 1, 2),
    "11a_264": (-2, 4, 1, 1), "11a_297": (2, 3, 1, 2), "11a_305": (2, 4, 1, 2),
    "11a_332": (0, 4, 1, 2), "11a_352": (-2, 3, 1, 2), "11n_34": (0, 3, 0, 1),
    "11n_45": (0, 3, 1, 1), "11n_66": (-2, 3, 1, 2), "11n_145": (0, 3, 1, 1),
    "11n_152": (-2, 3, 1, 1),
}

PROVENANCE = "# Alexander polynomials, Seifert matrices{extra} from KnotInfo (database_knotinfo {version}, GPL-3)."


def locate_source():
    try:
        import database_knotinfo
    except ImportError:
        sys.exit("database_knotinfo not installed; pass --source")
    return Path(database_knotinfo.__file__).parent / "csv_data" / "knotinfo_data_complete.csv"


def package_version(source):
    init = Path(source).parent.parent / "__version__.py"
    if init.exists():
        m = re.search(r"['\"]([^'\"]+)['\"]", init.read_text())
        if m:
            return m.group(1)
    return "unknown"


def load(source):
    with open(source, newline="") as fh:
        rows = csv.DictReader(fh, delimiter="|")
        out = {}
        for row in rows:
            if row["name"] == "Name":  # display-name row
                continue
            out[row["name"]] = row
    return out


def alexander(row):
    vec = [int(x) for x in row["alexander_polynomial_vector"].strip("[] ").split(",")]
    coeffs = vec[2:]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return ";".join(str(c) for c in coeffs)


def seifert(row):
    text = row["seifert_matrix"].strip()
    rows = re.findall(r"\[([^\[\]]*)\]", text)
    return ";".join(",".join(x.strip() for x in r.split(",")) for r in rows)


def four_genus(row):
    text = row["smooth_four_genus"].strip()
    if text.startswith("["):
        lo, hi = (int(x) for x in text.strip("[]").split(","))
        return lo, hi
    return int(text), int(text)


def record(row, *, signature=None, genus3=None, genus4=None, slice_status=None, concordant_to=""):
    sigma = int(row["signature"]) if signature is None else signature
    g3 = int(row["three_genus"]) if genus3 is None else genus3
    lo, hi = four_genus(row) if genus4 is None else genus4
    if slice_status is None:
        slice_status = "slice" if hi == 0 else ("unknown" if lo == 0 else "not_slice")
    return [row["name"], row["crossing_number"], alexander(row), sigma, g3, lo, hi,
            slice_status, seifert(row), concordant_to]


def write(path, comments, records):
    with open(path, "w", newline="") as fh:
        for line in comments:
            fh.write(line + "\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(HEADER)
        w.writerows(records)
    print(f"{path}: {len(records)} records")


def is_prime_le9(name):
    m = re.fullmatch(r"(\d)_(\d+)", name)
    return m is not None and 3 <= int(m.group(1)) <= 9


def is_knot_name(name):
    return re.fullmatch(r"\d+[an]?_\d+", name) is not None


def knot_order(name):
    m = re.fullmatch(r"(\d+)([an]?)_(\d+)", name)
    return int(m.group(1)), m.group(2), int(m.group(3))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--source", type=Path, help="knotinfo_data_complete.csv")
    ap.add_argument("--out", type=Path, default=Path("data"))
    args = ap.parse_args()
    source = args.source or locate_source()
    version = package_version(source)
    db = load(source)
    args.out.mkdir(parents=True, exist_ok=True)
    base = PROVENANCE.format(extra=", signatures and genera", version=version)

    le9 = sorted((n for n in db if is_prime_le9(n)), key=knot_order)
    write(args.out / "knots_le9.csv",
          ["# Prime knots through nine crossings.", base],
          [record(db[n]) for n in le9])

    write(args.out / "slice11.csv",
          ["# Eleven-crossing knots known to be slice.", base],
          [record(db[n], slice_status="slice") for n in SLICE_11])

    t1 = sorted(CONCORDANT_TO, key=knot_order)
    write(args.out / "table1_concordances.csv",
          ["# Eleven-crossing knots concordant to a knot sum of smaller genus.",
           "# concordant_to: the lower-genus knot each is known to be concordant to.", base],
          [record(db[n], slice_status="not_slice", concordant_to=CONCORDANT_TO[n]) for n in t1])

    write(args.out / "table2_unknown.csv",
          ["# Eleven-crossing knots whose concordance genus is not determined by classical bounds.",
           "# signature, genus3, genus4_min, genus4_max: values as originally tabulated for this set",
           "# (signs follow that tabulation; some four-genus values have since been refined).",
           PROVENANCE.format(extra="", version=version)],
          [record(db[n], signature=s, genus3=g3, genus4=(lo, hi), slice_status="unknown" if lo == 0 else "not_slice")
           for n, (s, g3, lo, hi) in sorted(UNKNOWN_11.items(), key=lambda kv: knot_order(kv[0]))])

    eleven = sorted((n for n in db if is_knot_name(n) and n.startswith("11")), key=knot_order)
    write(args.out / "knots11_full.csv",
          ["# All eleven-crossing prime knots.", base,
           "# slice: slice when the four-genus is 0; concordant_to: known concordances to smaller-genus knots."],
          [record(db[n], concordant_to=CONCORDANT_TO.get(n, "")) for n in eleven])


if __name__ == "__main__":
    main()
