#!/usr/bin/env python3
"""Sweep the built-in catalog and print one analysis block per entry.

Covers the invariants the library computes exactly: Betti profile, symplectic
and genuine-lcs witnesses, 4d classification, and the Hermitian label where
the entry ships a metric and an almost complex structure.
"""

import argparse
import json

from nilforms import (
    AlmostComplexStructure,
    InnerProduct,
    SearchConfig,
    betti_profile,
    classify_4d,
    classify_hermitian,
    find_lcs,
    find_symplectic,
    format_form,
    format_salamon,
    get_example,
    names,
)


def entry_report(name, height):
    entry = get_example(name)
    algebra = entry.algebra
    report = {
        "name": name,
        "salamon": format_salamon(algebra),
        "dim": algebra.dim,
        "betti": list(betti_profile(algebra)),
    }
    omega = find_symplectic(algebra)
    report["symplectic"] = format_form(omega) if omega is not None else None
    lcs = find_lcs(algebra, SearchConfig(height=height))
    report["lcs_status"] = lcs.genuine_status
    if lcs.genuine_witness is not None:
        w_omega, w_theta = lcs.genuine_witness
        report["lcs_witness"] = {
            "omega": format_form(w_omega), "theta": format_form(w_theta)}
    if algebra.dim == 4:
        cls = classify_4d(algebra)
        report["class"] = cls.label
        report["kahler_admissible"] = cls.kahler_admissible
    if entry.metric is not None and entry.acs is not None:
        hermitian = classify_hermitian(
            algebra, InnerProduct(entry.metric), AlmostComplexStructure(entry.acs))
        report["hermitian"] = {
            "label": hermitian.label,
            "flags": list(hermitian.flags),
            "lee": format_form(hermitian.lee),
        }
    return report


def print_text(report):
    print(f"== {report['name']}  {report['salamon']}")
    print(f"   betti {tuple(report['betti'])}")
    print(f"   symplectic: {report['symplectic'] or 'none (exhaustive)'}")
    line = f"   genuine lcs: {report['lcs_status']}"
    if "lcs_witness" in report:
        w = report["lcs_witness"]
        line += f"  omega = {w['omega']}, theta = {w['theta']}"
    print(line)
    if "class" in report:
        admissible = "yes" if report["kahler_admissible"] else "no"
        print(f"   class {report['class']}, Kahler admissible: {admissible}")
    if "hermitian" in report:
        h = report["hermitian"]
        print(f"   hermitian: {h['label']}  lee = {h['lee'] or '0'}")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--height", type=int, default=2,
                        help="lcs search height bound (default 2)")
    parser.add_argument("--json", action="store_true", dest="as_json")
    args = parser.parse_args(argv)

    reports = [entry_report(name, args.height) for name in names()]
    if args.as_json:
        print(json.dumps(reports, indent=2, sort_keys=True))
    else:
        for report in reports:
            print_text(report)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
