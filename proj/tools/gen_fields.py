#!/usr/bin/env python3
"""Regenerate data/fields.txt and its detached SHA-256 digest.

Needs PARI/GP >= 2.15 through the `cypari` wheel (pip install cypari).
Lists every totally real field of degree 2, 3, 4 with |D| <= 1000 via
nflist, reduces the defining polynomial with polredabs, and records the
class number from bnfinit, certified unconditionally with bnfcertify.
"""

import argparse
import hashlib
import math
import pathlib

from cypari import pari

MAX_DISC = 1000
GROUPS = {2: ["C2"], 3: ["C3", "S3"], 4: ["C4", "V4", "D4", "A4", "S4"]}
HEADER = "hypeuler-fields v1"


def primitive_root(m):
    units = [a for a in range(1, m) if math.gcd(a, m) == 1]
    phi = len(units)
    for g in units[1:]:
        if len({pow(g, k, m) for k in range(phi)}) == phi:
            return g
    raise ValueError(f"(Z/{m})^x is not cyclic")


def canonical(text):
    out = []
    for line in text.split("\n"):
        line = line.rstrip(" \t\r")
        if not line or (line.startswith("#") and not line.startswith("#@")):
            continue
        out.append(line + "\n")
    return "".join(out)


def fields():
    pari.allocatemem(2 * 10**9)
    rows = []
    for degree, groups in GROUPS.items():
        for group in groups:
            for pol in pari(f'nflist("{group}", [1, {MAX_DISC}], 0)'):
                pol = pari.polredabs(pol)
                bnf = pari.bnfinit(pol, 1)
                if pari.bnfcertify(bnf) != 1:
                    raise RuntimeError(f"class group of {pol} not certified")
                disc = int(pari("(b) -> b.disc")(bnf))
                h = int(pari("(b) -> b.no")(bnf))
                rows.append((degree, disc, group, h, str(pol)))
    rows.sort()
    return rows


def render(rows):
    lines = [
        HEADER,
        "# Totally real number fields of degree 2..4 with |D| <= 1000.",
        "# label|degree|disc|h|totally_real|abelian|conductor|char_gen",
        "# char_gen = generator:exponent:order of a generating Dirichlet character",
        "#@ source PARI/GP 2.15.4 nflist + polredabs + bnfinit/bnfcertify (tools/gen_fields.py)",
    ]
    for degree in GROUPS:
        lines.append(f"#@ completeness {degree} {MAX_DISC}")
    seen = {}
    for degree, disc, group, h, pol in rows:
        seen[(degree, disc)] = seen.get((degree, disc), 0) + 1
        label = f"{degree}.{degree}.{disc}.{seen[(degree, disc)]}"
        abelian = group in ("C2", "C3", "C4", "V4")
        conductor = "-"
        char_gen = "-"
        if group == "C2":
            conductor = str(disc)
        elif group == "C3":
            f = math.isqrt(disc)
            conductor = str(f)
            char_gen = f"{primitive_root(f)}:1:3"
        elif abelian:
            raise RuntimeError(f"abelian quartic {pol} needs character data")
        lines.append(f"# {label}: {pol}")
        lines.append(f"{label}|{degree}|{disc}|{h}|true|{'true' if abelian else 'false'}|{conductor}|{char_gen}")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "fields.txt"))
    args = ap.parse_args()
    text = render(fields())
    out = pathlib.Path(args.out)
    out.write_text(text, encoding="utf-8")
    digest = hashlib.sha256(canonical(text).encode("utf-8")).hexdigest()
    pathlib.Path(str(out) + ".sha256").write_text(digest + "\n", encoding="utf-8")
    print(f"wrote {out} ({digest})")


if __name__ == "__main__":
    main()
