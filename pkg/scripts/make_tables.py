"""Write decomposition tables for a range of n in every output format."""

import argparse
from pathlib import Path

from spindec import tables as T


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[12, 16, 20])
    ap.add_argument("--out", default="out/tables")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ext = {"text": "txt", "csv": "csv", "latex": "tex"}
    for n in args.n:
        table = T.build_table(n)
        for fmt in T.FORMATS:
            (out / f"n{n}.{ext[fmt]}").write_text(T.render(table, fmt), encoding="utf-8")
        try:
            mism = T.compare(table, T.bundled_reference(n))
            note = f"{len(mism)} mismatches against the bundled reference"
        except FileNotFoundError:
            note = "no bundled reference"
        print(f"n={n}: {len(table.rows)}x{len(table.cols)}, {note}")


if __name__ == "__main__":
    main()
