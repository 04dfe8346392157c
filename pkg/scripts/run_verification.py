"""Run the verification battery and save the line-oriented report."""

import argparse
import dataclasses
import time
from pathlib import Path

from spindec import verify as V


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", nargs="*", default=list(V.SUITES), choices=list(V.SUITES))
    ap.add_argument("--scale", type=float, default=1.0,
                    help="multiply every size bound (except the expansion count) by this factor")
    ap.add_argument("--out", default="out/verification.txt")
    args = ap.parse_args()

    cfg = V.VerifyConfig()
    if args.scale != 1.0:
        cfg = dataclasses.replace(cfg, **{
            f.name: max(8, int(getattr(cfg, f.name) * args.scale))
            for f in dataclasses.fields(cfg) if f.name != "expansion_count"
        })
    lines, failed = [], 0
    for name in args.suite:
        t0 = time.perf_counter()
        rep = V.SUITES[name](cfg)
        secs = time.perf_counter() - t0
        lines += rep.lines()
        failed += not rep.ok
        print(f"{name:18s} {'ok' if rep.ok else 'FAILED':6s} {rep.checked:>12d} checked  {secs:7.2f}s", flush=True)
    path = Path(args.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"report written to {path}; {failed} suite(s) failed")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
