"""Run the randomized identity suites and write one JSON report per suite.

    python3 scripts/run_verification.py [--samples 200] [--seed 7] [--out results]
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from g3hyp.verify import SUITES, run_suite


@dataclass
class VerificationConfig:
    samples: int = 200
    seed: int = 7
    out: Path = Path("results")
    suites: tuple = tuple(SUITES)


def main(cfg: VerificationConfig) -> int:
    cfg.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in cfg.suites:
        t = time.perf_counter()
        report = run_suite(name, cfg.samples, cfg.seed)
        secs = time.perf_counter() - t
        (cfg.out / f"{name}.json").write_text(json.dumps(report, indent=2) + "\n")
        status = "pass" if report["passed"] else "FAIL"
        failed += not report["passed"]
        print(f"{name:<13} {status}  {cfg.samples} samples  {secs:6.1f}s")
        for ident in report["identities"]:
            print(f"    {ident['identity']}: {ident['checked']} checked, {ident['skipped']} skipped")
    return 1 if failed else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=VerificationConfig.samples)
    ap.add_argument("--seed", type=int, default=VerificationConfig.seed)
    ap.add_argument("--out", type=Path, default=VerificationConfig.out)
    args = ap.parse_args()
    raise SystemExit(main(VerificationConfig(args.samples, args.seed, args.out)))
