"""
Compare the triple algorithm with the exhaustive oracle on random small
instances and append every weight disagreement to the discrepancy log.
"""

import argparse
import pathlib
import sys

from dotenv import load_dotenv

# Ensure repo root is on sys.path when running directly
ROOT = pathlib.Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.logging_config import configure_logging  # noqa: E402
from reporting.file_log import FileDiscrepancyLog  # noqa: E402
from reporting.reporting_settings import ReportingSettings  # noqa: E402
from services.sweep import SweepBounds, run_triples_sweep  # noqa: E402


def run_sweep(argv=None) -> int:
    load_dotenv(dotenv_path=ROOT / ".env")
    configure_logging()

    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-vertices", type=int, default=5)
    parser.add_argument("--log", default=None, help="overrides MC1P_DISCREPANCY_LOG")
    args = parser.parse_args(argv)

    log = FileDiscrepancyLog(ReportingSettings(), path=args.log)
    log.touch()
    summary = run_triples_sweep(
        args.count, seed=args.seed, log=log, bounds=SweepBounds(max_vertices=args.max_vertices)
    )
    print(
        f"examined={summary.examined} skipped={summary.skipped} "
        f"discrepancies={len(summary.discrepancies)} log={log.path}"
    )
    return 0


if __name__ == "__main__":
    sys.exit(run_sweep())
