"""Rewrite golden/<name>.json from the current `eliminate --format json` output."""

import subprocess
import sys
from pathlib import Path

import yaml

HERE = Path(__file__).parent


def main() -> int:
    expected = yaml.safe_load((HERE / "expected_exit_codes.yaml").read_text())
    out_dir = HERE / "golden"
    out_dir.mkdir(exist_ok=True)
    bad = 0
    for name, code in expected.items():
        proc = subprocess.run(
            [sys.executable, "-m", "elimcycle", "eliminate", str(HERE / name), "--format", "json"],
            capture_output=True, text=True,
        )
        if proc.returncode != code:
            print(f"{name}: exit {proc.returncode}, expected {code}")
            bad += 1
        (out_dir / name.replace(".yaml", ".json")).write_text(proc.stdout)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
