#!/usr/bin/env python3
# Copyright 2026 The fdtsc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Fetch the archive datasets that ship inside python packages.

Only ItalyPowerDemand is bundled (sktime / aeon test data). It is converted
from the .ts format to `<root>/ItalyPowerDemand/ItalyPowerDemand_{TRAIN,TEST}.tsv`.
Everything else has to come from the archive itself.
"""

import argparse
import pathlib
import subprocess
import sys
import tempfile
import zipfile

DATASETS = ["ItalyPowerDemand"]
WHEELS = [("sktime", "sktime/datasets/data"), ("aeon", "aeon/datasets/data")]


def ts_to_tsv(text):
    rows = []
    in_data = False
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if not in_data:
            if line.lower() == "@data":
                in_data = True
            continue
        values, label = line.rsplit(":", 1)
        rows.append("\t".join([label] + values.split(",")))
    if not rows:
        raise ValueError("no @data rows")
    return "\n".join(rows) + "\n"


def find_wheel(wheel_dir, package):
    hits = sorted(pathlib.Path(wheel_dir).glob(package + "-*.whl"))
    return hits[-1] if hits else None


def download(package, dest):
    cmd = [sys.executable, "-m", "pip", "download", "--no-deps", "--only-binary=:all:", "-d", str(dest), package]
    subprocess.run(cmd, check=True, stdout=subprocess.DEVNULL)
    return find_wheel(dest, package)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--root", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    ap.add_argument("--wheel-dir", help="use wheels already downloaded here")
    args = ap.parse_args()

    root = pathlib.Path(args.root)
    with tempfile.TemporaryDirectory() as tmp:
        for package, prefix in WHEELS:
            wheel = find_wheel(args.wheel_dir, package) if args.wheel_dir else None
            if wheel is None:
                try:
                    wheel = download(package, tmp)
                except subprocess.CalledProcessError as e:
                    print(f"warning: pip download {package} failed: {e}", file=sys.stderr)
                    continue
            with zipfile.ZipFile(wheel) as z:
                names = set(z.namelist())
                for name in DATASETS:
                    for split in ("TRAIN", "TEST"):
                        member = f"{prefix}/{name}/{name}_{split}.ts"
                        if member not in names:
                            raise SystemExit(f"{wheel.name} lacks {member}")
                        out = root / name / f"{name}_{split}.tsv"
                        out.parent.mkdir(parents=True, exist_ok=True)
                        out.write_text(ts_to_tsv(z.read(member).decode("utf-8")))
                        print(f"wrote {out}")
            return 0
    print("error: no wheel with bundled datasets could be fetched", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
