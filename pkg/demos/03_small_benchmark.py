"""
A small end-to-end benchmark
=============================

Generates instances, trains a model, runs a reduced protocol and writes
the CSV summaries, mirroring what the ``qmetaopt`` command line does.
"""

import csv
import tempfile
from pathlib import Path

from qmetaopt.harness import BenchmarkConfig, report, run_benchmark, train_model

out = Path(tempfile.mkdtemp(prefix="qmetaopt-demo-"))
model = train_model("graph_bisection", "wavefunction", seed=0, n_problems=30)
model.save(out / "model.json")

cfg = BenchmarkConfig("graph_bisection", "wavefunction", n_instances=3, n_inits=2, budget=50,
                      output_dir=str(out / "results"), model_path=str(out / "model.json"))
result = run_benchmark(cfg)
report(cfg.output_dir)

for opt, (near, total) in sorted(result.bubbles.items()):
    mean, err = result.curves[opt]
    print(f"{opt:>13}: gain at {cfg.budget} = {mean[-1]:.3f} +- {err[-1]:.3f}, "
          f"near-optimal {near}/{total}")

with open(out / "results" / "bubbles.csv") as fh:
    print(fh.read())
print(f"run files and CSVs are in {out}")
