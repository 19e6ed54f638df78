"""
Classical optimizers on one MAX-2-SAT instance
===============================================

Runs every baseline from the same start in the noisy environment and
reports gain and distance to the optimum. The meta-learner is trained
briefly here; the benchmark uses a longer schedule.
"""

import numpy as np

from qmetaopt.ansatz import build_ansatz
from qmetaopt.harness import distance, gain, train_model
from qmetaopt.optimizers import (
    EsConfig,
    Objective,
    run_bayesian,
    run_evolutionary,
    run_lbfgsb,
    run_nelder_mead,
)
from qmetaopt.metalearner import meta_optimize
from qmetaopt.problems import MAX2SAT, exact_bounds, generate, hamiltonian
from qmetaopt.simulator import EnvironmentConfig

inst = generate(MAX2SAT, np.random.default_rng(11))
circuit = build_ansatz(inst)
h = hamiltonian(inst)
f_min, f_max = exact_bounds(inst)
x0 = np.random.default_rng(12).uniform(-np.pi / 2, np.pi / 2, circuit.n_params)


def objective(seed):
    return Objective.from_circuit(circuit, h, EnvironmentConfig("noisy", seed=seed))


print("training a meta-learner on 40 noisy MAX-2-SAT instances ...")
model = train_model(MAX2SAT, "noisy", seed=1, n_problems=40)

runs = {
    "L-BFGS-B": run_lbfgsb(objective(1), x0, 1000),
    "Nelder-Mead": run_nelder_mead(objective(2), x0, 1000),
    "Bayesian": run_bayesian(objective(3), 100, seed=3),
    "evolutionary": run_evolutionary(objective(4), EsConfig(), 100, seed=4),
    "meta-learner": meta_optimize(model, objective(5), x0, 100),
}
print(f"optimum {f_min}, worst {f_max}")
for name, rec in runs.items():
    print(f"{name:>13}: f_I {rec.f_I:+.3f}  f_F {rec.f_F:+.3f}  "
          f"gain {gain(rec.f_I, rec.f_F, f_min):+.3f}  "
          f"distance {distance(rec.f_F, f_min, f_max):5.1f}%  "
          f"energy evals {rec.trace[-1].energy_evals}  ({rec.terminated_reason})")
