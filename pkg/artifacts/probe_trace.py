"""One-off probe: accuracy impact of accumulating presynaptic traces.

Run with the kernel's trace update temporarily switched to `+=`; compares
normalization/theta-offset combinations on a 5k-train quick run.
"""

import sys
import time

sys.path.insert(0, "tests")

import numpy as np

from snncompress import cli
from acceptance_runs import _base


def probe(norm, theta_init, n_train):
    overrides = _base(0, "baseline")
    overrides["dataset.limit_train"] = n_train
    overrides["dataset.limit_test"] = 2000
    overrides["sim.weight_norm_mean"] = norm
    overrides["lif_exc.theta_init"] = theta_init
    from snncompress.config import load_config

    config = load_config(None, overrides)
    t0 = time.time()
    net, labels, metrics = cli.run_training(config)
    w = net.synapses.weights
    sums = w.sum(axis=0)
    print(
        f"norm={norm} theta={theta_init} n={n_train}: "
        f"acc={metrics.accuracy:.4f} spikes={metrics.total_test_exc_spikes} "
        f"zeros={np.mean(w == 0):.2f} big={np.mean(w > 0.3):.3f} "
        f"colsum={np.median(sums):.1f} theta_med={np.median(net.theta):.1f} "
        f"[{time.time() - t0:.0f}s]",
        flush=True,
    )


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 5000
    probe(0.1, 20.0, n)   # full adopted-model configuration
    probe(0.0, 0.0, n)    # accumulation only, plain otherwise
    probe(0.1, 0.0, n)    # accumulation + normalization, plain threshold
