"""One-off diagnostic: weight-structure comparison with/without normalization."""

import sys

sys.path.insert(0, "tests")

import numpy as np

import acceptance_runs as runs
from snncompress import cli
from snncompress.config import load_config


def probe(norm_mean: float, n_train: int) -> None:
    overrides = {
        **runs._base(0, "baseline"),
        "dataset.limit_train": str(n_train),
        "dataset.limit_test": "1000",
        "sim.weight_norm_mean": str(norm_mean),
    }
    config = load_config(None, overrides=overrides)
    net, labels, metrics = cli.run_training(config)
    w = net.synapses.weights
    sums = w.sum(axis=0)
    print(f"norm={norm_mean} n={n_train}: acc={metrics.accuracy:.4f} "
          f"test_spikes={metrics.total_test_exc_spikes}")
    print(f"  pinned at w_max: {(w >= net.stdp.w_max).mean():.4f}   "
          f"exact zeros: {(w == 0).mean():.4f}   frac > 0.3: {(w > 0.3).mean():.4f}")
    print(f"  col sums min/med/max: {sums.min():.1f}/{np.median(sums):.1f}/{sums.max():.1f}")
    print(f"  theta min/med/max: {net.theta.min():.2f}/{np.median(net.theta):.2f}/"
          f"{net.theta.max():.2f}")
    print(f"  labeled neurons: {(labels.labels >= 0).sum()}/{net.topology.n_exc}",
          flush=True)


if __name__ == "__main__":
    for arg in sys.argv[1:]:
        norm_text, n_text = arg.split(":")
        probe(float(norm_text), int(n_text))
