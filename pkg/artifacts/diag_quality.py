"""One-off diagnostic: where does the plain baseline lose accuracy?"""

import sys

sys.path.insert(0, "tests")

import numpy as np

import acceptance_runs as runs
from snncompress import cli
from snncompress.config import load_config
from snncompress.encoding import load_idx
from snncompress.pipeline import SimParams, _present


def main(n_train: int, norm: str, theta_init: str) -> None:
    overrides = {
        **runs._base(0, "baseline"),
        "dataset.limit_train": str(n_train),
        "dataset.limit_test": "2000",
        "sim.weight_norm_mean": norm,
        "lif_exc.theta_init": theta_init,
    }
    config = load_config(None, overrides=overrides)
    net, labels, metrics = cli.run_training(config)
    print(f"n={n_train} norm={norm} theta_init={theta_init}: "
          f"acc={metrics.accuracy:.4f}", flush=True)

    # neuron labels per class
    hist = np.bincount(labels.labels[labels.labels >= 0], minlength=10)
    print(f"  neurons per class: {hist.tolist()}  unassigned: {(labels.labels < 0).sum()}")

    # template quality: correlation of each neuron's weights with its class mean image
    train_images, train_labels = load_idx(
        config.dataset.train_images, config.dataset.train_labels
    )
    train_images = train_images[:n_train]
    train_labels = train_labels[:n_train]
    flat = train_images.reshape(len(train_images), -1).astype(np.float64)
    class_means = np.stack([flat[train_labels == c].mean(axis=0) for c in range(10)])
    corrs = []
    for j in range(net.topology.n_exc):
        c = labels.labels[j]
        if c < 0:
            continue
        w = net.synapses.weights[:, j]
        m = class_means[c]
        denom = w.std() * m.std()
        corrs.append(float(np.corrcoef(w, m)[0, 1]) if denom > 0 else 0.0)
    corrs = np.array(corrs)
    print(f"  template corr min/med/max: {corrs.min():.3f}/"
          f"{np.median(corrs):.3f}/{corrs.max():.3f}  frac<0.3: {(corrs < 0.3).mean():.3f}")

    # evidence per test vote: counted-window spikes vs correctness
    test_images, test_labels = load_idx(
        config.dataset.test_images, config.dataset.test_labels
    )
    test_images = test_images[:2000]
    test_labels = test_labels[:2000]
    sim = config.sim
    counted = np.zeros(len(test_images))
    preds = np.zeros(len(test_images), dtype=np.int64)
    from snncompress.pipeline import predict_from_counts
    for k, img in enumerate(test_images):
        result, _, _ = _present(net, img, sim, learning=False)
        counted[k] = result.total_exc_spikes
        preds[k], _ = predict_from_counts(result.exc_spike_counts, labels)
    correct = preds == test_labels
    print(f"  counted spikes/img mean={counted.mean():.1f} med={np.median(counted):.0f}")
    for lo, hi in ((0, 6), (6, 11), (11, 21), (21, 1000)):
        m = (counted >= lo) & (counted < hi)
        if m.any():
            print(f"    spikes in [{lo},{hi}): n={m.sum():4d} acc={correct[m].mean():.3f}")

    confusion = np.zeros((10, 10), dtype=np.int64)
    np.add.at(confusion, (test_labels, preds), 1)
    np.fill_diagonal(confusion, 0)
    worst = np.argsort(confusion.ravel())[::-1][:8]
    pairs = [(int(i // 10), int(i % 10), int(confusion.ravel()[i])) for i in worst]
    print(f"  worst true->pred pairs: {pairs}")
    per_class = [
        f"{c}:{correct[test_labels == c].mean():.2f}" for c in range(10)
    ]
    print(f"  per-class acc: {' '.join(per_class)}", flush=True)


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 10000
    norm = sys.argv[2] if len(sys.argv) > 2 else "0"
    theta_init = sys.argv[3] if len(sys.argv) > 3 else "0"
    main(n, norm, theta_init)
