"""Follow-up probe: accumulate + theta offset without normalization."""

import sys

sys.path.insert(0, "tests")
sys.path.insert(0, "artifacts")

from probe_trace import probe

if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 5000
    probe(0.0, 20.0, n)
