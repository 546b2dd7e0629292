"""Seeded malformed-input generator shared by the parser tests."""

from pathlib import Path

import numpy as np

CIRCUITS = sorted((Path(__file__).parent.parent / "circuits").glob("*.fqc"))
TOKENS = ["qubits", "h", "cx", "ccx", "qft", "iqft2", "swap", "!", "0", "1", "2", "3", "12",
          "99", "-1", "#", "\n", " ", "\t", "x", "peres", "\x00", "é", "!!1", "1e3"]


def fuzz_inputs(seed: int, count: int):
    """Random bytes, random token soup, and byte-mutated shipped files, in rotation."""
    rng = np.random.default_rng(seed)
    valid = [p.read_bytes() for p in CIRCUITS]
    for k in range(count):
        mode = k % 3
        if mode == 0:
            yield rng.bytes(int(rng.integers(0, 80)))
        elif mode == 1:
            yield " ".join(rng.choice(TOKENS, size=int(rng.integers(0, 30)))).encode("utf-8")
        else:
            src = bytearray(valid[int(rng.integers(len(valid)))])
            for _ in range(int(rng.integers(1, 5))):
                src[int(rng.integers(len(src)))] = int(rng.integers(0, 256))
            yield bytes(src)
