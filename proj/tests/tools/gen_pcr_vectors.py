#!/usr/bin/env python3
"""Generates tests/data/pcr_vectors.txt: expected PCR banks for 100 random
extend sequences, computed with hashlib so the values are independent of the
C++ hashing and TPM code under test.

Sequence derivation is fixed and replayed identically by the C++ test:
case i uses the deterministic stream  block[j] = SHA256(seed_be8 || j_be8)
with seed = 1000 + i, alg = sha1 for even i else sha256, and draws
  length      = 1 + next_u64 % 20
  per step:     index = next_u64 % 24; mlen = 1 + next_u64 % 32;
                measurement = next_bytes(mlen)
where next_u64 reads 8 stream bytes big-endian. Registers start as all-zero
digests and extend as  pcr[index] = H(pcr[index] || measurement).

Record format, one case per line:
  <case>, <alg>, <seed>, <index>:<final_hex> <index>:<final_hex> ...
"""

import hashlib
import struct

OUT = "tests/data/pcr_vectors.txt"


class Stream:
    def __init__(self, seed: int):
        self.seed = seed
        self.pos = 0

    def next_bytes(self, n: int) -> bytes:
        out = b""
        while len(out) < n:
            block = hashlib.sha256(struct.pack(">QQ", self.seed, self.pos // 32)).digest()
            take = min(n - len(out), 32 - self.pos % 32)
            out += block[self.pos % 32 : self.pos % 32 + take]
            self.pos += take
        return out

    def next_u64(self) -> int:
        return int.from_bytes(self.next_bytes(8), "big")


def main() -> None:
    lines = [
        "# PCR extend chains computed with hashlib (independent of the library",
        "# under test). Generated by tests/tools/gen_pcr_vectors.py and frozen.",
    ]
    for case in range(100):
        seed = 1000 + case
        alg = "sha1" if case % 2 == 0 else "sha256"
        h = hashlib.sha1 if alg == "sha1" else hashlib.sha256
        dlen = 20 if alg == "sha1" else 32
        rng = Stream(seed)
        bank = [b"\x00" * dlen for _ in range(24)]
        touched = set()
        length = 1 + rng.next_u64() % 20
        for _ in range(length):
            index = rng.next_u64() % 24
            mlen = 1 + rng.next_u64() % 32
            measurement = rng.next_bytes(mlen)
            bank[index] = h(bank[index] + measurement).digest()
            touched.add(index)
        regs = " ".join(f"{i}:{bank[i].hex()}" for i in sorted(touched))
        lines.append(f"{case}, {alg}, {seed}, {regs}")
    with open(OUT, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
