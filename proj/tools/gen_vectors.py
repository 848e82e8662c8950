#!/usr/bin/env python3
"""Independent reference values for the SHAKE256-based primitives.

Writes tests/data/vectors.txt. Each line is whitespace separated:

  hash  <tag> <out_bits> <field>,<field>,... <digest bits>   ('-' = no fields, '.' = empty field)
  seed  <master> <index> <derived>
  name  <k> <name> <identity bits>
  text  <text> <u32>
"""
import hashlib
import random
import struct
import sys
from pathlib import Path


def bits_to_bytes(bits):
    out = bytearray((len(bits) + 7) // 8)
    for i, b in enumerate(bits):
        if b == "1":
            out[i // 8] |= 0x80 >> (i % 8)
    return bytes(out)


def shake_bits(data, n):
    digest = hashlib.shake_256(data).digest((n + 7) // 8)
    return "".join(f"{byte:08b}" for byte in digest)[:n]


def tagged(tag, fields, n):
    data = bytes([tag])
    for f in fields:
        data += struct.pack(">I", len(f)) + bits_to_bytes(f)
    return shake_bits(data, n)


def main():
    rng = random.Random(20240611)
    lines = []
    fixed = [
        (1, 64, []),
        (1, 64, [""]),
        (1, 64, ["", ""]),
        (2, 16, ["1"]),
        (2, 16, ["10"]),
        (2, 16, ["1", "0"]),
        (3, 32, ["0" * 8]),
        (3, 32, ["0" * 9]),
    ]
    for tag, n, fields in fixed:
        lines.append((tag, n, fields))
    for _ in range(40):
        tag = rng.choice([1, 2, 3])
        n = rng.choice([16, 32, 48, 64, 80, 13, 1])
        fields = ["".join(rng.choice("01") for _ in range(rng.randint(0, 90)))
                  for _ in range(rng.randint(1, 4))]
        lines.append((tag, n, fields))

    out = []
    for tag, n, fields in lines:
        enc = ",".join(f if f else "." for f in fields) if fields else "-"
        out.append(f"hash {tag} {n} {enc} {tagged(tag, fields, n)}")

    for master, index in [(0, 0), (0, 1), (7, 0), (7, 1), (7, 2), (2**64 - 1, 12345)]:
        data = b"\x00" + struct.pack(">QQ", master, index)
        out.append(f"seed {master} {index} {int(shake_bits(data, 64), 2)}")

    for name in ["alice", "bob", "arbitrator", "payer", "payee", "bank"]:
        for k in (16, 5):
            ident = shake_bits(b"\x10" + name.encode(), k)
            out.append(f"name {k} {name} {ident}")

    for text in ["alice", "bob", "rent", "invoice-42"]:
        value = int(shake_bits(b"\x20" + text.encode(), 32), 2)
        out.append(f"text {text} {value}")

    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests/data/vectors.txt"
    target.write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
