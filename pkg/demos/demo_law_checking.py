#!/usr/bin/env python3
"""Walkthrough: randomized law suites for monoids and morphisms.

Checks the algebra that makes parallel matching correct, then shows what
a failing suite looks like by feeding it a deliberately broken monoid.
"""

import random

from parmatch import (
    ByteText,
    MonoidOps,
    check_monoid_laws,
    check_morphism,
    chunkable_ops,
    matcher_ops,
    to_sm,
    to_sm_witness,
)

rng = random.Random(7)


def random_text():
    return ByteText(bytes(rng.choice(b"ab") for _ in range(rng.randrange(64))))


print("== byte strings under concatenation ==")
print(check_monoid_laws(chunkable_ops(), random_text, trials=500).to_text())

target = ByteText(b"aba")
print("\n== string matchers under index-stitching append ==")
print(
    check_monoid_laws(
        matcher_ops(target), lambda: to_sm(random_text(), target), trials=500
    ).to_text()
)

print("\n== matching as a morphism from strings to matchers ==")
print(check_morphism(to_sm_witness(target), random_text, trials=500).to_text())

print("\n== a broken 'monoid' (combine keeps only the left operand) ==")
broken = MonoidOps(identity=ByteText, combine=lambda x, y: x)
report = check_monoid_laws(broken, random_text, trials=500)
print(report.to_text())
print(f"\nreport.ok = {report.ok}")
print("\nJSON form of the failing report:")
print(report.to_json())
