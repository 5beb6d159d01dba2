#!/usr/bin/env python3
"""Successor towers and exact expansion counting.

Each successor embeds its graph into the next one; the new vertices always
form a single cycle of doubled length.  Separately, points with exactly m
expansions are constructed for any m and verified by exhaustive search over
exact remainders.
"""

from univoque import (build_witness_xm, count_expansions, new_base_context,
                      tower_decompose)
from univoque.digits import format_seq, format_word, parse_seq
from univoque.expansions import default_tail

base = new_base_context(3, "331(0)")
dec = tower_decompose(base, 3)
print("tower over beta=331(0):")
for level, (path, word) in enumerate(dec.cycles, start=1):
    print(f"  level {level}: {len(path):2d}-cycle, label word {format_word(word)}")
print(f"  residual embedded vertices: {len(dec.residual)}")

print()
trib = new_base_context(1, "111(0)")
tail = default_tail(trib)
print(f"witness tail for beta=111(0): {format_seq(tail)}")
for m in (1, 2, 3, 4):
    x, expansions = build_witness_xm(trib, m, tail)
    res = count_expansions(trib, x)
    print(f"  m={m}: point ~ {x.decimal(10)} has exactly {res.count} expansions")
    for e in expansions:
        print(f"       {format_seq(e)}")

print()
q2 = new_base_context(2, "2(0)")
one = q2.value(parse_seq("(1)"))
print(f"integer base M=2, q=2: count(1) = {count_expansions(q2, one).kind}")
