"""Fuzz Markov invariance of every invariant the toolkit computes.

Samples random braid words, applies random conjugations and stabilizations,
and confirms the HOMFLYPT polynomial, signature, determinant and reduced
Khovanov homology are unchanged.  Any counterexample is printed and the
script exits nonzero; silence means the engines agree with the moves.
"""

import argparse
import random
import sys

from knotbound.braid import BraidWord, conjugate, stabilize
from knotbound.homfly import homfly
from knotbound.khovanov import braid_to_pd, reduced_khovanov
from knotbound.seifert import determinant, signature


def sample_word(rng: random.Random, strands: int, max_len: int) -> BraidWord:
    gens = [g for g in range(1, strands)] + [-g for g in range(1, strands)]
    letters = [rng.choice(gens) for _ in range(rng.randint(1, max_len))]
    present = {abs(e) for e in letters}
    letters += [g for g in range(1, strands) if g not in present]
    rng.shuffle(letters)
    return BraidWord(strands, tuple(letters))


def invariants(w: BraidWord):
    return (
        homfly(w),
        signature(w),
        determinant(w),
        reduced_khovanov(braid_to_pd(w)),
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=40)
    parser.add_argument("--max-letters", type=int, default=7)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    failures = 0
    for trial in range(args.trials):
        n = rng.choice([2, 3])
        w = sample_word(rng, n, args.max_letters)
        base = invariants(w)
        gens = [g for g in range(1, n)] + [-g for g in range(1, n)]
        moved = conjugate(w, BraidWord(n, (rng.choice(gens),)))
        if {abs(e) for e in moved.letters} >= set(range(1, n)):
            if invariants(moved) != base:
                failures += 1
                print(f"conjugation broke invariance: {w.letters} -> {moved.letters}")
        ws = stabilize(w, rng.choice([1, -1]))
        if invariants(ws) != base:
            failures += 1
            print(f"stabilization broke invariance: {w.letters} -> {ws.letters}")
    print(f"{args.trials} trials, {failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
