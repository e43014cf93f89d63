#!/usr/bin/env python3
"""Accuracy and honesty report for the numeric evaluator.

Compares the evaluator against independent references on families with
known closed forms, printing the true error next to the reported
estimate.  Useful when tuning cutoffs or the estimate safety factor.
"""

import math
import sys
import time

from imzv.mzvnum import eval_mzv, zeta_ref
from imzv.words import admissible_indices, dual, index_from_word, word_from_index


def main() -> int:
    print("depth-one values against the single-series reference:")
    for s in range(2, 9):
        r = eval_mzv((s,))
        err = abs(r.value - zeta_ref(s, 400))
        print(
            "  z(%d)      err=%.3e est=%.3e cutoff=%d honest=%s"
            % (s, err, r.error_estimate, r.cutoff_used, err <= r.error_estimate)
        )

    print("trailing-ones family z(2,1^k) = z(k+2):")
    for k in range(1, 7):
        r = eval_mzv((2,) + (1,) * k)
        err = abs(r.value - zeta_ref(k + 2, 400))
        print(
            "  k=%d       err=%.3e est=%.3e honest=%s"
            % (k, err, r.error_estimate, err <= r.error_estimate)
        )

    print("low-weight closed forms:")
    for parts, ref, label in [
        ((2, 1), zeta_ref(3, 400), "z(2,1)=z(3)"),
        ((3, 1), math.pi ** 4 / 360, "z(3,1)=pi^4/360"),
        ((2, 2), math.pi ** 4 / 120, "z(2,2)=pi^4/120"),
        ((2, 1, 1), math.pi ** 4 / 90, "z(2,1,1)=z(4)"),
    ]:
        r = eval_mzv(parts)
        err = abs(r.value - ref)
        print(
            "  %-16s err=%.3e est=%.3e honest=%s"
            % (label, err, r.error_estimate, err <= r.error_estimate)
        )

    print("duality spread over the weight<=8 envelope:")
    start = time.perf_counter()
    cache = {}
    worst = (0.0, None)
    for idx in admissible_indices(8):
        partner = index_from_word(dual(word_from_index(idx)))
        r1 = eval_mzv(idx, cache=cache)
        r2 = eval_mzv(partner, cache=cache)
        gap = abs(r1.value - r2.value)
        if gap > worst[0]:
            worst = (gap, (idx.parts, partner.parts))
    print(
        "  worst |z(idx)-z(dual)| = %.3e at %s ~ %s   (%.1fs)"
        % (worst[0], worst[1][0], worst[1][1], time.perf_counter() - start)
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
