"""Series extensions: when do the two constructions agree?

Run as `python3 demos/series_tour.py`. Shows the coefficient
recurrence test on a few power series, the closed-form solution of the
recurrence, and its hypergeometric evaluation.
"""

import json
from fractions import Fraction

from cliffex import (
    ClassParameters,
    closed_form_eval,
    compare_extensions,
    exp_decomposition_check,
    exp_params,
    get_series,
    iterate_recurrence,
    recurrence_check,
    solve_recurrence,
    solve_recurrence_shifted,
)


def main():
    n = 3

    # the positive cases: exp, sinh, cosh all satisfy the coefficient
    # recurrence with gamma = 1, so their two extensions coincide
    for name in ("exp", "sinh", "cosh"):
        rec = recurrence_check(n, get_series(name), 20)
        print("%-5s holds=%s gamma=%s" % (name, rec.holds, rec.gamma))
    print()

    # the negative case: the geometric series anchors gamma = 2 at
    # k = 0 and then breaks immediately
    rec = recurrence_check(n, get_series("geometric"), 20)
    k, lhs, rhs = rec.first_violation
    print("geometric holds=%s, first violation at k=%d: a_%d = %s, needs %s"
          % (rec.holds, k, k + n - 1, lhs, rhs))

    report = compare_extensions(n, get_series("geometric"), 6)
    print("comparison report for the geometric series:")
    print(json.dumps(report.to_json_dict(), indent=2))
    print()

    # the recurrence class is closed-form solvable; check the formula
    # against direct iteration on an arbitrary parameter choice
    params = ClassParameters(n, Fraction(-3, 7), (Fraction(2), Fraction(1, 3)))
    solved = solve_recurrence(params, 12)
    stepped = iterate_recurrence(params, 12)
    print("closed-form solution == direct iteration:", solved == stepped)

    # the variant with the shifted factorial in the denominator keeps
    # the initial block but already misses the next one
    shifted = solve_recurrence_shifted(params, 12)
    print("shifted variant first disagreement at index:",
          next(i for i, (a, b) in enumerate(zip(solved, shifted)) if a != b))
    print()

    # evaluation route: each residue class contributes one
    # hypergeometric factor; for exp parameters the sum is exp itself
    ep = exp_params(n)
    print("closed form at z = 1 (exp parameters): %.15g" % closed_form_eval(ep, 1))
    outcome = exp_decomposition_check(n, Fraction(1, 2))
    print("decomposition error at z = 1/2: %.3g (tolerance %g)"
          % (outcome.error, outcome.tolerance))


if __name__ == "__main__":
    main()
