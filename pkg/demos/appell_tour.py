"""Walk through the Appell polynomial construction.

Run as `python3 demos/appell_tour.py`. Everything printed here is
exact rational arithmetic; no floats appear until the last section.
"""

from fractions import Fraction

from cliffex import (
    Multivector,
    Paravector,
    appell_polynomial,
    c_table,
    evaluate,
    paravector_power,
    text_form,
    vekua_residual,
)


def main():
    n = 3

    print("coefficient sequence c_k for n = %d:" % n)
    print("  ", [str(c) for c in c_table(n, 8)])
    print()

    print("the first few polynomials (A + B w form, w = x/|x|):")
    for k in range(5):
        print("  P_%d = %s" % (k, text_form(appell_polynomial(n, k))))
    print()

    # the derivative property that gives the family its name
    p4 = appell_polynomial(n, 4)
    p3 = appell_polynomial(n, 3)
    print("d/dx0 P_4 == 4 P_3:", p4.diff_x0() == p3 * 4)

    # each P_k sits in the kernel of the generalized Vekua pair
    first, second = vekua_residual(p4)
    print("Vekua residual of P_4 is zero:", first.is_zero and second.is_zero)
    print()

    # restricted to the real axis they are plain powers, and on pure
    # vectors they collapse to c_k x^k
    x = Paravector(Fraction(0), (Fraction(1), Fraction(2), Fraction(-2)))
    c4 = c_table(n, 4)[4]
    print("P_4 on the vector x = e1 + 2 e2 - 2 e3:")
    print("  evaluated:", evaluate(p4, x))
    print("  c_4 x^4  :", paravector_power(x, 4) * c4)
    print()

    # normalization: every P_k takes the value 1 at the point 1
    one = Paravector(Fraction(1), (Fraction(0),) * n)
    print(
        "P_k(1) == 1 for k <= 12:",
        all(
            evaluate(appell_polynomial(n, k), one) == Multivector.scalar(n, Fraction(1))
            for k in range(13)
        ),
    )

    # floats only as a spot check against the exact route
    approx = evaluate(p4, x, mode="float")
    exact = evaluate(p4, x)
    print("float evaluation agrees with exact:", abs(
        approx.scalar_part() - float(exact.scalar_part())
    ) < 1e-12)


if __name__ == "__main__":
    main()
