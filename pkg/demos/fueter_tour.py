"""Follow one monomial through the Fueter-Sce construction.

Run as `python3 demos/fueter_tour.py`.
"""

from cliffex import (
    alpha_monomial,
    appell_polynomial,
    beta,
    fueter_sce_monomial,
    monomial_split,
    text_form,
)


def main():
    n = 3
    k = 4

    # step 1: split (x0 + iy)^k into real and imaginary parts, read as
    # polynomials in x0 and r
    split = monomial_split(k)
    print("z^%d splits into" % k)
    print("  u =", text_form_pair(split.u))
    print("  v =", text_form_pair(split.v))
    print()

    # step 2: the radial lowering pass. On a pure power of r it has the
    # closed form tabulated by beta; a couple of sample values:
    for j in (2, 3, 4):
        term = beta(n, j)
        if term.is_zero:
            print("  beta(%d, %d) = 0" % (n, j))
        else:
            power = {0: "", 1: " r"}.get(term.r_exponent, " r^%d" % term.r_exponent)
            print("  beta(%d, %d) = %s%s" % (n, j, term.coefficient, power))
    print()

    # step 3: the full transform, raw and normalized
    raw = fueter_sce_monomial(n, k, normalized=False)
    print("raw tau_%d[z^%d]      :" % (n, k), text_form(raw))
    print("normalization factor:", alpha_monomial(n, k))
    normalized = fueter_sce_monomial(n, k)
    print("normalized          :", text_form(normalized))
    print()

    # the normalized transform of z^(k) is the Appell polynomial of
    # degree k - n + 1, here degree 2
    print(
        "matches P_%d exactly:" % (k - n + 1),
        normalized == appell_polynomial(n, k - n + 1),
    )
    print()

    # below the threshold degree n - 1 the transform annihilates
    for low in range(n - 1):
        print(
            "tau_%d[z^%d] vanishes:" % (n, low),
            fueter_sce_monomial(n, low).is_zero,
        )


def text_form_pair(poly):
    # BivariatePoly is one half of an axial pair; small ad-hoc printer
    out = ""
    for (i, j), c in sorted(poly.terms(), key=lambda t: (-t[0][0], -t[0][1])):
        piece = []
        if abs(c) != 1 or (i == 0 and j == 0):
            piece.append(str(abs(c)))
        if i:
            piece.append("x0" if i == 1 else "x0^%d" % i)
        if j:
            piece.append("r" if j == 1 else "r^%d" % j)
        body = " ".join(piece)
        if not out:
            out = body if c > 0 else "-" + body
        else:
            out += (" + " if c > 0 else " - ") + body
    return out or "0"


if __name__ == "__main__":
    main()
