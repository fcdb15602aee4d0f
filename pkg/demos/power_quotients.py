#!/usr/bin/env python3
"""Largeness of free groups modulo q-th powers, by pure arithmetic.

Killing k random q-th powers in a free group of rank r keeps the quotient
large whenever some prime power p^l exactly dividing q satisfies
p^l > k/(r-1): the quotient presentation then has p-deficiency above one.
The criterion is checked here against the deficiency computed directly.
"""

from pdef import Presentation, p_deficiency, power_quotient_largeness, reduce, word_power


def main():
    for r, k, q in [(2, 3, 8), (2, 2, 2), (3, 1, 2), (2, 5, 9), (2, 12, 12)]:
        cert = power_quotient_largeness(r, k, q)
        if cert.kind == "PowerQuotientLarge":
            print(f"rank {r}, {k} words, exponent {q}: large via p = {cert.parameters['p']} "
                  f"(deficiency bound {cert.witness['bound']})")
        else:
            print(f"rank {r}, {k} words, exponent {q}: inconclusive")

    # cross-check one instance against a concrete presentation
    r, k, q = 2, 3, 8
    words = [reduce([1]), reduce([2]), reduce([1, 2])]
    P = Presentation(("x1", "x2"), tuple(word_power(w, q) for w in words))
    print(f"\ndirect check at (r={r}, k={k}, q={q}): def_2 = {p_deficiency(P, 2).value}")


if __name__ == "__main__":
    main()
