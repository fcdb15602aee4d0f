#!/usr/bin/env python3
"""Words, maximal roots, and exact p-deficiency of a few presentations."""

from pdef import nu_p, p_deficiency, parse_presentation, parse_word, primitive_root

DINF = """\
gens: x1, x2
rel: x1^2
rel: x2^2
"""

TRIANGLE = """\
gens: x, y, z
rel: x^3
rel: y^3
rel: z^3
rel: (x*y)^3
rel: (x*z)^3
rel: (y*z)^3
"""


def main():
    w = parse_word("y*x*x*y^-1", ("x", "y"))
    d = primitive_root(w)
    print(f"y x x y^-1 has maximal root exponent {d.exponent}; nu_2 = {nu_p(w, 2)}")

    for name, text, p in (("infinite dihedral", DINF, 2), ("triangle powers", TRIANGLE, 3)):
        P = parse_presentation(text)
        report = p_deficiency(P, p)
        print(f"\n{name}: def_{p} = {report.value}")
        for idx, nu, contrib in report.per_relator:
            print(f"  relator {idx + 1}: nu = {nu}, contributes {contrib}")

    # a presentation with 2-deficiency above one, hence certifiably large
    P = parse_presentation("gens: x, y\nrel: x^2")
    print(f"\none relator x^2 on two generators: def_2 = {p_deficiency(P, 2).value} > 1")


if __name__ == "__main__":
    main()
