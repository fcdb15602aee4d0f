#!/usr/bin/env python3
"""Coset enumeration: tables, permutation actions, and subgroup rewriting."""

from pdef import (
    parse_presentation,
    parse_word,
    permutation_action,
    print_presentation,
    reidemeister_schreier,
    schreier_transversal,
    tietze_simplify,
    todd_coxeter,
)


def main():
    S3 = parse_presentation("gens: a, b\nrel: a^2\nrel: b^2\nrel: (a*b)^3")
    T = todd_coxeter(S3, [])
    print("two involutions with (ab)^3 = 1, trivial subgroup:")
    print(T.dump())
    print("generator actions:", permutation_action(T))

    D = parse_presentation("gens: x1, x2\nrel: x1^2\nrel: x2^2")
    w = parse_word("x1*x2", D.generator_names)
    T = todd_coxeter(D, [w])
    print(f"\ninfinite dihedral mod <x1 x2>: {T.n_cosets} cosets")
    print("transversal:", [list(r.letters) for r in schreier_transversal(T)])
    H = reidemeister_schreier(D, T)
    print("rewritten subgroup presentation:")
    print(print_presentation(H), end="")
    print("simplified:")
    print(print_presentation(tietze_simplify(H)), end="")


if __name__ == "__main__":
    main()
