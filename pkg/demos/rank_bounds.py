#!/usr/bin/env python3
"""Abelianization rank bounds for normal subgroups from relator roots.

When every relator is a maximal power u^r whose root survives to order r
in the coset action, the subgroup's abelianization rank is at least
1 + N(n - 1 - sum 1/r_j).  The certificate stores both the bound and the
measured invariants, so the inequality can be rechecked independently.
"""

from pdef import allcock_rank_bound, low_index_normal, parse_presentation


def show(text, p_label, max_index):
    P = parse_presentation(text)
    print(f"\n{p_label}")
    for rec in low_index_normal(P, max_index):
        cert = allcock_rank_bound(P, rec)
        if cert.kind == "AllcockBound":
            inv = cert.witness["abelian_invariants"]
            print(
                f"  index {rec.index}: bound {cert.witness['bound']}, "
                f"measured rank {inv['rank']} (torsion {inv['torsion']})"
            )
        else:
            print(f"  index {rec.index}: hypothesis fails, no bound")


def main():
    show("gens: x1, x2\nrel: x1^2\nrel: x2^2", "infinite dihedral, subgroups to index 4:", 4)
    show("gens: x, y\nrel: x^3", "free product Z/3 * Z, subgroups to index 3:", 3)
    show("gens: a, b\nrel: a^2\nrel: b^3", "free product Z/2 * Z/3, subgroups to index 6:", 6)


if __name__ == "__main__":
    main()
