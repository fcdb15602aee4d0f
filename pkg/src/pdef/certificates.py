"""Largeness and rank-bound certificates.

Every certificate is a self-contained record: kind, echo of the inputs,
witness payload, and cited conclusions.  ``verify`` recomputes each claim
from the payload alone, so a certificate read back from JSON can be
checked without trusting the issuing run.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .abelian import abelian_invariants
from .cosets import (
    CosetTable,
    TableInvariantError,
    is_normal,
    power_survives,
    table_from_rows,
    validate_table,
)
from .lowindex import SubgroupRecord, low_index_normal
from .presentations import (
    DEFAULT_TIETZE_BUDGET,
    Presentation,
    p_deficiency,
    parse_presentation,
    print_presentation,
    quotient_by_words,
    tietze_simplify,
)
from .rewriting import schreier_generators, subgroup_presentation
from .words import Word, is_prime, primitive_root

P_LARGE_BY_DEFICIENCY = "PLargeByDeficiency"
ALLCOCK_BOUND = "AllcockBound"
Z_SURJECTION_WITNESS = "ZSurjectionWitness"
FREE_QUOTIENT_WITNESS = "FreeQuotientWitness"
P_LARGE_WITNESS = "PLargeWitness"
POWER_QUOTIENT_LARGE = "PowerQuotientLarge"
INCONCLUSIVE = "Inconclusive"

KINDS = (
    P_LARGE_BY_DEFICIENCY,
    ALLCOCK_BOUND,
    Z_SURJECTION_WITNESS,
    FREE_QUOTIENT_WITNESS,
    P_LARGE_WITNESS,
    POWER_QUOTIENT_LARGE,
    INCONCLUSIVE,
)

# citation tags allowed in conclusions; "definition" marks claims the
# witness itself establishes directly
CITATIONS = ("Thm 1.1", "Thm 1.2", "Thm 1.3", "Cor 2.1", "Cor 2.2", "Cor 2.5", "definition")

RANK_BOUND_FORMULA = "1 + N*(n - 1 - sum(1/r_j))"


class Conclusion(NamedTuple):
    claim: str
    by: str


@dataclass
class Certificate:
    kind: str
    presentation: str | None
    parameters: dict
    witness: dict
    conclusions: list[Conclusion]
    verified: bool = False


class MalformedCertificate(ValueError):
    pass


# ---------------------------------------------------------------------------
# JSON schema


_WITNESS_FIELDS = {
    "index": int,
    "table": list,
    "kill_set": list,
    "abelian_invariants": dict,
    "bound": str,
}

_REQUIRED_WITNESS = {
    P_LARGE_BY_DEFICIENCY: ("bound",),
    ALLCOCK_BOUND: ("index", "table", "abelian_invariants", "bound"),
    Z_SURJECTION_WITNESS: ("index", "table", "abelian_invariants"),
    FREE_QUOTIENT_WITNESS: ("kill_set", "abelian_invariants"),
    P_LARGE_WITNESS: ("index", "table", "kill_set", "abelian_invariants"),
    POWER_QUOTIENT_LARGE: ("bound",),
    INCONCLUSIVE: (),
}


def validate_certificate_dict(d: dict) -> None:
    """Schema check for a serialized certificate; unknown fields rejected."""
    if not isinstance(d, dict):
        raise MalformedCertificate("certificate must be a JSON object")
    allowed = {"kind", "presentation", "parameters", "witness", "conclusions", "verified"}
    unknown = set(d) - allowed
    if unknown:
        raise MalformedCertificate(f"unknown fields {sorted(unknown)}")
    for key in ("kind", "parameters", "conclusions", "verified"):
        if key not in d:
            raise MalformedCertificate(f"missing field {key!r}")
    if d["kind"] not in KINDS:
        raise MalformedCertificate(f"unknown kind {d['kind']!r}")
    if "presentation" in d and not isinstance(d["presentation"], str):
        raise MalformedCertificate("presentation must be a string")
    if not isinstance(d["parameters"], dict):
        raise MalformedCertificate("parameters must be an object")
    if not isinstance(d["verified"], bool):
        raise MalformedCertificate("verified must be a boolean")
    if not isinstance(d["conclusions"], list):
        raise MalformedCertificate("conclusions must be a list")
    for c in d["conclusions"]:
        if not isinstance(c, dict) or set(c) != {"claim", "by"}:
            raise MalformedCertificate("each conclusion is {claim, by}")
        if not isinstance(c["claim"], str) or c["by"] not in CITATIONS:
            raise MalformedCertificate(f"bad conclusion {c!r}")
    witness = d.get("witness", {})
    if not isinstance(witness, dict):
        raise MalformedCertificate("witness must be an object")
    for key, value in witness.items():
        if key not in _WITNESS_FIELDS:
            raise MalformedCertificate(f"unknown witness field {key!r}")
        if not isinstance(value, _WITNESS_FIELDS[key]) or isinstance(value, bool):
            raise MalformedCertificate(f"witness field {key!r} has the wrong type")
    for key in _REQUIRED_WITNESS[d["kind"]]:
        if key not in witness:
            raise MalformedCertificate(f"kind {d['kind']} requires witness.{key}")
    if "table" in witness:
        if not all(isinstance(row, list) and all(isinstance(x, int) for x in row) for row in witness["table"]):
            raise MalformedCertificate("witness.table must be a list of integer rows")
    if "kill_set" in witness and not all(isinstance(s, str) for s in witness["kill_set"]):
        raise MalformedCertificate("witness.kill_set must be a list of names")
    if "abelian_invariants" in witness:
        inv = witness["abelian_invariants"]
        if set(inv) != {"rank", "torsion"}:
            raise MalformedCertificate("abelian_invariants is {rank, torsion}")
        if not isinstance(inv["rank"], int) or not all(isinstance(x, int) for x in inv["torsion"]):
            raise MalformedCertificate("abelian_invariants must hold integers")


def to_json_dict(c: Certificate) -> dict:
    d = {
        "kind": c.kind,
        "parameters": c.parameters,
        "witness": c.witness,
        "conclusions": [{"claim": x.claim, "by": x.by} for x in c.conclusions],
        "verified": c.verified,
    }
    if c.presentation is not None:
        d["presentation"] = c.presentation
    return d


def to_json(c: Certificate) -> str:
    return json.dumps(to_json_dict(c), indent=2, sort_keys=True) + "\n"


def from_json_dict(d: dict) -> Certificate:
    validate_certificate_dict(d)
    return Certificate(
        kind=d["kind"],
        presentation=d.get("presentation"),
        parameters=dict(d["parameters"]),
        witness=dict(d.get("witness", {})),
        conclusions=[Conclusion(x["claim"], x["by"]) for x in d["conclusions"]],
        verified=d["verified"],
    )


def from_json(text: str) -> Certificate:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedCertificate(f"not JSON: {e}") from e
    return from_json_dict(d)


# ---------------------------------------------------------------------------
# helpers


def _inv_payload(inv) -> dict:
    return {"rank": inv.free_rank, "torsion": list(inv.torsion)}


def _table_payload(T: CosetTable) -> list[list[int]]:
    return [list(row) for row in T.rows]


def _issue(cert: Certificate) -> Certificate:
    cert.verified = verify(cert)
    if cert.kind != INCONCLUSIVE and not cert.verified:
        raise AssertionError(f"issued {cert.kind} certificate failed self-verification")
    return cert


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


# ---------------------------------------------------------------------------
# certifying operations


def certify_p_large_by_deficiency(P: Presentation, p: int) -> Certificate:
    """Issue a p-largeness certificate when the presentation's p-deficiency
    exceeds one (exact rational comparison); otherwise Inconclusive."""
    report = p_deficiency(P, p)
    text = print_presentation(P)
    witness = {"bound": str(report.value)}
    if report.value > 1:
        cert = Certificate(
            kind=P_LARGE_BY_DEFICIENCY,
            presentation=text,
            parameters={"p": p},
            witness=witness,
            conclusions=[
                Conclusion("p-large", "Thm 1.2"),
                Conclusion("large", "Thm 1.2"),
                Conclusion("not torsion", "Cor 2.1"),
                Conclusion("no property (T)", "Cor 2.2"),
            ],
        )
        return _issue(cert)
    return Certificate(
        kind=INCONCLUSIVE,
        presentation=text,
        parameters={"p": p, "reason": "this presentation has p-deficiency <= 1"},
        witness=witness,
        conclusions=[],
        verified=True,
    )


def allcock_rank_bound(P: Presentation, rec: SubgroupRecord,
                       budget: int = DEFAULT_TIETZE_BUDGET) -> Certificate:
    """Lower bound for the abelianization rank of a normal finite-index
    subgroup, from the maximal-power decomposition of the relators.

    Each relator is written as u^r with r maximal; the hypothesis is that
    no proper power u^k (0 < k < r) lies in the subgroup, checked on the
    coset table.  The bound is 1 + N(n - 1 - sum 1/r_j); the certificate
    also carries the measured invariants of the rewritten subgroup."""
    if not rec.normal:
        raise ValueError("the rank bound needs a normal subgroup record")
    T = rec.table
    N = rec.index
    text = print_presentation(P)
    params = {"tietze_budget": budget, "bound_formula": RANK_BOUND_FORMULA}
    root_sum = Fraction(0)
    for j, r in enumerate(P.relators):
        if not r:
            continue  # empty relators impose nothing
        dec = primitive_root(r)
        if not power_survives(T, dec.exact_root(), dec.exponent):
            return Certificate(
                kind=INCONCLUSIVE,
                presentation=text,
                parameters={
                    **params,
                    "reason": "hypothesis fails: a proper power of a relator root lies in the subgroup",
                    "failing_relator": j,
                },
                witness={"index": N, "table": _table_payload(T)},
                conclusions=[],
                verified=True,
            )
        root_sum += Fraction(1, dec.exponent)
    bound = 1 + N * (P.n_generators - 1 - root_sum)
    inv = abelian_invariants(subgroup_presentation(P, rec, budget))
    if inv.free_rank < math.ceil(bound):
        raise AssertionError("measured rank fell below the guaranteed bound")
    cert = Certificate(
        kind=ALLCOCK_BOUND,
        presentation=text,
        parameters=params,
        witness={
            "index": N,
            "table": _table_payload(T),
            "abelian_invariants": _inv_payload(inv),
            "bound": str(bound),
        },
        conclusions=[
            Conclusion(f"subgroup abelianization rank >= {bound}", "Thm 1.1"),
        ],
    )
    return _issue(cert)


def find_z_surjection(P: Presentation, max_index: int,
                      budget: int = DEFAULT_TIETZE_BUDGET) -> Certificate:
    """Search normal subgroups of index <= max_index, in canonical order,
    for one whose abelianization has positive free rank."""
    text = print_presentation(P)
    examined = []
    for rec in low_index_normal(P, max_index):
        inv = abelian_invariants(subgroup_presentation(P, rec, budget))
        examined.append(rec.index)
        if inv.free_rank >= 1:
            cert = Certificate(
                kind=Z_SURJECTION_WITNESS,
                presentation=text,
                parameters={"max_index": max_index, "tietze_budget": budget},
                witness={
                    "index": rec.index,
                    "table": _table_payload(rec.table),
                    "abelian_invariants": _inv_payload(inv),
                },
                conclusions=[Conclusion("no property (T)", "Cor 2.2")],
            )
            return _issue(cert)
    return Certificate(
        kind=INCONCLUSIVE,
        presentation=text,
        parameters={
            "max_index": max_index,
            "tietze_budget": budget,
            "reason": "no normal subgroup in range surjects onto Z",
            "examined_indices": examined,
        },
        witness={},
        conclusions=[],
        verified=True,
    )


def certify_free_quotient(H: Presentation, kill_budget: int,
                          budget: int = DEFAULT_TIETZE_BUDGET) -> Certificate:
    """Look for generators whose removal frees the presentation: kill-set
    subsets are tried smallest first, in generator order, at most
    kill_budget generators at a time.  Sound but incomplete."""
    text = print_presentation(H)
    params = {"kill_budget": kill_budget, "tietze_budget": budget}
    n = H.n_generators
    for size in range(0, min(kill_budget, n - 2) + 1):
        for subset in combinations(range(1, n + 1), size):
            Q = tietze_simplify(
                quotient_by_words(H, [Word((g,)) for g in subset]), budget
            )
            if not Q.relators and Q.n_generators >= 2:
                cert = Certificate(
                    kind=FREE_QUOTIENT_WITNESS,
                    presentation=text,
                    parameters=params,
                    witness={
                        "kill_set": [H.generator_names[g - 1] for g in subset],
                        "abelian_invariants": {"rank": Q.n_generators, "torsion": []},
                    },
                    conclusions=[
                        Conclusion(f"free quotient of rank {Q.n_generators}", "definition"),
                        Conclusion("large", "definition"),
                    ],
                )
                return _issue(cert)
    return Certificate(
        kind=INCONCLUSIVE,
        presentation=text,
        parameters={**params, "reason": "no kill set in budget frees the presentation"},
        witness={},
        conclusions=[],
        verified=True,
    )


def certify_p_large_witness(P: Presentation, p: int, max_index: int, kill_budget: int,
                            budget: int = DEFAULT_TIETZE_BUDGET) -> Certificate:
    """Exhibit p-largeness directly: a normal subgroup of p-power index
    with a free quotient of rank >= 2, searched in canonical order."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    text = print_presentation(P)
    params = {
        "p": p,
        "max_index": max_index,
        "kill_budget": kill_budget,
        "tietze_budget": budget,
    }
    for rec in low_index_normal(P, max_index):
        if not _is_p_power(rec.index, p):
            continue
        Hpres = subgroup_presentation(P, rec, budget)
        sub = certify_free_quotient(Hpres, kill_budget, budget)
        if sub.kind == FREE_QUOTIENT_WITNESS:
            cert = Certificate(
                kind=P_LARGE_WITNESS,
                presentation=text,
                parameters=params,
                witness={
                    "index": rec.index,
                    "table": _table_payload(rec.table),
                    "kill_set": sub.witness["kill_set"],
                    "abelian_invariants": sub.witness["abelian_invariants"],
                },
                conclusions=[
                    Conclusion("p-large", "definition"),
                    Conclusion("large", "definition"),
                    Conclusion("not torsion", "Cor 2.1"),
                ],
            )
            return _issue(cert)
    return Certificate(
        kind=INCONCLUSIVE,
        presentation=text,
        parameters={**params, "reason": "no p-power-index normal subgroup in range yielded a free quotient"},
        witness={},
        conclusions=[],
        verified=True,
    )


def power_quotient_largeness(r: int, k: int, q: int) -> Certificate:
    """Largeness of a rank-r free group modulo k normal q-th powers:
    fires for the smallest prime p | q with p^(l_p) > k/(r-1), where
    p^(l_p) is the exact power of p in q."""
    if q == 0:
        raise ValueError("q must be nonzero")
    if r < 2 or k < 0 or q < 1:
        raise ValueError("need rank >= 2, k >= 0, q >= 1")
    params = {"rank": r, "num_powers": k, "exponent": q}
    rest = q
    p = 2
    while rest > 1:
        if rest % p == 0:
            lp = 0
            while rest % p == 0:
                rest //= p
                lp += 1
            if Fraction(p**lp) > Fraction(k, r - 1):
                bound = r - Fraction(k, p**lp)
                cert = Certificate(
                    kind=POWER_QUOTIENT_LARGE,
                    presentation=None,
                    parameters={**params, "p": p},
                    witness={"bound": str(bound)},
                    conclusions=[
                        Conclusion(
                            f"quotient of a rank-{r} free group by {k} normal {q}-th powers is p-large",
                            "Cor 2.5",
                        ),
                        Conclusion("large", "Cor 2.5"),
                    ],
                )
                return _issue(cert)
        p += 1
    return Certificate(
        kind=INCONCLUSIVE,
        presentation=None,
        parameters={**params, "reason": "no prime power in q beats k/(r-1)"},
        witness={},
        conclusions=[],
        verified=True,
    )


# ---------------------------------------------------------------------------
# verification


def _rebuild_table(P: Presentation, witness: dict) -> CosetTable:
    try:
        rows = witness["table"]
        T = table_from_rows(P.n_generators, rows)
    except (KeyError, ValueError, TypeError) as e:
        raise MalformedCertificate(f"bad table payload: {e}") from e
    gens = tuple(w for _, w in schreier_generators(T))
    return CosetTable(P.n_generators, T.rows, complete=True, subgroup_words=gens)


def _verify_table_against(P: Presentation, T: CosetTable) -> bool:
    try:
        validate_table(P, T)
    except TableInvariantError:
        return False
    return True


def verify(c: Certificate) -> bool:
    """Recompute every claim in the certificate from its payload alone."""
    try:
        if c.kind == INCONCLUSIVE:
            return True
        if c.kind == P_LARGE_BY_DEFICIENCY:
            P = parse_presentation(c.presentation)
            report = p_deficiency(P, c.parameters["p"])
            return str(report.value) == c.witness["bound"] and report.value > 1
        if c.kind == POWER_QUOTIENT_LARGE:
            r, k, q = (c.parameters[x] for x in ("rank", "num_powers", "exponent"))
            p = c.parameters["p"]
            if r < 2 or k < 0 or q < 1 or not is_prime(p) or q % p != 0:
                return False
            lp = 0
            rest = q
            while rest % p == 0:
                rest //= p
                lp += 1
            if not Fraction(p**lp) > Fraction(k, r - 1):
                return False
            return str(r - Fraction(k, p**lp)) == c.witness["bound"]
        if c.kind == ALLCOCK_BOUND:
            P = parse_presentation(c.presentation)
            T = _rebuild_table(P, c.witness)
            if not _verify_table_against(P, T) or not is_normal(T):
                return False
            if c.witness["index"] != T.n_cosets:
                return False
            root_sum = Fraction(0)
            for r in P.relators:
                if not r:
                    continue
                dec = primitive_root(r)
                if not power_survives(T, dec.exact_root(), dec.exponent):
                    return False
                root_sum += Fraction(1, dec.exponent)
            bound = 1 + T.n_cosets * (P.n_generators - 1 - root_sum)
            if str(bound) != c.witness["bound"]:
                return False
            rec = SubgroupRecord(T, T.n_cosets, True, T.subgroup_words)
            inv = abelian_invariants(
                subgroup_presentation(P, rec, c.parameters["tietze_budget"])
            )
            stored = c.witness["abelian_invariants"]
            return (
                inv.free_rank == stored["rank"]
                and list(inv.torsion) == stored["torsion"]
                and inv.free_rank >= math.ceil(bound)
            )
        if c.kind == Z_SURJECTION_WITNESS:
            P = parse_presentation(c.presentation)
            T = _rebuild_table(P, c.witness)
            if not _verify_table_against(P, T) or not is_normal(T):
                return False
            if c.witness["index"] != T.n_cosets:
                return False
            rec = SubgroupRecord(T, T.n_cosets, True, T.subgroup_words)
            inv = abelian_invariants(
                subgroup_presentation(P, rec, c.parameters["tietze_budget"])
            )
            stored = c.witness["abelian_invariants"]
            return (
                inv.free_rank == stored["rank"]
                and list(inv.torsion) == stored["torsion"]
                and inv.free_rank >= 1
            )
        if c.kind == FREE_QUOTIENT_WITNESS:
            H = parse_presentation(c.presentation)
            return _check_free_quotient(H, c)
        if c.kind == P_LARGE_WITNESS:
            P = parse_presentation(c.presentation)
            p = c.parameters["p"]
            T = _rebuild_table(P, c.witness)
            if not _verify_table_against(P, T) or not is_normal(T):
                return False
            if c.witness["index"] != T.n_cosets or not _is_p_power(T.n_cosets, p):
                return False
            rec = SubgroupRecord(T, T.n_cosets, True, T.subgroup_words)
            H = subgroup_presentation(P, rec, c.parameters["tietze_budget"])
            return _check_free_quotient(H, c)
        raise MalformedCertificate(f"unknown kind {c.kind!r}")
    except MalformedCertificate:
        raise
    except (KeyError, TypeError) as e:
        raise MalformedCertificate(f"payload missing or mistyped: {e}") from e


def _check_free_quotient(H: Presentation, c: Certificate) -> bool:
    names = c.witness["kill_set"]
    if any(name not in H.generator_names for name in names):
        return False
    kill = [H.generator(name) for name in names]
    Q = tietze_simplify(quotient_by_words(H, kill), c.parameters["tietze_budget"])
    stored = c.witness["abelian_invariants"]
    return (
        not Q.relators
        and Q.n_generators >= 2
        and Q.n_generators == stored["rank"]
        and stored["torsion"] == []
    )
