"""Command-line surface: matrix I/O, invariant queries, equivalence queries,
and a one-shot audit report with one record per published claim.

Exit codes: 0 success / property true, 1 property false or a refuted claim,
2 usage or malformed input, 3 numeric failure (root convergence or an
indeterminate rank decision).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import catalog
from .equivalence import apply_witness, classify, standard_equivalent, unitary_equivalent
from .invariants import (
    REFERENCE_SPECTRA,
    REFERENCE_SPECTRAL_FUNCTIONS,
    ConvergenceError,
    IndeterminateRankError,
    charpoly_exact,
    closed_form_A2a,
    defect,
    deformation_system,
    eig_real_symmetric,
    poly_eq,
    scale,
    spectrum_distance,
    spectrum_numeric,
)
from .matrices import (
    ButsonMatrix,
    dephase,
    format_matrix,
    is_hadamard_exact,
    is_hadamard_numeric,
    parse_matrix,
)

CONFIRMED = "CONFIRMED"
REFUTED = "REFUTED"
DISCREPANCY = "DISCREPANCY-DOCUMENTED"


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    claim: str
    computed: str
    status: str

    def __post_init__(self) -> None:
        if self.status in (REFUTED, DISCREPANCY) and not self.computed:
            raise ValueError("a refuted or discrepant claim must carry its counter-value")


def _f(x: float) -> str:
    """Fixed 15-significant-digit float rendering for reproducible output."""
    return f"{float(x):.15g}"


def _resolve(source: str) -> ButsonMatrix | np.ndarray:
    if source == "-":
        return parse_matrix(sys.stdin.read())
    if source.startswith("catalog:"):
        return catalog.get(source[len("catalog:"):])
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return parse_matrix(fh.read())
    try:
        return catalog.get(source)
    except KeyError:
        raise ValueError(
            f"{source!r} is neither a readable file nor a catalog name"
        ) from None


def _resolve_exact(source: str) -> ButsonMatrix:
    m = _resolve(source)
    if not isinstance(m, ButsonMatrix):
        raise ValueError("this command needs an exact BH matrix, not a complex one")
    return m


def _name_of(source: str) -> str:
    if source.startswith("catalog:"):
        return source[len("catalog:"):]
    return source


def _emit(args, payload: dict, plain: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(plain, end="" if plain.endswith("\n") else "\n")


def cmd_catalog(args) -> int:
    if args.action == "list":
        if args.json:
            print(json.dumps({"catalog": [
                {"name": e.name, "q": e.matrix.q, "n": e.matrix.n, "note": e.note}
                for e in catalog.entries()
            ], }, indent=2))
        else:
            for e in catalog.entries():
                print(f"{e.name:4s} q={e.matrix.q} n={e.matrix.n}  {e.note}")
        return 0
    b = catalog.get(args.name)
    payload = {"name": args.name, "q": b.q, "n": b.n,
               "matrix": [list(r) for r in b.exponents]}
    _emit(args, payload, format_matrix(b))
    return 0


def cmd_verify(args) -> int:
    m = _resolve(args.matrix)
    if isinstance(m, ButsonMatrix):
        ok = is_hadamard_exact(m)
        method = "exact"
    else:
        ok = is_hadamard_numeric(m, args.tol)
        method = "numeric"
    payload = {"name": _name_of(args.matrix), "hadamard": ok, "method": method}
    _emit(args, payload, f"hadamard: {str(ok).lower()} ({method})")
    return 0 if ok else 1


def cmd_charpoly(args) -> int:
    b = _resolve_exact(args.matrix)
    p = scale(charpoly_exact(b), b.n)
    payload = {"name": _name_of(args.matrix), "q": b.q, "n": b.n,
               "charpoly": {"e": [list(c.coeffs) for c in p.e]}}
    lines = [f"scaled charpoly over the order-{b.q} ring "
             f"(x^k coefficient = e_k * {b.n}^(-({b.n}-k)/2)):"]
    for k, c in enumerate(p.e):
        lines.append(f"  e{k} = {c}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_spectrum(args) -> int:
    b = _resolve_exact(args.matrix)
    p = scale(charpoly_exact(b), b.n)
    spec = spectrum_numeric(p, tol=args.tol)
    payload = {"name": _name_of(args.matrix), "q": b.q, "n": b.n,
               "spectrum": [
                   {"re": float(_f(v.real)), "im": float(_f(v.imag)), "mult": m}
                   for v, m in spec.pairs
               ]}
    lines = [f"{_f(v.real)} {_f(v.imag)} x{m}" for v, m in spec.pairs]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_dephase(args) -> int:
    b = _resolve_exact(args.matrix)
    d, left, right = dephase(b)
    payload = {"name": _name_of(args.matrix), "q": b.q, "n": b.n,
               "matrix": [list(r) for r in d.exponents],
               "left": list(left.exps), "right": list(right.exps)}
    plain = format_matrix(d) + \
        "left: " + " ".join(map(str, left.exps)) + "\n" + \
        "right: " + " ".join(map(str, right.exps))
    _emit(args, payload, plain)
    return 0


def cmd_defect(args) -> int:
    b = _resolve_exact(args.matrix)
    d = defect(b, tol=args.tol)
    payload = {"name": _name_of(args.matrix), "q": b.q, "n": b.n, "defect": d}
    _emit(args, payload, f"defect: {d}")
    return 0


def _witness_payload(w) -> dict:
    return {"row_perm": list(w.row_perm), "col_perm": list(w.col_perm),
            "q": w.left.q, "left": list(w.left.exps), "right": list(w.right.exps)}


def cmd_equiv(args) -> int:
    b1 = _resolve_exact(args.matrix1)
    b2 = _resolve_exact(args.matrix2)
    if args.mode == "unitary":
        eq = unitary_equivalent(b1, b2)
        payload = {"equiv": {"mode": "unitary", "equivalent": eq, "witness": None}}
        _emit(args, payload, f"equivalent: {str(eq).lower()}")
        return 0 if eq else 1
    verdict = standard_equivalent(b1, b2)
    payload = {"equiv": {
        "mode": "standard",
        "equivalent": verdict.equivalent,
        "witness": _witness_payload(verdict.witness) if verdict.witness else None,
        "row_perms_examined": verdict.search_stats,
    }}
    lines = [f"equivalent: {str(verdict.equivalent).lower()}"]
    if verdict.witness:
        w = verdict.witness
        lines.append("row_perm: " + " ".join(map(str, w.row_perm)))
        lines.append("col_perm: " + " ".join(map(str, w.col_perm)))
        lines.append("left:  " + " ".join(map(str, w.left.exps)))
        lines.append("right: " + " ".join(map(str, w.right.exps)))
    _emit(args, payload, "\n".join(lines))
    return 0 if verdict.equivalent else 1


# --- claim audit -----------------------------------------------------------

def _claim_hadamard() -> ClaimRecord:
    bad = [e.name for e in catalog.entries() if not is_hadamard_exact(e.matrix)]
    ones = ButsonMatrix(3, [[0] * 6 for _ in range(6)])
    ones_fails = not is_hadamard_exact(ones)
    disputed = {
        name: is_hadamard_exact(ButsonMatrix(3, grid))
        for name, grid in catalog.DISPUTED_READINGS.items()
    }
    computed = (
        f"all {len(catalog.names())} catalog matrices orthogonal exactly; all-ones grid fails; "
        f"transcribed readings for {', '.join(sorted(disputed))} fail orthogonality and were "
        f"replaced by the derived grids (A2 from diagonal-normalizing A02, A40 from the template)"
    )
    if bad or not ones_fails:
        return ClaimRecord("C1", "every catalog matrix is Hadamard",
                           f"failing: {', '.join(bad) or 'all-ones passed'}", REFUTED)
    status = DISCREPANCY if (disputed and not any(disputed.values())) else CONFIRMED
    return ClaimRecord("C1", "every catalog matrix is Hadamard", computed, status)


def _claim_m6_poly() -> ClaimRecord:
    p = scale(charpoly_exact(catalog.get("M6")), 6)
    ok = poly_eq(p, REFERENCE_SPECTRAL_FUNCTIONS["M6"])
    return ClaimRecord(
        "C2", "scaled charpoly of M6 equals (x^2-1)^3 coefficientwise",
        "exact match" if ok else "coefficients differ: " + str([str(c) for c in p.e]),
        CONFIRMED if ok else REFUTED)


def _claim_m61_spectrum() -> ClaimRecord:
    p = scale(charpoly_exact(catalog.get("M61")), 6)
    spec = spectrum_numeric(p)
    dist = spectrum_distance(spec, REFERENCE_SPECTRA["M61"])
    ok = dist <= 1e-10
    return ClaimRecord(
        "C3", "numeric spectrum of M61 matches the reference eigenvalue multiset",
        f"max matched deviation {_f(dist)}",
        CONFIRMED if ok else REFUTED)


def _claim_m6_m61_standard() -> ClaimRecord:
    verdict = standard_equivalent(catalog.get("M6"), catalog.get("M61"))
    ok = verdict.equivalent and \
        apply_witness(verdict.witness, catalog.get("M61")) == catalog.get("M6")
    return ClaimRecord(
        "C4", "M6 and M61 are standard-equivalent with a verifiable witness",
        (f"witness rows {list(verdict.witness.row_perm)} cols {list(verdict.witness.col_perm)}, "
         f"verified exactly; {verdict.search_stats} row permutations examined")
        if ok else "no witness found",
        CONFIRMED if ok else REFUTED)


def _claim_variant_polys() -> ClaimRecord:
    names = ["A10", "A20", "A30", "A40", "A50", "A60"]
    polys = {n: scale(charpoly_exact(catalog.get(n)), 6) for n in names}
    mismatched = []
    for n in names:
        if not poly_eq(polys[n], REFERENCE_SPECTRAL_FUNCTIONS[n]):
            spectrum_numeric(polys[n])  # residual <= 1e-8 or it raises
            mismatched.append(n)
    distinct = all(
        not poly_eq(polys[a], polys[b])
        for i, a in enumerate(names) for b in names[i + 1:]
    )
    if not distinct:
        return ClaimRecord("C5", "the six variant spectral functions are pairwise distinct",
                           "a pair of variants shares its polynomial", REFUTED)
    if mismatched:
        return ClaimRecord(
            "C5", "variant spectral functions match the reference displays and are distinct",
            f"pairwise distinct, but computed polynomials for {', '.join(mismatched)} differ "
            "from the displays (numeric root consistency verified)", DISCREPANCY)
    return ClaimRecord(
        "C5", "variant spectral functions match the reference displays and are distinct",
        "all six match the displays exactly; all 15 pairs distinct", CONFIRMED)


def _claim_dephased_collapse() -> ClaimRecord:
    p01 = scale(charpoly_exact(catalog.get("A01")), 6)
    p02 = scale(charpoly_exact(catalog.get("A02")), 6)
    p03 = scale(charpoly_exact(catalog.get("A03")), 6)
    ok = poly_eq(p01, p03) and not poly_eq(p01, p02)
    return ClaimRecord(
        "C6", "A01 and A03 share their spectral function; A02 differs",
        "f(A01) = f(A03) != f(A02), exact" if ok else "collapse pattern violated",
        CONFIRMED if ok else REFUTED)


def _claim_shared_spectrum() -> ClaimRecord:
    p1 = scale(charpoly_exact(catalog.get("A1")), 6)
    p2 = scale(charpoly_exact(catalog.get("A2")), 6)
    p3 = scale(charpoly_exact(catalog.get("A3")), 6)
    same = poly_eq(p1, p2) and poly_eq(p1, p3)
    dist = spectrum_distance(spectrum_numeric(p1), REFERENCE_SPECTRA["A1"])
    conj_invariant = poly_eq(
        p1, scale(charpoly_exact(catalog.get("A1").conjugated()), 6))
    ok = same and dist <= 1e-10 and conj_invariant
    return ClaimRecord(
        "C7", "A1, A2, A3 share their scaled charpoly, matching the reference "
              "spectrum, independent of the root choice",
        (f"identical exactly; max matched eigenvalue deviation {_f(dist)}; "
         f"conjugation-invariant: {conj_invariant}"),
        CONFIRMED if ok else REFUTED)


def _claim_standard_classes() -> ClaimRecord:
    v12 = standard_equivalent(catalog.get("A1"), catalog.get("A2"))
    v13 = standard_equivalent(catalog.get("A1"), catalog.get("A3"))
    vf = standard_equivalent(catalog.get("A1"), catalog.get("F6"), prescreen=False)
    ok = v12.equivalent and v13.equivalent and not vf.equivalent \
        and vf.search_stats == 720
    return ClaimRecord(
        "C8", "A1 = A2 = A3 under standard equivalence; A1 vs F6 refuted exhaustively",
        (f"witnesses verified for A1~A2 and A1~A3; A1 vs F6 refuted after "
         f"{vf.search_stats} row permutations"),
        CONFIRMED if ok else REFUTED)


def _claim_isolation() -> ClaimRecord:
    d1 = defect(catalog.get("A1"))
    df = defect(catalog.get("F6"))
    sig1 = np.linalg.svd(deformation_system(catalog.get("A1")), compute_uv=False)
    ratios = sig1 / sig1[0]
    gap_ok = all(r > 1e-4 or r < 1e-8 for r in ratios)
    ok = d1 == 0 and df == 4 and gap_ok
    return ClaimRecord(
        "C9", "defect(A1) = 0 certifies isolation; control defect(F6) = 4",
        (f"defect(A1)={d1}, defect(F6)={df}; retained/discarded singular value "
         f"ratios split cleanly at 1e-4 / 1e-8: {gap_ok}"),
        CONFIRMED if ok else REFUTED)


def _claim_class_counts() -> ClaimRecord:
    c_var = classify([catalog.get(n) for n in ("A10", "A20", "A30", "A40", "A50", "A60")],
                     "unitary")
    c_std = classify([catalog.get(n) for n in ("A01", "A02", "A03")], "unitary")
    c_diag = classify([catalog.get(n) for n in ("A1", "A2", "A3")], "unitary")
    counts = (len(c_var), len(c_std), len(c_diag))
    ok = counts == (6, 2, 1)
    return ClaimRecord(
        "C10", "unitary class counts: variants 6, dephased forms 2, unit-diagonal forms 1",
        f"counts {counts[0]}/{counts[1]}/{counts[2]}",
        CONFIRMED if ok else REFUTED)


def _claim_symmetric_family() -> ClaimRecord:
    rt6 = math.sqrt(6.0)
    notes = []
    identities_ok = True
    any_mismatch = False
    for a in (0.0, 0.5, 1.0, 2.0, 3.0):
        m = catalog.agaian_symmetric(a)
        eig = eig_real_symmetric(m)
        trace_err = abs(sum(eig) - float(np.trace(m)))
        frob_err = abs(sum(x * x for x in eig) - float(np.sum(m * m)))
        if trace_err > 1e-10 or frob_err > 1e-10:
            identities_ok = False
        formula = sorted(closed_form_A2a(a))
        dev_scaled = max(abs(f - e / rt6) for f, e in zip(formula, sorted(eig)))
        dev_plain = max(abs(f - e) for f, e in zip(formula, sorted(eig)))
        if min(dev_scaled, dev_plain) > 1e-10:
            any_mismatch = True
        notes.append(f"a={_f(a)}: dev/sqrt6={_f(dev_scaled)} dev={_f(dev_plain)}")
    eig1 = eig_real_symmetric(catalog.agaian_symmetric(1.0))
    rank_one_ok = abs(eig1[-1] - 6.0) <= 1e-10 and \
        max(abs(x) for x in eig1[:-1]) <= 1e-10
    status = REFUTED if not (identities_ok and rank_one_ok) else (
        DISCREPANCY if any_mismatch else CONFIRMED)
    return ClaimRecord(
        "C11", "symmetric family: eigensolver identities hold; closed-form "
               "values compared under both normalizations",
        ("trace and Frobenius identities within 1e-10; a=1 gives {6, 0^5}; "
         "closed form matches only at a=0 (scaled): " + "; ".join(notes)),
        status)


def build_claims() -> list[ClaimRecord]:
    return [
        _claim_hadamard(),
        _claim_m6_poly(),
        _claim_m61_spectrum(),
        _claim_m6_m61_standard(),
        _claim_variant_polys(),
        _claim_dephased_collapse(),
        _claim_shared_spectrum(),
        _claim_standard_classes(),
        _claim_isolation(),
        _claim_class_counts(),
        _claim_symmetric_family(),
    ]


def cmd_report(args) -> int:
    claims = build_claims()
    if args.json:
        print(json.dumps({"claims": [
            {"id": c.id, "claim": c.claim, "computed": c.computed, "status": c.status}
            for c in claims
        ]}, indent=2))
    else:
        print("# Claim audit\n")
        print("| id | status | claim |")
        print("|----|--------|-------|")
        for c in claims:
            print(f"| {c.id} | {c.status} | {c.claim} |")
        print()
        for c in claims:
            print(f"{c.id} [{c.status}]")
            print(f"  claim:    {c.claim}")
            print(f"  computed: {c.computed}")
    return 1 if any(c.status == REFUTED for c in claims) else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadamard6",
        description="Exact toolkit for the 6x6 Butson-type Hadamard catalog",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the catalog or show one matrix")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?", help="catalog name (for 'show')")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="Hadamard verdict (exact for BH, numeric for C)")
    p.add_argument("matrix", help="catalog name, file path, or - for stdin")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("charpoly", help="exact scaled characteristic polynomial")
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("spectrum", help="numeric spectrum with multiplicities")
    p.add_argument("matrix")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("dephase", help="standard form plus reconstructing phases")
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dephase)

    p = sub.add_parser("defect", help="first-order deformation defect")
    p.add_argument("matrix")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_defect)

    p = sub.add_parser("equiv", help="decide equivalence of two matrices")
    p.add_argument("mode", choices=["standard", "unitary"])
    p.add_argument("matrix1")
    p.add_argument("matrix2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("report", help="audit every published claim")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "show" and not args.name:
        parser.error("catalog show needs a name")
    try:
        return args.func(args)
    except (ConvergenceError, IndeterminateRankError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
