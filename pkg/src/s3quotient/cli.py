"""Command-line front end.

Exit status: 0 when everything verifies, 1 on a failed claim, 2 on usage
errors, 3 when an internal certification aborts.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import (
    ClaimReport,
    Vocabulary,
    decompose_product,
    relation_scan,
    verify_claims,
)
from .groups import (
    CYCLIC,
    DIHEDRAL,
    FAMILIES,
    ICOSAHEDRAL,
    OCTAHEDRAL,
    TETRAHEDRAL,
    CertificationError,
    FiniteSubgroup,
    build,
    molien_dim,
)
from .invariants import InvariantSystem, fundamental, generation_table
from .sphere import multiplet_from_hw

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CERT = 0, 1, 2, 3
VERIFY_ALL_N = (2, 3, 4, 5, 6)

# forms used by default in decompose/relations/multiplet
DEFAULT_SEEDS = {
    CYCLIC: ("P", "X"),
    DIHEDRAL: ("st", "Z"),
    TETRAHEDRAL: ("V",),
    OCTAHEDRAL: ("S",),
    ICOSAHEDRAL: ("P",),
}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="s3quotient", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, allow_all: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        choices = list(FAMILIES) + (["all"] if allow_all else [])
        sp.add_argument("group", choices=choices)
        sp.add_argument("--n", type=int, help="parameter of the cyclic / binary dihedral family")
        sp.add_argument("--json", action="store_true", help="emit the canonical JSON schema")
        sp.add_argument("--out", help="write the report to this path instead of stdout")
        return sp

    add("group", "build a group and report its order and generators")
    sp = add("invariants", "fundamental invariants, syzygy and Molien table")
    sp.add_argument("--max-degree", type=int, default=60)
    sp = add("multiplet", "the multiplet generated by a named form")
    sp.add_argument("--form", help="named form (default: the group's coordinate seed)")
    sp = add("decompose", "spin decomposition of the product of two multiplets")
    sp.add_argument("--left", help="named form for the left factor")
    sp.add_argument("--right", help="named form for the right factor")
    sp = add("relations", "scan iterated products of the seed multiplets for relations")
    sp.add_argument("--max-degree", type=int, default=60)
    sp.add_argument("--factors", type=int, default=3, help="largest number of seed factors")
    sp = add("molien", "dimensions of invariant forms by degree")
    sp.add_argument("--max-degree", type=int, default=60)
    sp = add("verify", "run the claim battery", allow_all=True)
    sp.add_argument("--max-degree", type=int, default=60)
    return p


def _validate(p: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.group in (CYCLIC, DIHEDRAL):
        if args.n is None:
            p.error(f"{args.group} requires --n")
        limit = 120 if args.group == CYCLIC else 60
        if args.n < 1 or limit % args.n:
            p.error(f"--n must divide {limit} for {args.group}")
    elif args.n is not None:
        p.error(f"--n does not apply to {args.group}")
    md = getattr(args, "max_degree", None)
    if md is not None and not 0 <= md <= 60:
        p.error("--max-degree must lie in [0, 60]")
    if getattr(args, "factors", None) is not None and not 2 <= args.factors <= 4:
        p.error("--factors must lie in [2, 4]")


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _form_choice(sys: InvariantSystem, name: str | None, default: str) -> tuple[str, object]:
    name = name or default
    if name not in sys.named:
        raise KeyError(f"unknown form {name!r}; available: {', '.join(sorted(sys.named))}")
    return name, sys.named[name]


# -- subcommands ---------------------------------------------------------------------


def cmd_group(G: FiniteSubgroup, args) -> tuple[int, str]:
    data = G.to_json()
    if args.json:
        return EXIT_OK, _dumps(data)
    lines = [f"group {G.label}", f"  order {G.order}", f"  center size {data['center_size']}", "  generators:"]
    lines += [f"    {g}" for g in G.generators]
    return EXIT_OK, "\n".join(lines) + "\n"


def _molien_table(G: FiniteSubgroup, max_degree: int) -> list[dict]:
    return [{"degree": d, "dim": molien_dim(G, d)} for d in range(max_degree + 1)]


def cmd_molien(G: FiniteSubgroup, args) -> tuple[int, str]:
    table = _molien_table(G, args.max_degree)
    if args.json:
        return EXIT_OK, _dumps({"group": G.label, "molien": table})
    lines = [f"invariant dimensions for {G.label}", "  degree  dim"]
    lines += [f"  {r['degree']:6d}  {r['dim']}" for r in table]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_invariants(G: FiniteSubgroup, args) -> tuple[int, str]:
    sys_ = fundamental(G)
    gen = generation_table(sys_, args.max_degree)
    status = EXIT_OK if all(r["match"] for r in gen) else EXIT_FAIL
    data = sys_.to_json()
    data["molien"] = _molien_table(G, args.max_degree)
    data["generation"] = gen
    if args.json:
        return status, _dumps(data)
    lines = [f"fundamental system of {G.label}", f"  degrees {list(sys_.degrees)}"]
    for name in sorted(sys_.named):
        f = sys_.named[name]
        lines.append(f"  {name} (degree {f.degree}, character {sys_.characters[name].describe()}):")
        lines.append(f"    {f}")
    for note in sys_.notes:
        lines.append(f"  note: {note}")
    if sys_.syzygy:
        lines.append(f"  syzygy: {sys_.syzygy}")
    lines.append("  degree  molien  products")
    for r in gen:
        if r["molien"] or r["products_rank"]:
            lines.append(f"  {r['degree']:6d}  {r['molien']:6d}  {r['products_rank']:8d}")
    return status, "\n".join(lines) + "\n"


def cmd_multiplet(G: FiniteSubgroup, args) -> tuple[int, str]:
    sys_ = fundamental(G)
    name, f = _form_choice(sys_, args.form, DEFAULT_SEEDS[G.name][0])
    M = multiplet_from_hw(f)
    flagged = M.is_zero()
    if args.json:
        data = M.to_json()
        data.update(group=G.label, form=name, zero=flagged)
        return EXIT_OK, _dumps(data)
    lines = [f"spin {M.spin} multiplet of {name} = {f} ({G.label})"]
    if flagged:
        lines.append("  warning: zero highest weight")
    lines += [f"  <j, j-{l}> = {c}" for l, c in enumerate(M.components)]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_decompose(G: FiniteSubgroup, args) -> tuple[int, str]:
    sys_ = fundamental(G)
    seeds = DEFAULT_SEEDS[G.name]
    lname, lf = _form_choice(sys_, args.left, seeds[0])
    rname, rf = _form_choice(sys_, args.right, args.left or seeds[0])
    comps = decompose_product(multiplet_from_hw(lf), multiplet_from_hw(rf), G, Vocabulary.for_system(sys_),
                              sys_.characters[lname], sys_.characters[rname], labels=(lname, rname))
    if args.json:
        return EXIT_OK, _dumps({"group": G.label, "left": lname, "right": rname,
                                "components": [c.to_json() for c in comps]})
    lines = [f"{lname} x {rname} in {G.label}"]
    for c in comps:
        extra = c.descendant or (str(c.constant) if c.constant is not None else "")
        approx = ""
        if c.constant is not None:
            z = c.constant.approx()
            approx = f"  ~ {z.real:.6g}{z.imag:+.6g}i"
        lines.append(f"  spin {str(c.spin):>5}  k={c.k:<3d} {c.classification:<22} {extra}{approx}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_relations(G: FiniteSubgroup, args) -> tuple[int, str]:
    sys_ = fundamental(G)
    seeds = [(n, sys_.named[n]) for n in DEFAULT_SEEDS[G.name]]
    scan = relation_scan(G, seeds, args.max_degree, args.factors, Vocabulary.for_system(sys_))
    if args.json:
        data = scan.to_json()
        data["unforced_zeros"] = [c.label for c in scan.unforced_zeros()]
        return EXIT_OK, _dumps(data)
    lines = [f"relation scan for {G.label} (seeds {', '.join(n for n, _ in seeds)}; up to {args.factors} factors)"]
    for c in scan.components:
        tag = c.classification
        if tag == "Zero":
            tag += " (forced)" if c.forced_zero else (" (antisymmetric)" if c.antisymmetric else " (beyond Molien)")
        lines.append(f"  {c.label:<28} spin {str(c.spin):>5}  {tag}  {c.descendant or ''}")
    lines.append("  spans: factors  spin  character-order  rank  molien")
    for s in scan.spans:
        lines.append(f"         {s.factors:7d}  {str(s.two_j / 2):>5}  {s.character.order:15d}  {s.rank:4d}  {s.molien:6d}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _verify_groups(args) -> list[FiniteSubgroup]:
    if args.group != "all":
        return [build(args.group, args.n)]
    groups = [build(CYCLIC, n) for n in VERIFY_ALL_N]
    groups += [build(DIHEDRAL, n) for n in VERIFY_ALL_N]
    groups += [build(TETRAHEDRAL), build(OCTAHEDRAL), build(ICOSAHEDRAL)]
    return groups


def cmd_verify(args) -> tuple[int, str]:
    results: list[tuple[FiniteSubgroup, list[ClaimReport]]] = []
    for G in _verify_groups(args):
        results.append((G, verify_claims(G, args.max_degree)))
    ok = all(r.passed for _, reps in results for r in reps)
    status = EXIT_OK if ok else EXIT_FAIL
    if args.json:
        reports = [{"group": G.label, "claims": [r.to_json() for r in reps]} for G, reps in results]
        payload = reports[0] if len(reports) == 1 else {"reports": reports}
        payload["status"] = "pass" if ok else "fail"
        return status, _dumps(payload)
    lines = []
    for G, reps in results:
        lines.append(f"{G.label}")
        for r in reps:
            lines.append(f"  [{r.status.upper()}] {r.id}: {r.statement}")
    total = sum(len(reps) for _, reps in results)
    failed = sum(not r.passed for _, reps in results for r in reps)
    lines.append(f"{total - failed}/{total} claims pass")
    return status, "\n".join(lines) + "\n"


COMMANDS = {
    "group": cmd_group,
    "invariants": cmd_invariants,
    "multiplet": cmd_multiplet,
    "decompose": cmd_decompose,
    "relations": cmd_relations,
    "molien": cmd_molien,
}


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    p = _parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(p, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            status, text = cmd_verify(args)
        else:
            G = build(args.group, args.n)
            status, text = COMMANDS[args.command](G, args)
    except KeyError as exc:
        print(f"s3quotient: error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except CertificationError as exc:
        print(f"s3quotient: certification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
