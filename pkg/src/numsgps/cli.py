"""Command-line interface.

Commands: info, apery, table, hilbert, glue, verify, free. Every command
accepts ``--json`` for machine-readable output. Exit codes: 0 success,
1 property violation / counterexample found, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import cone, verify
from .core import NumericalSemigroup, from_generators
from .errors import SemigroupError
from .gluing import build_free, make_gluing


def _parse_gens(text: str) -> NumericalSemigroup:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise SemigroupError(f"could not parse generators {text!r}: {exc}") from exc
    return from_generators(values)


def _parse_steps(text: str) -> list[tuple[int, int]]:
    steps = []
    for index, chunk in enumerate(part for part in text.split(";") if part.strip()):
        m = re.fullmatch(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*", chunk)
        if not m:
            raise SemigroupError(
                f"step {index + 1}: expected '(q,p)', got {chunk.strip()!r}")
        steps.append((int(m.group(1)), int(m.group(2))))
    if not steps:
        raise SemigroupError("no steps given")
    return steps


def _emit(payload, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(payload)


def _info_payload(S: NumericalSemigroup) -> dict:
    hilbert = cone.hilbert_function(S)
    return {
        "generators": list(S.generators),
        "multiplicity": S.multiplicity,
        "embedding_dimension": S.embedding_dimension,
        "frobenius": S.frobenius,
        "conductor": S.conductor,
        "gap_count": S.genus(),
        "reduction_number": cone.reduction_number(S),
        "symmetric": cone.is_symmetric(S),
        "cm_tangent_cone": cone.is_cm_tangent_cone(S),
        "gorenstein_tangent_cone": cone.is_gorenstein_tangent_cone(S),
        "hilbert": hilbert.to_json(),
    }


def _cmd_info(args) -> int:
    S = _parse_gens(args.generators)
    payload = _info_payload(S)
    if args.json:
        _emit(payload, True)
        return 0
    h = payload["hilbert"]
    lines = [
        f"semigroup:            {S}",
        f"multiplicity:         {payload['multiplicity']}",
        f"embedding dimension:  {payload['embedding_dimension']}",
        f"frobenius:            {payload['frobenius']}",
        f"conductor:            {payload['conductor']}",
        f"gaps:                 {payload['gap_count']}",
        f"reduction number:     {payload['reduction_number']}",
        f"symmetric:            {payload['symmetric']}",
        f"CM tangent cone:      {payload['cm_tangent_cone']}",
        f"Gorenstein cone:      {payload['gorenstein_tangent_cone']}",
        f"Hilbert values:       {h['values']} then {h['stable_value']} ({h['classification']})",
    ]
    print("\n".join(lines))
    return 0


def _cmd_apery(args) -> int:
    S = _parse_gens(args.generators)
    x = args.x if args.x is not None else S.multiplicity
    ap = S.apery_set(x)
    if args.json:
        _emit(ap.to_json(), True)
        return 0
    print(f"AP({S}, {x}) by residue class:")
    for r, w in enumerate(ap.elements):
        print(f"  {r}: {w}")
    return 0


def _cmd_table(args) -> int:
    S = _parse_gens(args.generators)
    table = cone.apery_table(S)
    if args.json:
        _emit(table.to_json(), True)
        return 0
    print(table.render_text())
    return 0


def _cmd_hilbert(args) -> int:
    S = _parse_gens(args.generators)
    h = cone.hilbert_function(S)
    if args.json:
        _emit(h.to_json(), True)
        return 0
    print(f"H(0..r): {list(h.values)}; stable value {h.stable_value} "
          f"from n = {len(h.values) - 1}")
    print(f"classification: {h.classification}"
          + ("" if h.nondecreasing else f" (first decrease at n={h.first_decrease})"))
    return 0


def _transfer_notes(spec) -> list[str]:
    notes = []
    if spec.flags.specific:
        notes.append("CM transfers: glued cone is CM iff the S1 cone is CM")
        if cone.is_symmetric(spec.s2) and cone.purity(spec.s2, spec.q).m_pure:
            notes.append("Gorenstein transfers: glued is Gorenstein iff S1 is")
        if cone.hilbert_function(spec.s1).nondecreasing:
            notes.append("Hilbert function of the gluing is nondecreasing")
    if spec.flags.extension and spec.p < spec.q:
        notes.append("extension with p < q: glued cone is CM")
    return notes


def _cmd_glue(args) -> int:
    s1 = _parse_gens(args.s1)
    s2 = _parse_gens(args.s2)
    spec = make_gluing(s1, s2, args.p, args.q)
    payload = spec.to_json()
    if args.analyze:
        payload["analysis"] = {
            "s1": _info_payload(spec.s1),
            "s2": _info_payload(spec.s2),
            "glued": _info_payload(spec.glued),
            "applicable_transfers": _transfer_notes(spec),
        }
    if args.json:
        _emit(payload, True)
        return 0
    f = spec.flags
    print(f"glued semigroup: {spec.glued}")
    print(f"flags: nice={f.nice} specific={f.specific} extension={f.extension} "
          f"nice_extension={f.nice_extension}")
    if args.analyze:
        for name, S in (("S1", spec.s1), ("S2", spec.s2), ("glued", spec.glued)):
            h = cone.hilbert_function(S)
            print(f"{name}: {S} CM={cone.is_cm_tangent_cone(S)} "
                  f"Gorenstein={cone.is_gorenstein_tangent_cone(S)} "
                  f"Hilbert={h.classification}")
        for note in _transfer_notes(spec):
            print(f"transfer: {note}")
    return 0


def _cmd_verify(args) -> int:
    config = verify.SamplerConfig(
        max_embdim=args.max_embdim,
        max_gen=args.max_gen,
        max_pq=args.max_pq,
        count=args.samples,
        glued_conductor_cap=args.cost_cap,
    )
    report = verify.verify_theorem(args.theorem, config, seed=args.seed)
    if args.json:
        _emit(report.to_json(), True)
    else:
        print(f"{report.id}: {report.hypothesis_hits} hypothesis hits in "
              f"{report.samples_tried} samples (seed {report.seed}); "
              f"{len(report.violations)} violation(s)")
        if report.violations:
            print("first witness:")
            print(json.dumps(report.violations[0], indent=2, sort_keys=True))
    return 0 if report.ok else 1


def _cmd_free(args) -> int:
    result = build_free(_parse_steps(args.steps))
    if args.json:
        _emit(result.to_json(), True)
        return 0
    print(f"free semigroup: {result.semigroup}")
    for i, spec in enumerate(result.steps, start=1):
        print(f"step {i}: q={spec.q}, p={spec.p} -> {spec.glued} "
              f"nice={spec.flags.nice} specific={spec.flags.specific}")
    if result.all_nice:
        print("every step is nice: the tangent cone is Cohen-Macaulay "
              "and the Hilbert function is nondecreasing")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numsgps",
        description="Exact computations on numerical semigroups, tangent cones, and gluings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("info", help="invariants of a semigroup")
    p.add_argument("generators", help="comma-separated generators, e.g. 6,15,7")
    add_json(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("apery", help="Apery set with respect to a member")
    p.add_argument("generators")
    p.add_argument("-x", type=int, default=None, help="base element (default: multiplicity)")
    add_json(p)
    p.set_defaults(func=_cmd_apery)

    p = sub.add_parser("table", help="Apery table of the ideals nM")
    p.add_argument("generators")
    add_json(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("hilbert", help="Hilbert function and classification")
    p.add_argument("generators")
    add_json(p)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("glue", help="construct and classify a gluing")
    p.add_argument("--s1", required=True, help="generators of the first semigroup")
    p.add_argument("--s2", required=True, help="generators of the second (1 = naturals)")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--analyze", action="store_true",
                   help="also report CM/Gorenstein/Hilbert facts and applicable transfers")
    add_json(p)
    p.set_defaults(func=_cmd_glue)

    p = sub.add_parser("verify", help="check a theorem on sampled instances")
    p.add_argument("--theorem", required=True, help="T1..T10")
    p.add_argument("--samples", type=int, default=200,
                   help="hypothesis-satisfying samples to collect")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-embdim", type=int, default=4)
    p.add_argument("--max-gen", type=int, default=40)
    p.add_argument("--max-pq", type=int, default=60)
    p.add_argument("--cost-cap", type=int, default=120_000,
                   help="reject instances with larger glued conductor")
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("free", help="iterated extensions starting from the naturals")
    p.add_argument("--steps", required=True, help='e.g. "(2,3);(2,5)"')
    add_json(p)
    p.set_defaults(func=_cmd_free)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
