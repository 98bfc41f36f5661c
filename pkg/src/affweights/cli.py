"""Command-line front end.

Subcommands: maximal, nbar, member, shift, string, blocks, diagram,
verify.  Exit codes: 0 success (or true verdict), 1 false verdict from
member/blocks, 2 usage error, 3 internal consistency failure.
"""

import argparse
import itertools
import json
import sys

from .cartan import build_cartan, parse_type
from .errors import AffineWeightsError, ConsistencyError
from .maxweights import build_table
from .membership import block_exists, delta_shift, is_weight, string_profile
from .oracle import enumerate_weights, is_weight_oracle
from .weights import HighestWeight, bilinear, bilinear_rr, defect


def _int_vector(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer vector, got {text!r}")


def _frac_str(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _weight_from(args):
    return HighestWeight(build_cartan(parse_type(args.type)), args.labels)


def _add_weight_args(sp):
    sp.add_argument("--type", required=True,
                    help="affine type: letter, twist digit, '~', subscript (A1~2, A2~4, D2~3, E1~6, ...)")
    sp.add_argument("--labels", required=True, type=_int_vector,
                    help="hub labels of the highest weight, e.g. 1,2,1")


def _cmd_maximal(args):
    w = _weight_from(args)
    table = build_table(w)
    if args.json:
        payload = [{"hub": list(o.seed_hub), "content": list(o.seed_content),
                    "defect": {"num": o.defect.numerator, "den": o.defect.denominator}}
                   for o in table.orbits]
        print(json.dumps(payload, sort_keys=True))
        return 0
    print(f"type {w.data.atype.name}, level {w.level}, highest-weight hub {list(w.labels)}")
    print(f"{len(table.orbits)} maximal dominant weights:")
    for o in table.orbits:
        print(f"  hub {list(o.seed_hub)}  content {o.seed_content}  defect {_frac_str(o.defect)}")
    return 0


def _cmd_nbar(args):
    w = _weight_from(args)
    table = build_table(w)
    if args.json:
        print(json.dumps(table.to_json_dict(), sort_keys=True))
        return 0
    rows = table.rows()
    print(f"type {w.data.atype.name}, level {w.level}, highest-weight hub {list(w.labels)}")
    print(f"{len(rows)} orbit elements in {len(table.orbits)} orbits, "
          f"{table.size} translation classes (* = representative)")
    for content, hub, key, oid, rep in rows:
        star = "*" if rep else " "
        print(f" {star} content {str(content):<18} hub {str(hub):<20} "
              f"key {str(key):<14} orbit {oid}")
    return 0


def _cmd_member(args):
    w = _weight_from(args)
    table = build_table(w)
    cert = delta_shift(table, args.content)
    if args.json:
        print(json.dumps(cert.to_json_dict(), sort_keys=True))
        return 0 if cert.verdict else 1
    data = w.data
    alpha_terms = [f"{_frac_str(x)}*a{i}" for i, x in enumerate(cert.alpha) if x]
    zeta_alpha = bilinear(w, cert.alpha) - bilinear_rr(data, cert.rep, cert.alpha)
    print(f"content: {cert.content}")
    print(f"representative: {cert.rep}")
    print(f"alpha = {' + '.join(alpha_terms) if alpha_terms else '0'}")
    print(f"(rep|alpha) = {_frac_str(zeta_alpha)}")
    print(f"(alpha|alpha) = {_frac_str(bilinear_rr(data, cert.alpha, cert.alpha))}")
    print(f"s = {cert.shift}")
    print(f"defect = {_frac_str(cert.defect)}")
    print("verdict: IS a weight" if cert.verdict else "verdict: NOT a weight")
    return 0 if cert.verdict else 1


def _cmd_shift(args):
    table = build_table(_weight_from(args))
    print(delta_shift(table, args.content).shift)
    return 0


def _cmd_string(args):
    table = build_table(_weight_from(args))
    profile = string_profile(table, args.content, args.root, args.word)
    if args.json:
        print(json.dumps(profile))
    else:
        print(" ".join(str(s) for s in profile))
    return 0


def _cmd_blocks(args):
    ok = block_exists(args.e, args.multicharge, args.content)
    print("block exists" if ok else "no such block")
    return 0 if ok else 1


def _cmd_diagram(args):
    w = _weight_from(args)
    table = build_table(w)
    contents = enumerate_weights(w, args.floors)
    index = {b: i for i, b in enumerate(contents)}
    edges = []
    for b in contents:
        for i in range(w.data.n):
            child = b[:i] + (b[i] + 1,) + b[i + 1:]
            if child in index:
                edges.append((index[b], index[child], i))
    if args.dot:
        print("digraph weights {")
        print("  rankdir=TB;")
        for floor in range(args.floors + 1):
            ids = [f"n{index[b]}" for b in contents if b[0] == floor]
            if ids:
                print(f"  {{ rank=same; {'; '.join(ids)}; }}")
        for b in contents:
            label = f"{b}^{_frac_str(defect(w, b))}"
            print(f'  n{index[b]} [label="{label}"];')
        for src, dst, i in edges:
            print(f'  n{src} -> n{dst} [label="{i}"];')
        print("}")
    else:
        nodes = []
        for b in contents:
            dfct = defect(w, b)
            nodes.append({
                "content": list(b),
                "floor": b[0],
                "defect": {"num": dfct.numerator, "den": dfct.denominator},
                "shift": delta_shift(table, b).shift,
            })
        payload = {"nodes": nodes,
                   "edges": [{"from": s, "to": t, "i": i} for s, t, i in edges]}
        print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_verify(args):
    w = _weight_from(args)
    table = build_table(w)
    mismatches = 0
    total = 0
    for b in itertools.product(range(args.bound + 1), repeat=w.data.n):
        total += 1
        if is_weight(table, b) != is_weight_oracle(w, b):
            mismatches += 1
            print(f"disagreement at {b}")
    print(f"checked {total} contents, {mismatches} disagreements")
    return 0 if mismatches == 0 else 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="affweights",
        description="Exact membership tests for weights of integrable "
                    "highest-weight modules over affine Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("maximal", help="maximal dominant weights with hubs and defects")
    _add_weight_args(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_maximal)

    sp = sub.add_parser("nbar", help="the orbit closure and translation-class table")
    _add_weight_args(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_nbar)

    sp = sub.add_parser("member", help="membership verdict with certificate trace")
    _add_weight_args(sp)
    sp.add_argument("--content", required=True, type=_int_vector)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_member)

    sp = sub.add_parser("shift", help="the delta-shift of a content, machine-readable")
    _add_weight_args(sp)
    sp.add_argument("--content", required=True, type=_int_vector)
    sp.set_defaults(func=_cmd_shift)

    sp = sub.add_parser("string", help="delta-shift profile along a root string")
    _add_weight_args(sp)
    sp.add_argument("--content", required=True, type=_int_vector)
    sp.add_argument("--root", required=True, type=int, help="simple root index")
    sp.add_argument("--word", type=_int_vector, default=(),
                    help="reflection word applied to the simple root, e.g. 0,2,1")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_string)

    sp = sub.add_parser("blocks", help="existence of a cyclotomic block")
    sp.add_argument("--e", required=True, type=int, help="quantum characteristic (>= 2)")
    sp.add_argument("--multicharge", required=True, type=_int_vector)
    sp.add_argument("--content", required=True, type=_int_vector)
    sp.set_defaults(func=_cmd_blocks)

    sp = sub.add_parser("diagram", help="weight graph, floor-layered (DOT or JSON)")
    _add_weight_args(sp)
    sp.add_argument("--floors", required=True, type=int)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_diagram)

    sp = sub.add_parser("verify", help="exhaustive criterion-vs-oracle sweep")
    _add_weight_args(sp)
    sp.add_argument("--bound", required=True, type=int)
    sp.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return 3
    except AffineWeightsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
