"""Command line front end: builds codes from catalog descriptors or
files, runs the product / dual / distance / quantum pipelines, emits
byte-stable JSON reports, and replays the bundled reference pipelines
against committed golden reports.
"""
from __future__ import annotations

import argparse
import datetime
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import __version__
from .catalog import (DescriptorError, hamming_dual, load_code_json, parse_descriptor,
                      quaternary_hamming_dual_5, simplex)
from .code import (AdditiveCode, LinearCode, distance_at_least, find_low_weight_word,
                   hamming_weight, min_distance)
from .convolutional import (ConvStabilizer, band_window, band_window_factorization_ok,
                            check_band_self_orthogonal, conv_from_product,
                            free_distance_upper_bound, tail_biting, tail_biting_qecc)
from .cyclic import (CyclicCode, cyclic_from_roots, dual_support_map,
                     product_spectrum_support, rs_code, rs_product_dual_certificate,
                     rs_product_params)
from .galois import GF
from .matrix import InnerProductKind, from_text
from .product import dual_distance_ceiling, dual_of_product_generator, product, product_additive
from .quantum import (css_qecc, hermitian_qecc, rate_comparison, rs_prod_qecc,
                      stabilizer_distance, symplectic_qecc)

_KIND_BY_NAME = {k.value: k for k in InnerProductKind}


def _field_block(spec) -> dict:
    return {"q": spec.q, "modulus": spec.modulus_str(), "generator": spec.generator}


def _selforth_flags(code) -> dict:
    flags = {}
    if isinstance(code, LinearCode):
        flags["euclidean"] = code.is_self_orthogonal(InnerProductKind.EUCLIDEAN)
        if code.spec.ell % 2 == 0:
            flags["hermitian"] = code.is_self_orthogonal(InnerProductKind.HERMITIAN)
            flags["symplectic"] = AdditiveCode.from_linear(code).is_self_orthogonal()
    else:
        if code.spec.ell % 2 == 0:
            flags["symplectic"] = code.is_self_orthogonal()
    return flags


def _code_block(code, budget=None, threads=1, with_distance=True) -> dict:
    out = code.describe()
    out["field_spec"] = _field_block(code.spec)
    out["self_orthogonal"] = _selforth_flags(code)
    if with_distance:
        out["distance"] = min_distance(code, budget=budget, threads=threads).to_dict()
    return out


def _resolve_code(args, attr="code"):
    expr = getattr(args, attr, None)
    json_attr = getattr(args, f"{attr}_json", None)
    file_attr = getattr(args, f"{attr.replace('code', 'matrix')}_file", None)
    sources = [s for s in (expr, json_attr, file_attr) if s]
    if len(sources) != 1:
        raise DescriptorError(
            f"exactly one of --{attr}, --{attr}-json, or a matrix file must be given")
    if expr:
        return parse_descriptor(expr)
    if json_attr:
        return load_code_json(json_attr)
    matrix = from_text(Path(file_attr).read_text())
    if getattr(args, "additive", False):
        return AdditiveCode(matrix.spec, matrix.rows, n=matrix.ncols)
    return LinearCode(matrix)


# ---------------------------------------------------------------------------
# subcommand handlers (each returns a JSON-able report dict)

def cmd_field(args) -> dict:
    spec = GF(args.q)
    report = _field_block(spec)
    report["characteristic"] = spec.p
    report["degree"] = spec.ell
    if spec.ell % 2 == 0:
        report["quadratic_subfield"] = spec.frobenius_power
    return {"field": report}


def cmd_build(args) -> dict:
    code = _resolve_code(args)
    return {"code": _code_block(code, budget=args.budget, threads=args.threads)}


def cmd_dual(args) -> dict:
    code = _resolve_code(args)
    kind = _KIND_BY_NAME[args.kind]
    if isinstance(code, AdditiveCode):
        if kind is not InnerProductKind.SYMPLECTIC:
            raise DescriptorError("additive codes only have symplectic duals")
        dual = code.symplectic_dual()
    else:
        dual = code.dual(kind)
    return {
        "primal": _code_block(code, budget=args.budget, threads=args.threads),
        "kind": str(kind),
        "dual": _code_block(dual, budget=args.budget, threads=args.threads),
    }


def cmd_distance(args) -> dict:
    code = _resolve_code(args)
    cert = min_distance(code, budget=args.budget, threads=args.threads)
    return {"code": _code_block(code, with_distance=False), "distance": cert.to_dict()}


def _product_conformance(c1, c2, prod, kind, budget, threads) -> dict:
    checks: dict = {}
    stacked = dual_of_product_generator(c1, c2, kind)
    if kind is InnerProductKind.SYMPLECTIC:
        dual = prod.symplectic_dual()
        stacked_code = AdditiveCode(prod.spec, stacked.rows, n=prod.n)
        checks["dual_generator_matches"] = stacked_code == dual
    else:
        dual = prod.dual(kind)
        checks["dual_generator_matches"] = stacked.same_row_space(dual.generator)
    checks["dual_dimension"] = dual.k_p if isinstance(dual, AdditiveCode) else dual.k
    dual_cert = min_distance(dual, budget=budget, threads=threads)
    checks["dual_distance"] = dual_cert.to_dict()
    try:
        ceiling = dual_distance_ceiling(c1, c2, kind, budget=budget)
        checks["dual_distance_ceiling"] = ceiling
        if dual_cert.exact:
            checks["ceiling_respected"] = dual_cert.value <= ceiling
    except ValueError:
        checks["dual_distance_ceiling"] = None
    return checks


def cmd_product(args) -> dict:
    c1 = parse_descriptor(args.code1)
    c2 = parse_descriptor(args.code2)
    kind = _KIND_BY_NAME[args.kind]
    prod = product(c1, c2)
    report = {
        "factors": [_code_block(c1, budget=args.budget, threads=args.threads),
                    _code_block(c2, budget=args.budget, threads=args.threads)],
        "kind": str(kind),
        "product": _code_block(prod, budget=args.budget, threads=args.threads),
        "claimed_distance": prod.claimed_distance,
        "conformance": _product_conformance(c1, c2, prod, kind, args.budget, args.threads),
    }
    if c2.is_self_orthogonal(kind):
        report["self_orthogonality_transfer"] = prod.is_self_orthogonal(kind)
    return report


def cmd_product_additive(args) -> dict:
    c1 = parse_descriptor(args.code1)
    c2 = parse_descriptor(args.code2)
    if isinstance(c2, LinearCode):
        c2 = AdditiveCode.from_linear(c2)
    prod = product_additive(c1, c2)
    report = {
        "factors": [_code_block(c1, budget=args.budget, threads=args.threads),
                    _code_block(c2, budget=args.budget, threads=args.threads)],
        "kind": "symplectic",
        "product": _code_block(prod, budget=args.budget, threads=args.threads),
        "claimed_distance": prod.claimed_distance,
        "conformance": _product_conformance(c1, c2, prod, InnerProductKind.SYMPLECTIC,
                                            args.budget, args.threads),
    }
    if c2.is_self_orthogonal():
        report["self_orthogonality_transfer"] = prod.is_self_orthogonal()
    return report


def _parse_cyclic(expr: str) -> CyclicCode:
    code = None
    expr = expr.strip()
    if expr.startswith("rs(") and expr.endswith(")"):
        q, delta = (int(x) for x in expr[3:-1].split(","))
        code = rs_code(q, delta)
    elif expr.startswith("cyclic(") and expr.endswith(")"):
        vals = [int(x) for x in expr[7:-1].split(",")]
        code = cyclic_from_roots(vals[0], vals[1], vals[2:])
    if code is None:
        raise DescriptorError("spectrum needs rs(q, delta) or cyclic(q, n, roots...) factors")
    return code


def _support_lines(mask) -> list[str]:
    """Rows j from high to low (the figures' vertical axis), i across."""
    n1 = len(mask)
    n2 = len(mask[0])
    lines = []
    for j in range(n2 - 1, -1, -1):
        lines.append(" ".join("0" if mask[i][j] else "*" for i in range(n1)))
    return lines


def cmd_spectrum(args) -> dict:
    c1 = _parse_cyclic(args.code1)
    c2 = _parse_cyclic(args.code2)
    if c1.spec != c2.spec:
        raise DescriptorError("spectrum factors must share one field")
    mask = product_spectrum_support(c1, c2)
    report = {
        "field_spec": _field_block(c1.spec),
        "factors": [[c1.n, c1.k], [c2.n, c2.k]],
        "free_positions": sum(1 for row in mask for m in row if not m),
        "support": _support_lines(mask),
    }
    if args.dual:
        kind = _KIND_BY_NAME[args.kind]
        frob = c1.spec.frobenius_power if kind is InnerProductKind.HERMITIAN else None
        n1, n2 = c1.n, c2.n
        dual_mask = tuple(
            tuple(not mask[dual_support_map(i, n1, kind, frob)][dual_support_map(j, n2, kind, frob)]
                  for j in range(n2))
            for i in range(n1))
        report["dual_support"] = _support_lines(dual_mask)
    return report


def cmd_qecc(args) -> dict:
    if args.construction == "rs-product":
        if args.q is None or args.mu1 is None or args.mu2 is None:
            raise DescriptorError("rs-product needs --q, --mu1, --mu2")
        params = rs_prod_qecc(args.q, args.mu1, args.mu2, budget=args.budget,
                              threads=args.threads)
        rates = rate_comparison(args.q, args.mu1, args.mu2)
        predicted = rs_product_params(args.q, args.q - args.mu1, args.q - args.mu2)
        dual_cert = rs_product_dual_certificate(args.q, args.q - args.mu1, args.q - args.mu2,
                                                budget=args.budget)
        return {"qecc": params.to_dict(), "rate_comparison": rates.to_dict(),
                "predicted": predicted.to_dict(), "dual_certificate": dual_cert.to_dict()}
    code = _resolve_code(args)
    if args.construction == "css":
        params = css_qecc(code, budget=args.budget, threads=args.threads)
    elif args.construction == "hermitian":
        params = hermitian_qecc(code, budget=args.budget, threads=args.threads)
    elif args.construction == "symplectic":
        if isinstance(code, LinearCode):
            code = AdditiveCode.from_linear(code)
        params = symplectic_qecc(code, budget=args.budget, threads=args.threads)
    else:
        raise DescriptorError(f"unknown construction {args.construction!r}")
    report = {"source": _code_block(code, budget=args.budget, threads=args.threads),
              "qecc": params.to_dict()}
    if args.refine_distance:
        report["stabilizer_distance"] = stabilizer_distance(code, args.construction,
                                                            budget=args.budget)
    return report


def _build_band(args) -> ConvStabilizer:
    c1 = parse_descriptor(args.code1)
    c2 = parse_descriptor(args.code2)
    kind = _KIND_BY_NAME[args.kind]
    if isinstance(c2, AdditiveCode):
        kind = InnerProductKind.SYMPLECTIC
    return conv_from_product(c1, c2, args.t, kind)


def _band_block(s: ConvStabilizer) -> dict:
    r = s.rows_per_frame
    out = {
        "field_spec": _field_block(s.spec),
        "kind": str(s.kind),
        "block_shape": [s.block.nrows, s.block.ncols],
        "frame": s.frame,
        "overlap": s.overlap,
        "self_orthogonal_band": check_band_self_orthogonal(s),
        # (n, k, m) display: frame, frame minus stabilizer rows, overlap
        "frame_params": {"n": s.frame, "k": s.frame - r, "m": s.overlap},
    }
    fact = band_window_factorization_ok(s, 2)
    if fact is not None:
        out["window_factorization"] = fact
    return out


def cmd_conv(args) -> dict:
    s = _build_band(args)
    if args.conv_action == "build":
        report = _band_block(s)
        report["free_distance_upper_bound"] = free_distance_upper_bound(
            s, args.window, budget=args.budget)
        return {"band": report}
    if args.conv_action == "check":
        window = band_window(s, 3)
        oracle = window.gram(window, s.kind).is_zero()
        return {"band": _band_block(s), "window_pairwise_orthogonal": oracle}
    # tailbite
    code = tail_biting(s, args.blocks)
    qecc = tail_biting_qecc(s, args.blocks, budget=args.budget, threads=args.threads)
    rank = code.k_p if isinstance(code, AdditiveCode) else code.k
    return {
        "band": _band_block(s),
        "blocks": args.blocks,
        "tail_biting_code": _code_block(code, budget=args.budget, threads=args.threads,
                                        with_distance=False),
        "rank": rank,
        "expected_rank": args.blocks * s.rows_per_frame,
        "rank_deficient": rank < args.blocks * s.rows_per_frame,
        "qecc": qecc.to_dict(),
    }


# ---------------------------------------------------------------------------
# reference pipelines and golden reports

def _pipeline_hamming_dual_chain(budget, threads) -> dict:
    code = hamming_dual(3, 2)
    dual = code.dual(InnerProductKind.EUCLIDEAN)
    return {
        "code": _code_block(code, budget, threads),
        "dual": _code_block(dual, budget, threads),
        "qecc": css_qecc(code, budget=budget, threads=threads).to_dict(),
    }


def _pipeline_binary_product_chain(budget, threads) -> dict:
    code = hamming_dual(3, 2)
    prod = product(code, code)
    dual = prod.dual(InnerProductKind.EUCLIDEAN)
    stacked = dual_of_product_generator(code, code, InnerProductKind.EUCLIDEAN)
    return {
        "product": _code_block(prod, budget, threads),
        "claimed_distance": prod.claimed_distance,
        "dual_dimension": dual.k,
        "dual_distance": min_distance(dual, budget=budget, threads=threads).to_dict(),
        "dual_distance_at_least_3": distance_at_least(dual, 3),
        "dual_distance_at_least_4": distance_at_least(dual, 4),
        "dual_generator_matches": stacked.same_row_space(dual.generator),
        "dual_distance_ceiling": dual_distance_ceiling(code, code, InnerProductKind.EUCLIDEAN,
                                                       budget=budget),
        "qecc": css_qecc(prod, budget=budget, threads=threads).to_dict(),
    }


def _pipeline_hermitian_chain(budget, threads) -> dict:
    code = quaternary_hamming_dual_5()
    dual = code.dual(InnerProductKind.HERMITIAN)
    prod = product(code, code)
    prod_dual = prod.dual(InnerProductKind.HERMITIAN)
    return {
        "code": _code_block(code, budget, threads),
        "dual": _code_block(dual, budget, threads),
        "qecc": hermitian_qecc(code, budget=budget, threads=threads).to_dict(),
        "product": _code_block(prod, budget, threads),
        "product_dual_dimension": prod_dual.k,
        "product_dual_distance": min_distance(prod_dual, budget=budget, threads=threads).to_dict(),
        "product_qecc": hermitian_qecc(prod, budget=budget, threads=threads).to_dict(),
    }


def _pipeline_additive_chain(budget, threads) -> dict:
    c1 = simplex(2, 2)
    c2 = AdditiveCode.from_linear(quaternary_hamming_dual_5())
    prod = product_additive(c1, c2)
    dual = prod.symplectic_dual()
    exhaustive = min_distance(dual, budget=budget, threads=threads)
    search_lower = max(w for w in (2, 3, 4) if distance_at_least(dual, w))
    witness = find_low_weight_word(dual, max_w=4)
    qecc = symplectic_qecc(prod, budget=budget, threads=threads)
    return {
        "factors": [_code_block(c1, budget, threads), _code_block(c2, budget, threads)],
        "product": _code_block(prod, budget, threads),
        "dual_size": f"2^{dual.k_p}",
        "dual_distance_exhaustive": exhaustive.to_dict(),
        "dual_distance_search": {"lower": search_lower,
                                 "witness_weight": hamming_weight(witness) if witness else None},
        "methods_agree": exhaustive.exact and witness is not None
                         and exhaustive.value == search_lower == hamming_weight(witness),
        "qecc": qecc.to_dict(),
    }


def _pipeline_tail_biting(budget, threads) -> dict:
    code = hamming_dual(3, 2)
    s = conv_from_product(code, code, 1, InnerProductKind.EUCLIDEAN)
    out = {}
    for blocks in (2, 3):
        tb = tail_biting(s, blocks)
        dual = tb.dual(InnerProductKind.EUCLIDEAN)
        out[f"N={blocks}"] = {
            "code": [tb.n, tb.k],
            "rank": tb.k,
            "expected_rank": blocks * s.rows_per_frame,
            "self_orthogonal": tb.is_self_orthogonal(InnerProductKind.EUCLIDEAN),
            "dual_distance": min_distance(dual, budget=budget, threads=threads).to_dict(),
            "qecc": tail_biting_qecc(s, blocks, budget=budget, threads=threads).to_dict(),
        }
    return out


def _pipeline_conv_bands(budget, threads) -> dict:
    code = hamming_dual(3, 2)
    out = {}
    for t in (1, 2):
        s = conv_from_product(code, code, t, InnerProductKind.EUCLIDEAN)
        block = _band_block(s)
        if t == 1:
            block["free_distance_upper_bound_w2"] = free_distance_upper_bound(s, 2, budget=budget)
        out[f"binary_t={t}"] = block
    c2 = AdditiveCode.from_linear(quaternary_hamming_dual_5())
    s = conv_from_product(simplex(2, 2), c2, 1, InnerProductKind.SYMPLECTIC)
    block = _band_block(s)
    # the band carries one row per additive generator (8 per frame), while
    # the block-code-derived logical count would put 7 logical per frame
    # with 3 stabilizers; both readings are surfaced
    block["alternative_frame_params"] = {"n": s.frame, "k": 7, "m": s.overlap}
    block["frame_params_disagree"] = block["frame_params"] != block["alternative_frame_params"]
    out["additive_t=1"] = block
    return out


def _pipeline_rs_product_grid(budget, threads) -> dict:
    grid = {}
    for q in (4, 5, 7, 8):
        entries = []
        for mu1 in range(1, q - 1):
            if 2 * mu1 >= q - 1:
                continue
            for mu2 in range(1, q - 1):
                delta1, delta2 = q - mu1, q - mu2
                rep = rs_product_params(q, delta1, delta2)
                entry = rep.to_dict()
                entry["mu"] = [mu1, mu2]
                prod = product(rs_code(q, delta1).code, rs_code(q, delta2).code)
                entry["dimensions_match"] = (prod.k == rep.dimension
                                             and prod.n - prod.k == rep.dual_dimension)
                rect = rs_product_dual_certificate(q, delta1, delta2, budget=budget)
                entry["rectangle_certificate"] = rect.to_dict()
                if q <= 5:
                    dual = prod.dual(InnerProductKind.EUCLIDEAN)
                    cert = min_distance(dual, budget=budget, threads=threads)
                    entry["certified_dual_distance"] = cert.to_dict()
                    entry["matches_stated"] = cert.exact and cert.value == rep.stated_dual_distance
                    entry["matches_corrected"] = (cert.exact
                                                  and cert.value == rep.expected_dual_distance)
                entries.append(entry)
        grid[f"q={q}"] = entries
    return grid


def _pipeline_rate_comparison(budget, threads) -> dict:
    grid = []
    for q in (4, 5, 7, 8, 9):
        for mu in range(1, q - 1):
            rc = rate_comparison(q, mu, mu)
            grid.append(rc.to_dict())
    squared_example = {
        "base": [5, 1],
        "squared": [25, 17],
        "rate_ratio": str(Fraction(17, 25) / Fraction(1, 5)),
        "more_than_three_times": Fraction(17, 25) > 3 * Fraction(1, 5),
    }
    return {"grid": grid, "squared_length_example": squared_example}


PIPELINES = {
    "hamming-dual-chain": _pipeline_hamming_dual_chain,
    "binary-product-chain": _pipeline_binary_product_chain,
    "hermitian-chain": _pipeline_hermitian_chain,
    "additive-chain": _pipeline_additive_chain,
    "tail-biting": _pipeline_tail_biting,
    "conv-bands": _pipeline_conv_bands,
    "rs-product-grid": _pipeline_rs_product_grid,
    "rate-comparison": _pipeline_rate_comparison,
}


def _diff_paths(expected, actual, prefix="") -> list[str]:
    if isinstance(expected, dict) and isinstance(actual, dict):
        out = []
        for key in sorted(set(expected) | set(actual)):
            if key not in expected:
                out.append(f"{prefix}/{key} (unexpected)")
            elif key not in actual:
                out.append(f"{prefix}/{key} (missing)")
            else:
                out.extend(_diff_paths(expected[key], actual[key], f"{prefix}/{key}"))
        return out
    if isinstance(expected, list) and isinstance(actual, list):
        if len(expected) != len(actual):
            return [f"{prefix} (length {len(expected)} != {len(actual)})"]
        out = []
        for i, (e, a) in enumerate(zip(expected, actual)):
            out.extend(_diff_paths(e, a, f"{prefix}[{i}]"))
        return out
    if expected != actual:
        return [f"{prefix}: expected {expected!r}, got {actual!r}"]
    return []


def _golden_dir() -> Path:
    return Path(str(resources.files("qproduct"))) / "golden"


def cmd_reproduce(args) -> dict:
    budget = args.budget
    threads = args.threads
    results = {}
    failures = {}
    golden_dir = _golden_dir()
    for name, builder in PIPELINES.items():
        report = builder(budget, threads)
        results[name] = report
        if args.write_golden:
            golden_dir.mkdir(parents=True, exist_ok=True)
            path = golden_dir / f"{name}.json"
            path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
            continue
        path = golden_dir / f"{name}.json"
        if not path.exists():
            failures[name] = ["golden report missing"]
            continue
        expected = json.loads(path.read_text())
        diffs = _diff_paths(expected, report, prefix=name)
        if diffs:
            failures[name] = diffs[:20]
    summary = {
        "pipelines": sorted(PIPELINES),
        "passed": sorted(set(PIPELINES) - set(failures)),
        "failed": {k: v for k, v in sorted(failures.items())},
        "ok": not failures,
    }
    if args.write_golden:
        summary["written"] = str(golden_dir)
    return summary


# ---------------------------------------------------------------------------
# rendering and entry point

def _render_pretty(report: dict, out) -> None:
    def walk(node, indent=0):
        pad = "  " * indent
        if isinstance(node, dict):
            for key, value in node.items():
                if isinstance(value, (dict, list)) and value and not _is_scalar_list(value):
                    print(f"{pad}{key}:", file=out)
                    walk(value, indent + 1)
                else:
                    print(f"{pad}{key}: {_fmt(value)}", file=out)
        elif isinstance(node, list):
            for value in node:
                if isinstance(value, (dict, list)):
                    walk(value, indent)
                    print(file=out)
                else:
                    print(f"{pad}- {_fmt(value)}", file=out)

    def _is_scalar_list(value):
        return isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)

    def _fmt(value):
        if isinstance(value, list):
            return "[" + ", ".join(str(v) for v in value) + "]"
        return value

    walk(report)


def _emit(args, report: dict) -> None:
    envelope = {
        "tool": "qproduct",
        "version": __version__,
        "invocation": args._argv,
        "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "report": report,
    }
    if getattr(args, "pretty", False):
        out = sys.stdout
        if args.out:
            out = open(args.out, "w")
        try:
            _render_pretty(report, out)
        finally:
            if args.out:
                out.close()
        return
    text = json.dumps(envelope, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def _add_common(parser) -> None:
    parser.add_argument("--budget", type=int, default=None,
                        help="max codewords for exhaustive enumeration (default 2^24; "
                             "QPRODUCT_BUDGET overrides)")
    parser.add_argument("--threads", type=int, default=1,
                        help="deterministic partition count for enumeration")
    parser.add_argument("--out", help="write the report to a file instead of stdout")
    parser.add_argument("--pretty", action="store_true", help="human-readable rendering")


def _add_code_source(parser, name="code") -> None:
    parser.add_argument(f"--{name}", help="catalog descriptor expression")
    parser.add_argument(f"--{name}-json", dest=f"{name}_json",
                        help="code descriptor JSON file")
    parser.add_argument(f"--{name.replace('code', 'matrix')}-file",
                        dest=f"{name.replace('code', 'matrix')}_file",
                        help="matrix text file (header 'q r c')")
    parser.add_argument("--additive", action="store_true",
                        help="treat a matrix file as additive generators")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qproduct",
        description="Self-orthogonal product codes and the quantum codes they induce")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="describe a built-in field")
    p.add_argument("--q", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("build", help="resolve a code and certify its parameters")
    _add_code_source(p)
    _add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("dual", help="dual code under a chosen inner product")
    _add_code_source(p)
    p.add_argument("--kind", choices=sorted(_KIND_BY_NAME), default="euclidean")
    _add_common(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("distance", help="minimum-distance certificate")
    _add_code_source(p)
    _add_common(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("product", help="product code with conformance checks")
    p.add_argument("--code1", required=True)
    p.add_argument("--code2", required=True)
    p.add_argument("--kind", choices=["euclidean", "hermitian"], default="euclidean")
    _add_common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("product-additive", help="prime-field (x) additive product")
    p.add_argument("--code1", required=True, help="factor over the prime field")
    p.add_argument("--code2", required=True, help="additive factor (additive(...) descriptor)")
    _add_common(p)
    p.set_defaults(func=cmd_product_additive)

    p = sub.add_parser("spectrum", help="support grid of a bicyclic product spectrum")
    p.add_argument("--code1", required=True, help="rs(q, delta) or cyclic(q, n, roots...)")
    p.add_argument("--code2", required=True)
    p.add_argument("--dual", action="store_true", help="also print the dual support")
    p.add_argument("--kind", choices=["euclidean", "hermitian"], default="euclidean")
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("qecc", help="derive quantum code parameters")
    p.add_argument("--construction", required=True,
                   choices=["css", "hermitian", "symplectic", "rs-product"])
    _add_code_source(p)
    p.add_argument("--q", type=int)
    p.add_argument("--mu1", type=int)
    p.add_argument("--mu2", type=int)
    p.add_argument("--refine-distance", action="store_true",
                   help="also compute the exact stabilizer distance (dual minus code) "
                        "when the dual is enumerable")
    _add_common(p)
    p.set_defaults(func=cmd_qecc)

    p = sub.add_parser("conv", help="convolutional stabilizer bands")
    conv_sub = p.add_subparsers(dest="conv_action", required=True)
    for action, extra in (("build", "build a band block and check it"),
                          ("check", "orthogonality verdict with window oracle"),
                          ("tailbite", "wrap into a tail-biting block code")):
        cp = conv_sub.add_parser(action, help=extra)
        cp.add_argument("--code1", required=True)
        cp.add_argument("--code2", required=True)
        cp.add_argument("--t", type=int, default=1, help="overlap in multiples of n2")
        cp.add_argument("--kind", choices=["euclidean", "hermitian", "symplectic"],
                        default="euclidean")
        if action == "build":
            cp.add_argument("--window", type=int, default=2,
                            help="window blocks for the free-distance bound")
        if action == "tailbite":
            cp.add_argument("--blocks", type=int, required=True)
        _add_common(cp)
        cp.set_defaults(func=cmd_conv)

    p = sub.add_parser("reproduce-paper",
                       help="re-run the bundled reference pipelines and diff against goldens")
    p.add_argument("--write-golden", action="store_true",
                   help="regenerate the golden reports instead of diffing")
    _add_common(p)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args._argv = argv
    try:
        report = args.func(args)
    except (DescriptorError, ValueError, OSError) as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(error, indent=2, sort_keys=True))
        return 1
    _emit(args, report)
    if args.command == "reproduce-paper" and not report.get("ok", False) \
            and not args.write_golden:
        return 1
    if args.command == "conv" and args.conv_action == "check" \
            and not report["band"]["self_orthogonal_band"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
