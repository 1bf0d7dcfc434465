"""Command-line front end with machine-readable output.

Single results print as one JSON object, batch evaluation as a JSON array,
and grid export writes CSV (the one columnar payload).  Output is
deterministic: fixed field order, floats in shortest round-trip form, and
exact integers as decimal strings so values survive 64-bit JSON consumers.

Exit codes: 0 success, 2 invalid input, 3 numeric failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .combinatorics import eulerian_row, stirling2_row
from .errors import (
    DomainViolation,
    IterationCap,
    LengthMismatch,
    NonConvergent,
    PoleProximity,
    PolybergError,
)
from .kernel import DomainPoint, KernelParams, bergman_closed, bergman_quotient, bergman_series
from .luqikeng import ZeroStatus, classify, construct_witness, zero_locus_grid
from .polylog import (
    polylog_deriv_closed,
    polylog_deriv_series,
    polylog_neg_closed,
    polylog_series,
)


class _InputError(Exception):
    """User-facing argument problem; maps to exit code 2."""


# ---------------------------------------------------------------------------
# Parsing helpers
# ---------------------------------------------------------------------------

def parse_complex(text: str) -> complex:
    """Accept 'a+bi', '(a,b)' and plain reals."""
    s = text.strip().replace(" ", "")
    if not s:
        raise _InputError("empty complex literal")
    if s.startswith("(") and s.endswith(")"):
        inner = s[1:-1]
        parts = inner.split(",")
        if len(parts) != 2:
            raise _InputError(f"expected '(re,im)', got {text!r}")
        try:
            return complex(float(parts[0]), float(parts[1]))
        except ValueError as exc:
            raise _InputError(f"bad complex literal {text!r}: {exc}") from None
    try:
        return complex(s.replace("I", "i").replace("i", "j"))
    except ValueError:
        raise _InputError(f"bad complex literal {text!r}") from None


def _split_top_level(text: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_vector(text: str) -> tuple[complex, ...]:
    """Comma-separated complex entries; parenthesized pairs keep their comma."""
    entries = [p.strip() for p in _split_top_level(text)]
    if any(not p for p in entries):
        raise _InputError(f"empty entry in vector {text!r}")
    return tuple(parse_complex(p) for p in entries)


def _json_to_complex(value) -> complex:
    if isinstance(value, str):
        return parse_complex(value)
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, list) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, dict) and set(value) == {"re", "im"}:
        return complex(float(value["re"]), float(value["im"]))
    raise _InputError(f"cannot read complex value from {value!r}")


def _json_to_vector(value) -> tuple[complex, ...]:
    if not isinstance(value, list):
        raise _InputError(f"expected a list of complex entries, got {value!r}")
    return tuple(_json_to_complex(v) for v in value)


# ---------------------------------------------------------------------------
# Deterministic JSON emission
# ---------------------------------------------------------------------------

def _fmt_float(x) -> str:
    return repr(float(x))


def _c(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _emit(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, complex):
        return _emit(_c(obj))
    if isinstance(obj, dict):
        body = ", ".join(f"{json.dumps(str(k))}: {_emit(v)}" for k, v in obj.items())
        return "{" + body + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_emit(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _record(command: str, inputs: dict, result, diagnostics: Optional[list[str]] = None) -> dict:
    out = {"command": command, "inputs": inputs, "result": result}
    if diagnostics:
        out["diagnostics"] = list(diagnostics)
    return out


def _rel_diff(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------

def _cmd_polylog(args) -> dict:
    if args.order >= 0:
        raise _InputError(f"--order must be a negative integer, got {args.order}")
    z = parse_complex(args.at)
    inputs = {"order": args.order, "at": _c(z), "series": bool(args.series),
              "tol": float(args.tol)}
    closed = polylog_neg_closed(-args.order, z)
    if args.series:
        series = polylog_series(args.order, z, args.tol)
        result = {"closed": _c(closed), "series": _c(series),
                  "difference": abs(closed - series)}
    else:
        result = {"closed": _c(closed)}
    return _record("polylog", inputs, result)


def _cmd_polylog_deriv(args) -> dict:
    if args.n < 1:
        raise _InputError(f"--n must be >= 1, got {args.n}")
    if args.m < 0:
        raise _InputError(f"--m must be >= 0, got {args.m}")
    t = parse_complex(args.at)
    inputs = {"n": args.n, "m": args.m, "at": _c(t), "series": bool(args.series),
              "tol": float(args.tol)}
    closed = polylog_deriv_closed(args.n, args.m, t)
    if args.series:
        series = polylog_deriv_series(args.n, args.m, t, args.tol)
        result = {"closed": _c(closed), "series": _c(series),
                  "difference": abs(closed - series)}
    else:
        result = {"closed": _c(closed)}
    return _record("polylog-deriv", inputs, result)


def _cmd_tables(args) -> dict:
    if not 1 <= args.nmax <= 200:
        raise _InputError(f"n-max must lie in 1..200, got {args.nmax}")
    if args.kind == "eulerian":
        rows = [[str(v) for v in eulerian_row(n)] for n in range(1, args.nmax + 1)]
    else:
        rows = [[str(v) for v in stirling2_row(n)] for n in range(0, args.nmax + 1)]
    inputs = {"kind": args.kind, "nmax": args.nmax}
    return _record("tables", inputs, {"rows": rows})


def _point_payload(p: DomainPoint) -> dict:
    return {"z": [_c(v) for v in p.z], "zeta": [_c(v) for v in p.zeta]}


def _load_pairs(params: KernelParams, path: str) -> list[tuple[DomainPoint, DomainPoint]]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise _InputError("pairs file must hold a JSON array of pair objects")
    pairs = []
    for i, entry in enumerate(data):
        try:
            p = DomainPoint(params, _json_to_vector(entry["z"]), _json_to_vector(entry["zeta"]))
            q = DomainPoint(params, _json_to_vector(entry["z2"]), _json_to_vector(entry["zeta2"]))
        except KeyError as exc:
            raise _InputError(f"pair {i}: missing field {exc}") from None
        pairs.append((p, q))
    return pairs


def _inline_pair(args, params: KernelParams) -> tuple[DomainPoint, DomainPoint]:
    missing = [f for f in ("z", "zeta", "z2", "zeta2") if getattr(args, f) is None]
    if missing:
        raise _InputError(
            "inline evaluation needs --z --zeta --z2 --zeta2 (or use --pairs FILE); "
            f"missing: {', '.join('--' + f for f in missing)}"
        )
    p = DomainPoint(params, parse_vector(args.z), parse_vector(args.zeta))
    q = DomainPoint(params, parse_vector(args.z2), parse_vector(args.zeta2))
    return p, q


def _eval_methods(params, p, q, method: str, tol: float) -> dict:
    values: dict[str, complex] = {}
    if method in ("closed", "all"):
        values["closed"] = bergman_closed(params, p, q)
    if method in ("quotient", "all"):
        values["quotient"] = bergman_quotient(params, p, q)
    if method in ("series", "all"):
        values["series"] = bergman_series(params, p, q, tol)
    result = {name: _c(v) for name, v in values.items()}
    if method == "all":
        names = list(values)
        result["relative_differences"] = {
            f"{a}_vs_{b}": _rel_diff(values[a], values[b])
            for i, a in enumerate(names) for b in names[i + 1:]
        }
    return result


def _cmd_kernel_eval(args):
    params = _params_from(args)
    inputs = {"n": args.n, "m": args.m, "mu": float(args.mu),
              "method": args.method, "tol": float(args.tol)}
    if args.pairs:
        records = []
        for idx, (p, q) in enumerate(_load_pairs(params, args.pairs)):
            pair_inputs = dict(inputs)
            pair_inputs["pair_index"] = idx
            pair_inputs["point_a"] = _point_payload(p)
            pair_inputs["point_b"] = _point_payload(q)
            records.append(_record("kernel eval", pair_inputs,
                                   _eval_methods(params, p, q, args.method, args.tol)))
        return records
    p, q = _inline_pair(args, params)
    inputs["point_a"] = _point_payload(p)
    inputs["point_b"] = _point_payload(q)
    return _record("kernel eval", inputs, _eval_methods(params, p, q, args.method, args.tol))


def _cmd_kernel_oracle(args) -> dict:
    params = _params_from(args)
    p, q = _inline_pair(args, params)
    inputs = {"n": args.n, "m": args.m, "mu": float(args.mu), "tol": float(args.tol),
              "point_a": _point_payload(p), "point_b": _point_payload(q)}
    series = bergman_series(params, p, q, args.tol)
    closed = bergman_closed(params, p, q)
    result = {"series": _c(series), "closed": _c(closed),
              "relative_difference": _rel_diff(series, closed)}
    return _record("kernel oracle", inputs, result)


def _params_from(args) -> KernelParams:
    try:
        return KernelParams(args.n, args.m, args.mu)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _cmd_luqikeng(args) -> dict:
    if args.n < 1 or args.m < 1:
        raise _InputError(f"n and m must be >= 1, got ({args.n}, {args.m})")
    if not args.mu > 0:
        raise _InputError(f"--mu must be positive, got {args.mu}")
    verdict = classify(args.n, args.m, tol=max(args.tol, 1e-14))
    inputs = {"n": args.n, "m": args.m, "witness": bool(args.witness),
              "mu": float(args.mu), "tol": float(args.tol)}
    result = {
        "status": verdict.status.value,
        "provenance": verdict.provenance.value,
        "witness_root": _c(verdict.witness_root) if verdict.witness_root is not None else None,
        "note": verdict.note,
    }
    diagnostics = []
    if args.witness and verdict.status is ZeroStatus.HAS_ZERO:
        params = KernelParams(args.n, args.m, args.mu)
        w = construct_witness(params, verdict.witness_root)
        diag = bergman_closed(params, w.point_a, w.point_a)
        result["witness"] = {
            "point_a": _point_payload(w.point_a),
            "point_b": _point_payload(w.point_b),
            "alpha": _c(w.alpha),
            "kernel_value": _c(w.kernel_value),
            "diagonal_magnitude": abs(diag),
            "kernel_residual_ratio": abs(w.kernel_value) / abs(diag),
        }
    elif args.witness:
        diagnostics.append(f"no witness: verdict is {verdict.status.value}")
    return _record("luqikeng", inputs, result, diagnostics)


def _cmd_zeros_locus(args) -> dict:
    if args.n < 1:
        raise _InputError(f"n must be >= 1, got {args.n}")
    if args.m < 0:
        raise _InputError(f"m must be >= 0, got {args.m}")
    if not 8 <= args.resolution <= 1024:
        raise _InputError(f"resolution must lie in 8..1024, got {args.resolution}")
    table = zero_locus_grid(args.n, args.m, args.resolution)
    lines = ["re,im,modulus"]
    for re_, im_, mod_ in table:
        lines.append(f"{_fmt_float(re_)},{_fmt_float(im_)},{_fmt_float(mod_)}")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    imin = int(table[:, 2].argmin())
    inputs = {"n": args.n, "m": args.m, "resolution": args.resolution, "out": args.out}
    result = {
        "rows": int(table.shape[0]),
        "min_modulus": float(table[imin, 2]),
        "min_modulus_at": {"re": float(table[imin, 0]), "im": float(table[imin, 1])},
    }
    return _record("zeros locus", inputs, result)


# ---------------------------------------------------------------------------
# Wiring
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-12, help="series truncation tolerance")
    p.add_argument("--output", default=None, help="write the payload to this path")
    p.add_argument("--format", choices=["json", "csv"], default="json",
                   help="payload format (csv is reserved for grid export)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyberg",
        description="Bergman kernels of Gaussian-fiber Hartogs domains via polylogarithms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polylog", help="order -n polylogarithm closed form")
    p.add_argument("--order", type=int, required=True, help="negative integer order")
    p.add_argument("--at", required=True, help="complex argument, 'a+bi' or '(a,b)'")
    p.add_argument("--series", action="store_true", help="also run the series oracle")
    _add_common(p)
    p.set_defaults(handler=_cmd_polylog)

    p = sub.add_parser("polylog-deriv", help="m-th derivative of an order -n polylogarithm")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--at", required=True)
    p.add_argument("--series", action="store_true")
    _add_common(p)
    p.set_defaults(handler=_cmd_polylog_deriv)

    p = sub.add_parser("tables", help="exact combinatorial triangles")
    p.add_argument("kind", choices=["eulerian", "stirling"])
    p.add_argument("nmax", type=int)
    _add_common(p)
    p.set_defaults(handler=_cmd_tables)

    pk = sub.add_parser("kernel", help="Bergman kernel evaluation")
    ksub = pk.add_subparsers(dest="kernel_command", required=True)

    p = ksub.add_parser("eval", help="evaluate the kernel at a point pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--method", choices=["closed", "quotient", "series", "all"], default="all")
    p.add_argument("--z", help="first point base vector, comma-separated")
    p.add_argument("--zeta", help="first point fiber vector")
    p.add_argument("--z2", help="second point base vector")
    p.add_argument("--zeta2", help="second point fiber vector")
    p.add_argument("--pairs", help="JSON file with a batch of point pairs")
    _add_common(p)
    p.set_defaults(handler=_cmd_kernel_eval)

    p = ksub.add_parser("oracle", help="series oracle vs closed form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--z")
    p.add_argument("--zeta")
    p.add_argument("--z2")
    p.add_argument("--zeta2")
    _add_common(p)
    p.set_defaults(handler=_cmd_kernel_oracle)

    p = sub.add_parser("luqikeng", help="kernel zero-freeness classification")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--witness", action="store_true",
                   help="serialize explicit witness points for HasZero")
    p.add_argument("--mu", type=float, default=1.0)
    _add_common(p)
    p.set_defaults(handler=_cmd_luqikeng)

    pz = sub.add_parser("zeros", help="zero-locus data export")
    zsub = pz.add_subparsers(dest="zeros_command", required=True)
    p = zsub.add_parser("locus", help="polar modulus grid as CSV")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("resolution", type=int)
    p.add_argument("out", help="CSV output path")
    _add_common(p)
    p.set_defaults(handler=_cmd_zeros_locus)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.format == "csv" and args.command != "zeros":
            raise _InputError("csv output is reserved for grid export; use 'zeros locus'")
        payload = args.handler(args)
        text = _emit(payload) + "\n"
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except _InputError as exc:
        print(f"polyberg: invalid input: {exc}", file=sys.stderr)
        return 2
    except (DomainViolation, LengthMismatch) as exc:
        print(f"polyberg: invalid input: {exc}", file=sys.stderr)
        return 2
    except (NonConvergent, IterationCap, PoleProximity, OverflowError) as exc:
        print(f"polyberg: numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except PolybergError as exc:
        print(f"polyberg: numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"polyberg: i/o failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
