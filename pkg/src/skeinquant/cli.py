"""Command-line entry point with reproducible manifests.

Every run writes (or prints) a manifest describing the inputs, the
conventions version, and the working precision next to its results, and
produces byte-identical output when repeated with the same configuration.
Exit status is zero only when every requested check passes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import __version__
from .diagrams import BraidWord, LinkDiagram, braid_to_diagram
from .bracket import kauffman_bracket
from .errors import SkeinQuantError
from .geom import QuantizationContext
from .jones import CATALOG_BRAIDS, KnotPresentation, colored_jones, colored_jones_exact
from .knotstate import (knot_state, l2_norm_formula, volume_sequence,
                        write_volume_csv)
from .roots import RootContext
from .tqft import MappingClassWord, rep_S, rep_T, rt_invariant, sl2z_rep

CONVENTIONS_VERSION = "1"


@dataclass
class RunConfig:
    """One resolved invocation: command, parameters, precision, output."""

    command: str
    params: dict = field(default_factory=dict)
    precision_bits: int = 53
    out: Optional[str] = None
    fmt: str = "json"


def _manifest(cfg: RunConfig) -> dict:
    return {
        "command": cfg.command,
        "parameters": {k: cfg.params[k] for k in sorted(cfg.params)},
        "precision_bits": cfg.precision_bits,
        "conventions_version": CONVENTIONS_VERSION,
        "package_version": __version__,
        "threads": int(os.environ.get("SKEINQUANT_THREADS", "1")),
    }


def _complex_pair(z: complex):
    return {"re": float(z.real), "im": float(z.imag)}


def _matrix_pairs(m: np.ndarray):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def _emit(cfg: RunConfig, payload: dict) -> None:
    doc = {"manifest": _manifest(cfg), "result": payload}
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _knot_from_args(args) -> KnotPresentation:
    if args.knot:
        return KnotPresentation.from_catalog(args.knot)
    if args.braid:
        if not args.strands:
            raise SkeinQuantError("--braid requires --strands")
        return KnotPresentation.from_braid(
            BraidWord.from_text(args.braid, args.strands).word, args.strands)
    raise SkeinQuantError("provide --knot or --braid")


def _parse_tau(text: str) -> complex:
    return complex(text.replace("i", "j").replace(" ", ""))


# -- commands ---------------------------------------------------------------

def _cmd_jones(cfg: RunConfig, args) -> int:
    K = _knot_from_args(args)
    if args.exact:
        poly = colored_jones_exact(K, args.n)
        _emit(cfg, {"knot": K.name, "n": args.n, "backend": "exact",
                    "polynomial": poly.format("t")})
        return 0
    ctx = RootContext(args.r, precision=cfg.precision_bits)
    val = colored_jones(K, args.n, ctx, backend=args.backend)
    _emit(cfg, {"knot": K.name, "n": args.n, "r": args.r,
                "re": float(val.value.real), "im": float(val.value.imag),
                "backend": val.backend})
    return 0


def _cmd_bracket(cfg: RunConfig, args) -> int:
    if args.pd:
        with open(args.pd) as fh:
            diagram = LinkDiagram.from_pd_text(fh.read())
    else:
        if not (args.braid and args.strands):
            raise SkeinQuantError("provide --pd FILE or --braid with --strands")
        diagram = braid_to_diagram(BraidWord.from_text(args.braid, args.strands))
    poly = kauffman_bracket(diagram)
    _emit(cfg, {"bracket": poly.format("A"),
                "crossings": diagram.num_crossings,
                "components": diagram.num_components})
    return 0


def _cmd_tqft(cfg: RunConfig, args) -> int:
    r = args.r
    payload = {"r": r}
    if args.emit == "matrices" or args.emit is None:
        payload["rep_T"] = _matrix_pairs(rep_T(r))
        payload["rep_S"] = _matrix_pairs(rep_S(r))
    if args.word:
        word = MappingClassWord.from_text(args.word)
        payload["word"] = list(word.word)
        payload["word_matrix"] = [list(row) for row in word.matrix]
        payload["rep_word"] = _matrix_pairs(sl2z_rep(word, r))
    _emit(cfg, payload)
    return 0


def _cmd_rt(cfg: RunConfig, args) -> int:
    K = None if args.surgery == "empty" else KnotPresentation.from_catalog(args.surgery)
    val = rt_invariant(K, args.framing, args.r)
    _emit(cfg, {"surgery": args.surgery, "framing": args.framing, "r": args.r,
                "value": _complex_pair(val)})
    return 0


def _cmd_geom_verify(cfg: RunConfig, args) -> int:
    from .verify import verification_report
    ctx = QuantizationContext(args.r, _parse_tau(args.tau))
    report = verification_report(ctx, include_modular=not args.skip_modular)
    _emit(cfg, report)
    return 0 if report["pass"] else 1


def _cmd_knot_state(cfg: RunConfig, args) -> int:
    K = _knot_from_args(args)
    state = knot_state(K, args.r, backend=args.backend)
    norm = l2_norm_formula(K, args.r, precision_bits=cfg.precision_bits,
                           backend=args.backend)
    _emit(cfg, {"knot": K.name, "r": args.r,
                "coeffs": [_complex_pair(c) for c in state.coeffs.coeffs],
                "norm_sq": norm.norm_sq, "norm": norm.norm,
                "argmax_n": norm.argmax_n})
    return 0


def _cmd_volume_seq(cfg: RunConfig, args) -> int:
    K = _knot_from_args(args)
    r_list = list(range(args.r_min, args.r_max + 1, args.step))
    rows = volume_sequence(K, r_list,
                           precision_bits=None if cfg.precision_bits == 53 else cfg.precision_bits,
                           ref_vol=args.ref_vol)
    if not args.out:
        raise SkeinQuantError("volume-seq requires --out CSV path")
    write_volume_csv(rows, args.out)
    manifest_path = args.out + ".manifest.json"
    with open(manifest_path, "w") as fh:
        json.dump(_manifest(cfg), fh, sort_keys=True, indent=2)
        fh.write("\n")
    sys.stdout.write(f"wrote {len(rows)} rows to {args.out}\n")
    return 0


# -- argument plumbing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="skeinquant",
        description="Torus quantum invariants: exact skein arithmetic and "
                    "theta-section quantization, cross-verified.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with default argument values (flags win)")
    common.add_argument("--precision-bits", type=int, default=53, dest="precision_bits")
    common.add_argument("--out", help="write the result file here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=argparse.ArgumentParser)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    sp = add_parser("jones", help="colored Jones evaluations")
    sp.add_argument("--knot", choices=sorted(CATALOG_BRAIDS))
    sp.add_argument("--braid", help="signed generator word, e.g. '1 1 1'")
    sp.add_argument("--strands", type=int)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, default=5)
    sp.add_argument("--exact", action="store_true", help="print the exact polynomial in t")
    sp.add_argument("--backend", default="auto",
                    choices=["auto", "exact", "rmatrix", "catalog"])
    sp.set_defaults(func=_cmd_jones)

    sp = add_parser("bracket", help="exact bracket of a diagram or braid closure")
    sp.add_argument("--pd", help="path to a planar-diagram text file")
    sp.add_argument("--braid")
    sp.add_argument("--strands", type=int)
    sp.set_defaults(func=_cmd_bracket)

    sp = add_parser("tqft", help="torus representation matrices")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--emit", choices=["matrices"])
    sp.add_argument("--word", help="mapping class word, e.g. 'S T S'")
    sp.set_defaults(func=_cmd_tqft)

    sp = add_parser("rt", help="surgery invariant of a closed manifold")
    sp.add_argument("--surgery", default="empty",
                    choices=["empty"] + sorted(CATALOG_BRAIDS))
    sp.add_argument("--framing", type=int, default=0)
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(func=_cmd_rt)

    sp = add_parser("geom-verify", help="run the geometric verification suite")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--tau", default="i")
    sp.add_argument("--skip-modular", action="store_true")
    sp.set_defaults(func=_cmd_geom_verify)

    sp = add_parser("knot-state", help="state coefficients and norms")
    sp.add_argument("--knot", choices=sorted(CATALOG_BRAIDS))
    sp.add_argument("--braid")
    sp.add_argument("--strands", type=int)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--backend", default="auto",
                    choices=["auto", "exact", "rmatrix", "catalog"])
    sp.set_defaults(func=_cmd_knot_state)

    sp = add_parser("volume-seq", help="norm-growth sequence to CSV")
    sp.add_argument("--knot", choices=sorted(CATALOG_BRAIDS))
    sp.add_argument("--braid")
    sp.add_argument("--strands", type=int)
    sp.add_argument("--r-min", type=int, required=True, dest="r_min")
    sp.add_argument("--r-max", type=int, required=True, dest="r_max")
    sp.add_argument("--step", type=int, default=10)
    sp.add_argument("--ref-vol", type=float, default=None, dest="ref_vol",
                    help="reference volume for non-catalog knots")
    sp.set_defaults(func=_cmd_volume_seq)
    return p


def _apply_config_file(parser: argparse.ArgumentParser, argv) -> list:
    """Defaults from --config JSON; explicit flags keep priority."""
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    path = argv[idx + 1]
    with open(path) as fh:
        defaults = json.load(fh)
    if not isinstance(defaults, dict):
        raise SkeinQuantError("config file must hold a JSON object")
    defaults = {k.replace("-", "_"): v for k, v in defaults.items()}
    for action in parser._subparsers._group_actions:
        for sp in action.choices.values():
            usable = {}
            for a in sp._actions:
                if a.dest in defaults:
                    usable[a.dest] = defaults[a.dest]
                    a.required = False
            sp.set_defaults(**usable)
    return argv


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config_file(parser, argv)
        args = parser.parse_args(argv)
        cfg = RunConfig(command=args.command,
                        params={k: v for k, v in vars(args).items()
                                if k not in ("func", "command", "config", "out")
                                and v is not None},
                        precision_bits=args.precision_bits,
                        out=args.out)
        return args.func(cfg, args)
    except SkeinQuantError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
