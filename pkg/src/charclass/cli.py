"""Command line front end.

    charclass --input curve.txt --classes csm --classes euler --format json

Reads one homogeneous ideal in the vars:/ideal: text format, computes the
requested classes, and prints either a readable text report or JSON shaped
like JSON_SCHEMA below.  Results land on stdout, errors on stderr.  Exit
codes: 0 on success, 2 for anything wrong with the input or flags, 3 when
randomized certification gave up (budget or genericity); the remedy for 3
is a different --seed, more --retries, or a larger --prime.

Identical input file, --prime, --seed, and --trials produce byte-identical
JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characteristic import compute_report
from .chow import ChowClass
from .errors import BudgetExceededError, CharclassError, GenericityError, InputError, ParseError
from .ideals import parse_ideal_file
from .segre import GenericityContext

CLASS_CHOICES = ("segre", "sm-segre", "csm", "fulton", "milnor", "euler", "all")

_CLASS_KEYS = {
    "segre": ("segre",),
    "sm-segre": ("sm_segre",),
    "csm": ("csm",),
    "fulton": ("fulton",),
    "milnor": ("milnor_measure", "milnor"),
}

_ALL_KEYS = ("segre", "sm_segre", "csm", "fulton", "milnor_measure", "milnor")

JSON_SCHEMA = {
    "type": "object",
    "required": ["ambient_dim", "variables", "classes", "euler", "meta"],
    "additionalProperties": False,
    "properties": {
        "ambient_dim": {"type": "integer", "minimum": 1},
        "variables": {
            "type": "array",
            "items": {"type": "string"},
            "minItems": 2,
        },
        "classes": {
            "type": "object",
            "additionalProperties": False,
            "patternProperties": {
                "^(segre|sm_segre|csm|fulton|milnor_measure|milnor)$": {
                    "type": "object",
                    "required": ["coeffs_by_codim"],
                    "additionalProperties": False,
                    "properties": {
                        "coeffs_by_codim": {
                            "type": "array",
                            "items": {"type": "integer"},
                        }
                    },
                }
            },
        },
        "euler": {"type": ["integer", "null"]},
        "meta": {
            "type": "object",
            "required": ["prime", "seed", "trials"],
            "additionalProperties": False,
            "properties": {
                "prime": {"type": "integer"},
                "seed": {"type": "integer"},
                "trials": {"type": "integer"},
            },
        },
    },
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charclass",
        description="Characteristic classes of a projective scheme "
        "from a homogeneous ideal.",
    )
    parser.add_argument("--input", required=True, help="ideal description file")
    parser.add_argument(
        "--classes",
        action="append",
        choices=CLASS_CHOICES,
        help="which classes to compute (repeatable; default: all)",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--prime", type=int, default=32003, help="working prime")
    parser.add_argument("--seed", type=int, default=0, help="master random seed")
    parser.add_argument(
        "--trials", type=int, default=3, help="independent trials that must agree"
    )
    parser.add_argument(
        "--retries", type=int, default=5, help="redraws allowed per trial"
    )
    parser.add_argument(
        "--union-mode",
        choices=("product", "intersection"),
        default="product",
        help="how generator subsets form union hypersurfaces "
        "(intersection mode exists for cross-validation)",
    )
    return parser


def _requested_keys(class_args) -> tuple[tuple[str, ...], bool]:
    if not class_args or "all" in class_args:
        return _ALL_KEYS, True
    keys: list[str] = []
    want_euler = False
    for name in class_args:
        if name == "euler":
            want_euler = True
            continue
        for key in _CLASS_KEYS[name]:
            if key not in keys:
                keys.append(key)
    return tuple(keys), want_euler


def render_json(report, keys, want_euler: bool) -> str:
    payload = {
        "ambient_dim": report.ambient_dim,
        "variables": list(report.variables),
        "classes": {
            key: {"coeffs_by_codim": list(getattr(report, key).coeffs)}
            for key in keys
        },
        "euler": report.euler if want_euler else None,
        "meta": {
            "prime": report.context.prime,
            "seed": report.context.seed,
            "trials": report.context.trials,
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_text(report, keys, want_euler: bool) -> str:
    lines = [
        f"ambient space: P^{report.ambient_dim} "
        f"(variables {', '.join(report.variables)})"
    ]
    width = max((len(k) for k in keys), default=6)
    for key in keys:
        cls: ChowClass = getattr(report, key)
        lines.append(f"{key:<{width}} : {cls.format_h()}")
        lines.append(f"{'':<{width}} = {cls.format_brackets()}")
    if want_euler:
        lines.append(f"euler characteristic: {report.euler}")
    ctx = report.context
    lines.append(f"prime={ctx.prime} seed={ctx.seed} trials={ctx.trials}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ideal = parse_ideal_file(args.input)
        ctx = GenericityContext(
            prime=args.prime,
            seed=args.seed,
            trials=args.trials,
            retries=args.retries,
        )
        degree_load = 2 * sum(ideal.degrees)
        if ctx.prime <= degree_load:
            raise InputError(
                f"prime {ctx.prime} is too small for this input; "
                f"need more than {degree_load}"
            )
        report = compute_report(ideal, ctx, union_mode=args.union_mode)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    except (ParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GenericityError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CharclassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    keys, want_euler = _requested_keys(args.classes)
    if args.format == "json":
        sys.stdout.write(render_json(report, keys, want_euler))
    else:
        sys.stdout.write(render_text(report, keys, want_euler))
    return 0


if __name__ == "__main__":
    sys.exit(main())
