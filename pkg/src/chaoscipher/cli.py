"""Command-line front end.

Exit status: 0 on success, 2 for usage or argument errors, 3 for domain and
validation errors (bad key, bad config, out-of-range parameters).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis
from .chaos import LogisticParams
from .config import DEFAULT_CONFIG, parse_config
from .errors import ArgumentError, DomainError
from .report import ReportFormat, format_cell, orbit_dump, render_table
from .schemes import SchemeId, decrypt, encrypt, make_key

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _flip(text):
    if text == "all":
        return None
    try:
        byte, bit = text.split(":")
        return analysis.FlipSpec(int(byte), int(bit))
    except (ValueError, ArgumentError):
        raise argparse.ArgumentTypeError(f"expected BYTE:BIT or 'all', got {text!r}") from None


def _read_input(path) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_output(path, data: bytes):
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _emit(text: str):
    sys.stdout.write(text)
    sys.stdout.flush()


def cmd_encrypt(args, config):
    c = encrypt(args.scheme, make_key(args.key), _read_input(args.input), config)
    _write_output(args.output, (c.hex() + "\n").encode("ascii"))


def cmd_decrypt(args, config):
    raw = _read_input(args.input).decode("ascii", errors="replace")
    try:
        c = bytes.fromhex("".join(raw.split()))
    except ValueError:
        raise ArgumentError("decrypt input is not valid hex") from None
    _write_output(args.output, decrypt(args.scheme, make_key(args.key), c, config))


def cmd_analyze(args, config):
    row = analysis.analyze_row(
        args.scheme, make_key(args.key), args.text.encode("utf-8"), args.flip,
        config, width=args.width, n_out=args.nout,
    )
    _emit(render_table([row], args.format))


def cmd_sweep(args, config):
    step = args.step if args.step is not None else config.key_step
    domain = analysis.KeyDomain(args.lo, args.hi, step)
    p = args.text.encode("utf-8")
    if args.flip is not None:
        args.flip.apply(p)
    lines = ["key,ciphertext_hex,pt_sensitivity_pct,key_sensitivity_pct"]
    for key in analysis.enumerate_keys(domain):
        if args.flip is None:
            pt = analysis.mean_plaintext_sensitivity(args.scheme, key, p, config)
        else:
            pt = analysis.plaintext_sensitivity(args.scheme, key, p, args.flip, config)
        ks = analysis.key_sensitivity(args.scheme, key, p, config=config)
        c = encrypt(args.scheme, key, p, config)
        lines.append(f"{key},{c.hex()},{format_cell(pt)},{format_cell(ks)}")
    _emit("\n".join(lines) + "\n")


def cmd_identify(args, config):
    domain = analysis.key_domain(make_key(args.key), args.width, config.key_step)
    verdict, pairs = analysis.identifiability(
        args.scheme, args.text.encode("utf-8"), domain, args.nout, config
    )
    result = {
        "scheme": args.scheme.value,
        "domain": str(domain),
        "keys": len(domain),
        "n_out": args.nout,
        "verdict": verdict,
        "collisions": [[str(a), str(b)] for a, b in pairs],
    }
    _emit(json.dumps(result, indent=2) + "\n")


def cmd_kpa(args, config):
    key = make_key(args.key)
    p = args.text.encode("utf-8")
    if not 0 <= args.prefix_len <= len(p):
        raise ArgumentError(f"--prefix-len must be in 0..{len(p)}")
    domain = analysis.key_domain(key, args.width, config.key_step)
    c = encrypt(args.scheme, key, p, config)
    found = analysis.kpa_bruteforce(args.scheme, c, p[: args.prefix_len], domain, config)
    result = {
        "scheme": args.scheme.value,
        "domain": str(domain),
        "keys": len(domain),
        "prefix_len": args.prefix_len,
        "candidates": len(found),
        "robust": len(found) != 1,
        "candidate_keys": [str(k) for k in found],
    }
    _emit(json.dumps(result, indent=2) + "\n")


def cmd_orbit(args, config):
    text = orbit_dump(LogisticParams(args.r, args.x0), args.n, args.burn_in)
    _write_output(args.output, text.encode("ascii"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE", default=argparse.SUPPRESS,
                        help="key=value file overriding scheme defaults")

    parser = argparse.ArgumentParser(
        prog="chaoscipher",
        description="Logistic-map stream ciphers and their cryptanalysis.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def scheme_cmd(name, func, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.add_argument("--scheme", required=True, type=SchemeId,
                       choices=list(SchemeId), metavar="logistic|nlfsr|mnlfsr")
        p.set_defaults(func=func)
        return p

    p = scheme_cmd("encrypt", cmd_encrypt, "encrypt raw bytes to hex")
    p.add_argument("--key", required=True, type=float)
    p.add_argument("--in", dest="input", metavar="FILE")
    p.add_argument("--out", dest="output", metavar="FILE")

    p = scheme_cmd("decrypt", cmd_decrypt, "decrypt hex to raw bytes")
    p.add_argument("--key", required=True, type=float)
    p.add_argument("--in", dest="input", metavar="FILE")
    p.add_argument("--out", dest="output", metavar="FILE")

    p = scheme_cmd("analyze", cmd_analyze, "one analysis-table row")
    p.add_argument("--key", required=True, type=float)
    p.add_argument("--text", required=True)
    p.add_argument("--flip", type=_flip, default=analysis.FlipSpec(),
                   help="BYTE:BIT to invert, or 'all' to average every single-bit flip")
    p.add_argument("--format", type=ReportFormat, default=ReportFormat.CSV,
                   choices=list(ReportFormat), metavar="csv|json|markdown")
    p.add_argument("--width", type=float, default=0.20)
    p.add_argument("--nout", type=int, choices=(1, 2), default=2)

    p = scheme_cmd("sweep", cmd_sweep, "per-key ciphertext and sensitivities")
    p.add_argument("--lo", required=True, type=float)
    p.add_argument("--hi", required=True, type=float)
    p.add_argument("--step", type=float)
    p.add_argument("--text", required=True)
    p.add_argument("--flip", type=_flip, default=analysis.FlipSpec())

    p = scheme_cmd("identify", cmd_identify, "identifiability over a key window")
    p.add_argument("--key", required=True, type=float)
    p.add_argument("--width", type=float, default=0.20)
    p.add_argument("--nout", type=int, choices=(1, 2), default=2)
    p.add_argument("--text", required=True)

    p = scheme_cmd("kpa", cmd_kpa, "known-plaintext brute force over a key window")
    p.add_argument("--key", required=True, type=float)
    p.add_argument("--text", required=True)
    p.add_argument("--prefix-len", required=True, type=int)
    p.add_argument("--width", type=float, default=0.20)

    p = sub.add_parser("orbit", help="dump a logistic-map orbit as CSV", parents=[common])
    p.add_argument("--r", required=True, type=float)
    p.add_argument("--x0", required=True, type=float)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--burn-in", type=int, default=0)
    p.add_argument("--out", dest="output", metavar="FILE")
    p.set_defaults(func=cmd_orbit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = DEFAULT_CONFIG
        if getattr(args, "config", None):
            config = parse_config(Path(args.config).read_text())
        args.func(args, config)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
