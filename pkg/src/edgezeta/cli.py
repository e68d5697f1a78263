"""Command-line interface: ``edgezeta {orbits,luo,zeta,verify}``.

``--rank`` is always the Coxeter rank: A3 is GL_4, C3 is Sp_6. Exit status is
0 on success, 1 when ``verify`` finds a mismatch, 2 for usage errors and
requests outside the supported range.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .luo import half_period
from .typeorbits import TypeOrbit, enumerate_orbits
from .weyl import FAMILIES, build_root_system
from . import zeta as zmod

ARROW = " → "


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class OrbitRow:
    orbit: TypeOrbit
    m: int | None = None


@dataclass(frozen=True)
class VerifyRow:
    L: int
    oracle: int
    predicted: int

    @property
    def ok(self) -> bool:
        return self.oracle == self.predicted


# ---------------------------------------------------------------------------
# argument handling


def _family_rank(args) -> tuple[str, int]:
    fam = args.family.strip().upper()
    m = re.fullmatch(r"([A-G])(\d+)?", fam)
    if not m:
        raise UsageError(f"unknown family {args.family!r}; expected one of {', '.join(FAMILIES)}")
    family, inline_rank = m.group(1), m.group(2)
    rank = args.rank
    if inline_rank is not None:
        if rank is not None and rank != int(inline_rank):
            raise UsageError(f"--family {args.family} conflicts with --rank {rank}")
        rank = int(inline_rank)
    if rank is None:
        raise UsageError("--rank is required (or use a combined form such as E8)")
    try:
        build_root_system(family, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return family, rank


def _orbit_pair(args) -> tuple[int, int] | None:
    if args.orbit is None:
        return None
    try:
        r, s = (int(x) for x in args.orbit.split(","))
    except ValueError:
        raise UsageError(f"--orbit expects 'r,s', got {args.orbit!r}") from None
    if r == s:
        raise UsageError("--orbit needs two distinct labels")
    return r, s


def _select(orbits, pair):
    if pair is None:
        return list(orbits)
    chosen = [o for o in orbits if pair in o.pairs]
    if not chosen:
        raise UsageError(f"no orbit contains the pair {pair}")
    return chosen


# ---------------------------------------------------------------------------
# orbits / luo


def orbit_rows(family: str, rank: int, with_m: bool, pair=None) -> list[OrbitRow]:
    rs = build_root_system(family, rank)
    orbits = _select(enumerate_orbits(rs), pair)
    return [OrbitRow(o, half_period(rs, o).m if with_m else None) for o in orbits]


def emit_orbits(rows: list[OrbitRow], family: str, rank: int, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "family": family,
            "rank": rank,
            "orbits": [
                {"cycle": list(r.orbit.cycle), "c": r.orbit.c, **({"m": r.m} if r.m is not None else {})}
                for r in rows
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    texts = [r.orbit.text(ARROW) for r in rows]
    if rows and rows[0].m is not None:
        width = max(len(t) for t in texts)
        return "".join(f"{t.ljust(width)}  {r.m}\n" for t, r in zip(texts, rows))
    return "".join(t + "\n" for t in texts)


def parse_orbits(text: str, fmt: str) -> list[OrbitRow]:
    if fmt == "json":
        doc = json.loads(text)
        return [OrbitRow(TypeOrbit(tuple(o["cycle"])), o.get("m")) for o in doc["orbits"]]
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        # with m, the cycle column is separated from m by at least two spaces
        cols = re.split(r"\s{2,}", line.strip())
        cyc = tuple(int(x) for x in cols[0].split(ARROW.strip()))
        m = int(cols[1]) if len(cols) > 1 else None
        rows.append(OrbitRow(TypeOrbit(cyc), m))
    return rows


# ---------------------------------------------------------------------------
# verify


def verify_rows(family: str, rank: int, q: int, lmax: int, pair=None) -> list[VerifyRow]:
    from . import oracle

    if family not in ("A", "C"):
        raise UsageError(f"no oracle for family {family} (A and C only)")
    n = rank + 1 if family == "A" else rank
    try:
        sk = oracle.build_x2(family, n, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    factors = zmod.full_edge_zeta(family, rank)
    types = None
    if pair is not None:
        factors = [f for f in factors if pair in f.orbit.pairs]
        if not factors:
            raise UsageError(f"no orbit contains the pair {pair}")
        types = set(factors[0].orbit.pairs)
    counts = oracle.closed_walk_counts(sk, lmax, types=types)
    return [VerifyRow(L, counts[L - 1], zmod.predicted_closed_walks(factors, L, q)) for L in range(1, lmax + 1)]


def emit_verify(rows: list[VerifyRow], family: str, rank: int, q: int, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "family": family,
            "rank": rank,
            "q": q,
            "results": [
                {"L": r.L, "oracle": r.oracle, "predicted": r.predicted, "pass": r.ok} for r in rows
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    return "".join(
        f"L={r.L} oracle={r.oracle} predicted={r.predicted} {'PASS' if r.ok else 'FAIL'}\n" for r in rows
    )


def parse_verify(text: str, fmt: str) -> list[VerifyRow]:
    if fmt == "json":
        return [VerifyRow(r["L"], r["oracle"], r["predicted"]) for r in json.loads(text)["results"]]
    rows = []
    for line in text.splitlines():
        m = re.fullmatch(r"L=(\d+) oracle=(\d+) predicted=(\d+) (PASS|FAIL)", line.strip())
        if m:
            rows.append(VerifyRow(int(m.group(1)), int(m.group(2)), int(m.group(3))))
    return rows


# ---------------------------------------------------------------------------
# zeta


def zeta_factors(family: str, rank: int, pair=None):
    try:
        factors = zmod.full_edge_zeta(family, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if pair is not None:
        factors = [f for f in factors if pair in f.orbit.pairs]
        if not factors:
            raise UsageError(f"no orbit contains the pair {pair}")
    return factors


def emit_zeta(factors, family: str, rank: int, fmt: str, q=None, lmax: int = 12) -> str:
    if fmt == "json":
        doc = json.loads(zmod.emit_json(factors, family, rank))
        if q is not None:
            doc["predicted"] = {
                "q": q,
                "counts": [zmod.predicted_closed_walks(factors, L, q) for L in range(1, lmax + 1)],
            }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    out = zmod.emit_text(factors)
    if q is not None:
        out += "".join(
            f"# N({L}) at q={q}: {zmod.predicted_closed_walks(factors, L, q)}\n" for L in range(1, lmax + 1)
        )
    return out


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgezeta",
        description="Type orbits, half-periods m and edge zeta factors of spherical buildings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "orbits": "list the type orbits of the next-type map",
        "luo": "list the type orbits with their half-period m",
        "zeta": "factored inverse edge zeta function (families A, B, C)",
        "verify": "compare closed-walk counts of a finite building with the closed form",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, description=text)
        p.add_argument("--family", required=True, help="A-G, optionally with the rank appended (E8)")
        p.add_argument(
            "--rank",
            type=int,
            help="Coxeter rank: A r is GL_(r+1), C n is Sp_2n (ambient dimension 2n)",
        )
        p.add_argument("--orbit", help="restrict to the orbit containing the type pair 'r,s'")
        p.add_argument("--q", type=int, help="field size (prime); required for verify")
        p.add_argument("--max-len", type=int, dest="max_len", help="largest cycle length L (default 12)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write to this file instead of stdout")
    return parser


def run(args) -> tuple[int, str]:
    family, rank = _family_rank(args)
    pair = _orbit_pair(args)
    lmax = args.max_len if args.max_len is not None else 12
    if lmax < 1:
        raise UsageError("--max-len must be positive")
    if args.command in ("orbits", "luo"):
        rows = orbit_rows(family, rank, args.command == "luo", pair)
        return 0, emit_orbits(rows, family, rank, args.format)
    if args.command == "zeta":
        factors = zeta_factors(family, rank, pair)
        return 0, emit_zeta(factors, family, rank, args.format, args.q, lmax)
    if args.q is None or args.max_len is None:
        raise UsageError("verify requires --q and --max-len")
    if args.max_len > 20:
        raise UsageError("--max-len is limited to 20")
    rows = verify_rows(family, rank, args.q, args.max_len, pair)
    status = 0 if all(r.ok for r in rows) else 1
    return status, emit_verify(rows, family, rank, args.q, args.format)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status, text = run(args)
    except UsageError as exc:
        print(f"edgezeta: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
