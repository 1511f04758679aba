"""Command-line front end: counting, enumeration, invariant queries, and
verification runs.

Exit codes: 0 success, 2 usage/parse error, 3 domain violation,
4 verification failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Iterable, List, Optional, Sequence, Tuple

from . import classify, counting, gl2, orbits, words
from .bilinear import standard_space
from .dd import dd_classifies
from .classify import Action
from .words import InvalidWordError, Surface, WordSyntaxError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_surface_range(spec: str) -> List[Surface]:
    """``T3``, ``N7``, or an inclusive range like ``N2..N7``."""
    if ".." in spec:
        lo_text, hi_text = spec.split("..", 1)
        lo = Surface.parse(lo_text.strip())
        hi_text = hi_text.strip()
        if hi_text and hi_text[0] not in "TN":
            hi_text = ("T" if lo.orientable else "N") + hi_text
        hi = Surface.parse(hi_text)
        if lo.orientable != hi.orientable or hi.genus < lo.genus:
            raise WordSyntaxError(f"bad surface range {spec!r}")
        return [Surface(lo.orientable, g) for g in range(lo.genus, hi.genus + 1)]
    return [Surface.parse(spec.strip())]


def _fmt_dd(value) -> str:
    if value is None:
        return "NA"
    return ",".join(str(x) for x in value.as_tuple())


def _record_line(action: Action) -> str:
    tax = action.taxonomy
    fields = [
        f"surface={action.surface.name}",
        f"word={words.format_word(action.word)}",
        f"F={tax.f if tax else 'NA'}",
        f"C={tax.c if tax else 'NA'}",
        f"C+={tax.cplus if tax else 'NA'}",
        f"C-={tax.cminus if tax else 'NA'}",
        f"Q={tax.q.value if tax else 'NA'}",
        f"eps={action.epsilon.value if action.epsilon else 'NA'}",
        f"dd={_fmt_dd(action.dd)}",
    ]
    return " ".join(fields)


def _table_lines(r: int) -> List[str]:
    """Appendix-style table: one line per non-empty taxonomy row, with
    negative/positive multiplicities and representative words."""
    lines = [f"N{r} | - | + | - | +"]
    for tax, neg, pos in classify.taxonomy_cells(r):
        if not neg and not pos:
            continue
        lines.append(
            " | ".join(
                [
                    tax.label(),
                    str(len(neg)) if neg else "",
                    str(len(pos)) if pos else "",
                    ", ".join(words.format_word(w) for w in neg),
                    ", ".join(words.format_word(w) for w in pos),
                ]
            )
        )
    return lines


def cmd_count(args: argparse.Namespace) -> int:
    surfaces = _parse_surface_range(args.surfaces)
    with_total = args.include_trivial
    if surfaces[0].orientable:
        print("g total nontrivial" if with_total else "g nontrivial")
        for s in surfaces:
            total = counting.total_count(s)
            row = f"T{s.genus} {total} {total - 1}" if with_total else f"T{s.genus} {total - 1}"
            print(row)
    else:
        print("r A B Phi- Phi+ Phi total" if with_total else "r A B Phi- Phi+ Phi")
        for s in surfaces:
            rep = counting.phi_counts(s.genus)
            if rep.total != counting.total_count(s):
                raise CliError(f"count mismatch at N{s.genus}", EXIT_VERIFY)
            row = (
                f"N{rep.r} {rep.A} {rep.B} {rep.phi_minus} {rep.phi_plus} {rep.phi}"
            )
            print(f"{row} {rep.total}" if with_total else row)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    surfaces = _parse_surface_range(args.surfaces)
    for s in surfaces:
        if args.tables:
            if s.orientable:
                raise CliError("tables are defined for N_r only", EXIT_USAGE)
            for line in _table_lines(s.genus):
                print(line)
            print()
            continue
        actions = classify.enumerate_surface(s, include_trivial=args.include_trivial)
        for a in actions:
            if args.format == "record":
                print(_record_line(a))
            else:
                tax = repr(a.taxonomy) if a.taxonomy else "trivial"
                eps = a.epsilon.value if a.epsilon else "-"
                ddv = _fmt_dd(a.dd)
                print(f"{a.surface.name} {tax} eps={eps} dd={ddv} {words.format_word(a.word)}")
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    w = words.parse_word(args.word)
    action = Action.from_word(w)
    print(f"word={words.format_word(w)}")
    print(f"beta={words.beta(w)}")
    print(f"surface={action.surface.name}")
    if action.taxonomy:
        print(f"taxonomy={action.taxonomy!r}")
        print(f"eps={action.epsilon.value}")
    else:
        print("taxonomy=trivial")
    print(f"dd={_fmt_dd(action.dd)}")
    return EXIT_OK


def cmd_gl2(args: argparse.Namespace) -> int:
    m = gl2.IntMatrix2(args.a, args.b, args.c, args.d)
    if not gl2.gl2_is_involution(m):
        raise CliError(f"{m!r} is not an involution", EXIT_DOMAIN)
    cls = gl2.gl2_class(m)
    print(cls.value)
    if cls in (gl2.Gl2Class.S_CLASS, gl2.Gl2Class.T_CLASS):
        _, witness = gl2.gl2_reduce(m)
        print(f"witness {witness!r}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


def _verify_orbits(n_max: int) -> Iterable[Tuple[str, bool]]:
    for n in range(2, n_max + 1):
        expected = 3 if n == 2 else 4
        got = orbits.orbit_census("orthogonal", n)
        yield f"census orthogonal n={n}: {got} orbits (expect {expected})", got == expected
    for n in range(2, n_max + 1, 2):
        got = orbits.orbit_census("symplectic", n)
        yield f"census symplectic n={n}: {got} orbits (expect 2)", got == 2


def _verify_generators(n_max: int) -> Iterable[Tuple[str, bool]]:
    if not 1 <= n_max <= 6:
        raise CliError("--n must lie in 1..6 (exhaustive-search bound)", EXIT_USAGE)
    for n in range(1, n_max + 1):
        ok = orbits.verify_orthogonal_generators(n)
        yield f"orthogonal group generated by permutations(+block) n={n}", ok


def _verify_dd(max_dim: int) -> Iterable[Tuple[str, bool]]:
    if not 2 <= max_dim <= 6:
        raise CliError("--max-dim must lie in 2..6 (exhaustive-search bound)", EXIT_USAGE)
    for n in range(2, max_dim + 1):
        space = standard_space("orthogonal", n)
        yield f"DD classifies orthogonal dim {n}", dd_classifies(space, bound=max_dim)
    for n in range(2, max_dim + 1, 2):
        space = standard_space("symplectic", n)
        yield f"DD classifies symplectic dim {n}", dd_classifies(space, bound=max_dim)


def _verify_counts(max_r: int) -> Iterable[Tuple[str, bool]]:
    ok = True
    for r in range(1, max_r + 1):
        try:
            rep = counting.phi_counts(r)
        except counting.CountMismatch:
            ok = False
            break
        if rep.A + rep.B != counting.ab_sum_closed(r):
            ok = False
            break
        if rep.total != counting.total_count(Surface(False, r)):
            ok = False
            break
    yield f"three-way A/B agreement and totals r<={max_r}", ok
    enum_max = min(max_r, 80)
    ok2 = all(
        classify.count_nonorientable(r) == counting.total_count(Surface(False, r))
        for r in range(1, enum_max + 1)
    )
    yield f"enumeration count matches closed form r<={enum_max}", ok2


def _verify_gl2(trials: int, seed: int) -> Iterable[Tuple[str, bool]]:
    rng = random.Random(seed)
    ok = True
    for _ in range(trials):
        rep = gl2.S_REP if rng.random() < 0.5 else gl2.T_REP
        q = gl2.I2
        for _ in range(rng.randint(1, 8)):
            lam = rng.randint(-4, 4)
            q = q @ (gl2.IntMatrix2(1, lam, 0, 1) if rng.random() < 0.5 else gl2.IntMatrix2(1, 0, lam, 1))
            if rng.random() < 0.3:
                q = q @ gl2.T_REP
        if abs(q.det()) != 1:
            continue
        m = q.inverse() @ rep @ q
        cls, witness = gl2.gl2_reduce(m)
        want = gl2.Gl2Class.S_CLASS if rep == gl2.S_REP else gl2.Gl2Class.T_CLASS
        if cls is not want or witness.inverse() @ rep @ witness != m:
            ok = False
            break
    yield f"randomized GL2 witnesses x{trials}", ok


def _verify_rewrites(max_beta: int) -> Iterable[Tuple[str, bool]]:
    for rule in words.rewrite_equivalences():
        ok = True
        for u, v in rule.instances(max_beta):
            if not _rewrite_pair_ok(u, v):
                ok = False
                break
        yield f"rewrite rule {rule.name} (beta<={max_beta})", ok


def _rewrite_pair_ok(u: words.SurgeryWord, v: words.SurgeryWord) -> bool:
    if words.beta(u) != words.beta(v):
        return False
    if words.fixed_data(u) != words.fixed_data(v):
        return False
    if words.q_sign(u) != words.q_sign(v):
        return False
    if words.orientability(u) != words.orientability(v):
        return False
    if words.epsilon(u) != words.epsilon(v):
        return False
    return words.normalize(u) == words.normalize(v)


def cmd_verify(args: argparse.Namespace) -> int:
    suites = {
        "orbits": lambda: _verify_orbits(args.n),
        "generators": lambda: _verify_generators(args.n),
        "dd": lambda: _verify_dd(args.max_dim),
        "counts": lambda: _verify_counts(args.max_r),
        "gl2": lambda: _verify_gl2(args.trials, args.seed),
        "rewrites": lambda: _verify_rewrites(args.max_beta),
    }
    if args.suite not in suites:
        raise CliError(f"unknown suite {args.suite!r}; choose from {sorted(suites)}", EXIT_USAGE)
    failed = False
    for label, ok in suites[args.suite]():
        print(f"{'PASS' if ok else 'FAIL'} {label}")
        if not ok:
            failed = True
            break
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c2surf",
        description="Involutions on closed surfaces: counting, enumeration, invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count actions on T_g / N_r")
    p_count.add_argument("surfaces", help="surface or range, e.g. T0, N5, N2..N7")
    p_count.add_argument(
        "--include-trivial", action=argparse.BooleanOptionalAction, default=True
    )
    p_count.set_defaults(func=cmd_count)

    p_enum = sub.add_parser("enumerate", help="list the isomorphism classes")
    p_enum.add_argument("surfaces")
    p_enum.add_argument("--tables", action="store_true", help="group rows by taxonomy")
    p_enum.add_argument("--format", choices=["table", "record"], default="table")
    p_enum.add_argument(
        "--include-trivial", action=argparse.BooleanOptionalAction, default=False
    )
    p_enum.set_defaults(func=cmd_enumerate)

    p_inv = sub.add_parser("inv", help="invariants of a surgery word")
    p_inv.add_argument("word")
    p_inv.set_defaults(func=cmd_invariants)

    p_gl2 = sub.add_parser("gl2", help="classify a 2x2 integer involution")
    for name in "abcd":
        p_gl2.add_argument(name, type=int)
    p_gl2.set_defaults(func=cmd_gl2)

    p_ver = sub.add_parser("verify", help="run an oracle suite")
    p_ver.add_argument("suite")
    p_ver.add_argument("--max-dim", type=int, default=5)
    p_ver.add_argument("--max-r", type=int, default=100)
    p_ver.add_argument("--max-beta", type=int, default=14)
    p_ver.add_argument("--n", type=int, default=5)
    p_ver.add_argument("--trials", type=int, default=1000)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:  # InvalidWordError, dimension bounds, ...
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
