"""Command line interface.

Subcommands: roots (root system data), weyl-alt (alternation set of a weight
pair), mult (multiplicity and its q-analog), verify (named self-check suites).
Every run prints one report in text, json or csv form. Exit codes: 0 success,
1 at least one verify check failed, 2 bad usage or unparseable input, 3 the
Weyl group enumeration cap was exceeded.
"""

from __future__ import annotations

import argparse
import os
import random
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import lattice
from .combinatorics import (fibonacci, nonconsecutive_subsets,
                            verify_alternating_identity)
from .errors import CapExceeded, WeylaltError
from .kostant import (PartitionCache, QPolynomial, partition_q,
                      partition_q_bruteforce)
from .multiplicity import (alternation_set, predicted_alternation_set_B,
                           predicted_count_by_length_B, predicted_pq_B,
                           q_multiplicity, q_multiplicity_terms,
                           weight_diagram)
from .rootsystem import (build, dominant_integral_weights_in_box,
                         fundamental_weight, highest_root, is_dominant,
                         sum_of_simple_roots,
                         sum_of_simple_roots_in_fundamental_basis,
                         to_fundamental_coords)
from .weyl import DEFAULT_CAP, WeylElement, group_order, orbit

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

CAP_ENV_VAR = "WEYLALT_CAP"

ORACLE_SYSTEMS = (("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
                  ("C", 3), ("D", 4), ("G2", 2))
ORACLE_POINTS = 500
ORACLE_MAX_HEIGHT = 12


def _text_value(value) -> str:
    if isinstance(value, QPolynomial):
        return str(value)
    if isinstance(value, WeylElement):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return "(" + ", ".join(_text_value(x) for x in value) + ")"
    if isinstance(value, (list, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return "[" + ", ".join(_text_value(x) for x in items) + "]"
    return str(value)


def _json_value(value):
    if isinstance(value, QPolynomial):
        return list(value.coeffs)
    if isinstance(value, WeylElement):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (tuple, list)):
        return [_json_value(x) for x in value]
    if isinstance(value, (set, frozenset)):
        return [_json_value(x) for x in sorted(value)]
    return str(value)


@dataclass
class Check:
    name: str
    expected: str
    actual: str
    passed: bool


def check(name: str, expected, actual) -> Check:
    return Check(name, _text_value(expected), _text_value(actual),
                 expected == actual)


@dataclass
class RunReport:
    command: str
    parameters: dict
    records: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    elapsed_ms: int = 0

    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [f"command: {self.command}", "parameters:"]
        for key, value in self.parameters.items():
            lines.append(f"  {key}: {_text_value(value)}")
        if self.records:
            lines.append(f"records ({len(self.records)}):")
            headers = list(self.records[0])
            rows = [[_text_value(rec[h]) for h in headers] for rec in self.records]
            lines.extend("  " + line for line in _table(headers, rows))
        if self.checks:
            passed = sum(c.passed for c in self.checks)
            lines.append(f"checks ({len(self.checks)}): "
                         f"{passed} passed, {len(self.checks) - passed} failed")
            rows = [[c.name, c.expected, c.actual,
                     "PASS" if c.passed else "FAIL"] for c in self.checks]
            lines.extend("  " + line
                         for line in _table(["name", "expected", "actual", "result"], rows))
        lines.append(f"elapsed_ms: {self.elapsed_ms}")
        return "\n".join(lines)

    def to_json(self) -> str:
        import json

        payload = {
            "command": self.command,
            "parameters": {k: _json_value(v) for k, v in self.parameters.items()},
            "records": [{k: _json_value(v) for k, v in rec.items()}
                        for rec in self.records],
            "checks": [{"name": c.name, "expected": c.expected,
                        "actual": c.actual, "pass": c.passed}
                       for c in self.checks],
            "ok": self.ok(),
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.checks:
            writer.writerow(["name", "expected", "actual", "pass"])
            for c in self.checks:
                writer.writerow([c.name, c.expected, c.actual,
                                 "pass" if c.passed else "fail"])
        elif self.records:
            headers = list(self.records[0])
            writer.writerow(headers)
            for rec in self.records:
                writer.writerow([_text_value(rec[h]) for h in headers])
        else:
            writer.writerow(["key", "value"])
            for key, value in self.parameters.items():
                writer.writerow([key, _text_value(value)])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


def _table(headers, rows) -> list:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        out.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return out


# weight expressions: terms joined by + or -, each term one of
#   0, w<i>, highest-root, sum-simple, eps:<c1>,...,<cn>  (n = ambient dim)
_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?P<body>w(?P<index>\d+)"
    r"|highest-root"
    r"|sum-simple"
    r"|eps:(?P<coords>-?\d+(?:/\d+)?(?:,-?\d+(?:/\d+)?)*)"
    r"|0)"
)


def parse_weight(text: str, rs) -> lattice.Vector:
    """Evaluate a weight expression in the ambient coordinates of rs."""
    squeezed = "".join(str(text).split())
    if not squeezed:
        raise ValueError("empty weight expression")
    total = lattice.zeros(rs.ambient_dim)
    pos = 0
    while pos < len(squeezed):
        m = _TERM_RE.match(squeezed, pos)
        if m is None:
            raise ValueError(f"cannot parse weight expression at {squeezed[pos:]!r}")
        if pos > 0 and not m.group("sign"):
            raise ValueError(f"missing + or - before {squeezed[pos:]!r}")
        body = m.group("body")
        if body == "0":
            term = lattice.zeros(rs.ambient_dim)
        elif body == "highest-root":
            term = highest_root(rs)
        elif body == "sum-simple":
            term = sum_of_simple_roots(rs)
        elif m.group("index") is not None:
            term = fundamental_weight(rs, int(m.group("index")))
        else:
            parts = [Fraction(p) for p in m.group("coords").split(",")]
            if len(parts) != rs.ambient_dim:
                raise ValueError(f"eps: needs {rs.ambient_dim} coordinates "
                                 f"for {rs}, got {len(parts)}")
            term = lattice.vector(parts)
        if m.group("sign") == "-":
            term = lattice.neg(term)
        total = lattice.add(total, term)
        pos = m.end()
    return total


def _resolve_cap(args) -> int:
    cap = getattr(args, "cap", None)
    if cap is None:
        env = os.environ.get(CAP_ENV_VAR)
        if env is not None:
            try:
                cap = int(env)
            except ValueError:
                raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {env!r}")
    if cap is None:
        return DEFAULT_CAP
    if cap <= 0:
        raise ValueError(f"cap must be positive, got {cap}")
    return cap


def _load_cache(path, rs) -> PartitionCache:
    if os.path.exists(path):
        cache = PartitionCache.load(path)
        if not cache.matches(rs):
            raise ValueError(f"{path} holds a cache for "
                             f"{cache.type_label}{cache.rank}, not {rs}")
        return cache
    return PartitionCache(rs.type_label, rs.rank)


def cmd_roots(args) -> RunReport:
    rs = build(args.type, args.rank)
    records = [
        {"index": i + 1,
         "height": sum(rs.positive_root_alpha_coords[i]),
         "eps": root,
         "alpha_coords": rs.positive_root_alpha_coords[i]}
        for i, root in enumerate(rs.positive_roots)
    ]
    parameters = {
        "type": rs.type_label,
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "group_order": group_order(rs),
        "positive_roots": len(rs.positive_roots),
        "cartan_matrix": rs.cartan_matrix,
        "fundamental_weights": list(rs.fundamental_weights),
        "rho": rs.rho,
    }
    return RunReport("roots", parameters, records=records)


def _weight_pair(args, rs):
    lam = parse_weight(args.lam, rs)
    mu = parse_weight(args.mu, rs)
    return lam, mu


def cmd_weyl_alt(args) -> RunReport:
    rs = build(args.type, args.rank)
    lam, mu = _weight_pair(args, rs)
    cap = _resolve_cap(args)
    terms = q_multiplicity_terms(lam, mu, rs, cap)
    records = [
        {"word": str(element),
         "length": element.length,
         "sign": 1 if element.length % 2 == 0 else -1,
         "pq": pq}
        for element, pq in terms
    ]
    parameters = {
        "type": rs.type_label,
        "rank": rs.rank,
        "lam": args.lam,
        "mu": args.mu,
        "cap": cap,
        "size": len(terms),
    }
    return RunReport("weyl-alt", parameters, records=records)


def cmd_mult(args) -> RunReport:
    rs = build(args.type, args.rank)
    lam, mu = _weight_pair(args, rs)
    cap = _resolve_cap(args)
    cache = _load_cache(args.cache_file, rs) if args.cache_file else None
    total = q_multiplicity(lam, mu, rs, cap, threads=args.threads, cache=cache)
    terms = q_multiplicity_terms(lam, mu, rs, cap, cache=cache)
    if args.cache_file:
        cache.save(args.cache_file)
    records = [
        {"word": str(element),
         "length": element.length,
         "sign": 1 if element.length % 2 == 0 else -1,
         "pq": pq}
        for element, pq in terms
    ]
    parameters = {
        "type": rs.type_label,
        "rank": rs.rank,
        "lam": args.lam,
        "mu": args.mu,
        "cap": cap,
        "threads": args.threads,
        "alternation_size": len(terms),
        "multiplicity": total.evaluate(1),
        "q_multiplicity": total,
    }
    return RunReport("mult", parameters, records=records)


def suite_fibonacci(max_rank: int, cap: int, seed: int) -> list:
    checks = []
    for r in range(2, max_rank + 1):
        rs = build("B", r)
        zero = lattice.zeros(rs.ambient_dim)
        w1 = fundamental_weight(rs, 1)
        aset = alternation_set(w1, zero, rs, cap)
        checks.append(check(f"B{r} count", fibonacci(r + 1), len(aset)))
        predicted = sorted(predicted_alternation_set_B(r))
        checks.append(check(f"B{r} words", predicted, aset.words()))
        terms = q_multiplicity_terms(w1, zero, rs, cap)
        histogram = {}
        for element, pq in terms:
            word = element.word
            has_sr = r in word
            k = len(word) - (1 if has_sr else 0)
            histogram[(k, has_sr)] = histogram.get((k, has_sr), 0) + 1
            try:
                expected_pq = predicted_pq_B(word, r)
            except ValueError:
                checks.append(Check(f"B{r} pq {element}",
                                    "word from the predicted family",
                                    _text_value(word), False))
                continue
            checks.append(check(f"B{r} pq {element}", expected_pq, pq))
        expected_histogram = {}
        for has_sr in (False, True):
            k = 0
            while True:
                count = predicted_count_by_length_B(r, k, has_sr)
                if count == 0:
                    break
                expected_histogram[(k, has_sr)] = count
                k += 1
        checks.append(check(f"B{r} histogram",
                            sorted(expected_histogram.items()),
                            sorted(histogram.items())))
    for r in range(2, max_rank + 1):
        rs = build("A", r)
        aset = alternation_set(highest_root(rs), lattice.zeros(rs.ambient_dim),
                               rs, cap)
        checks.append(check(f"A{r} count", fibonacci(r), len(aset)))
    return checks


def suite_qmult(max_rank: int, cap: int, seed: int) -> list:
    checks = []
    for r in range(2, max_rank + 1):
        rs = build("B", r)
        zero = lattice.zeros(rs.ambient_dim)
        w1 = fundamental_weight(rs, 1)
        mq = q_multiplicity(w1, zero, rs, cap)
        checks.append(check(f"B{r} q-multiplicity", QPolynomial.monomial(r), mq))
        checks.append(check(f"B{r} multiplicity", 1, mq.evaluate(1)))
    return checks


def suite_char_b(max_rank: int, cap: int, seed: int) -> list:
    checks = []
    for r in range(2, max_rank + 1):
        rs = build("B", r)
        w1 = fundamental_weight(rs, 1)
        entries = weight_diagram(w1, rs, cap)
        weights = {e.weight for e in entries}
        expected = set(orbit(w1, rs)) | {lattice.zeros(rs.ambient_dim)}
        checks.append(check(f"B{r} diagram weights", sorted(expected), sorted(weights)))
        checks.append(check(f"B{r} diagram size", 2 * r + 1, len(entries)))
        checks.append(check(f"B{r} diagram multiplicities", {1},
                            {e.multiplicity for e in entries}))
    return checks


def suite_nonzero_mu(max_rank: int, cap: int, seed: int) -> list:
    checks = []
    for r in range(2, max_rank + 1):
        rs = build("B", r)
        zero = lattice.zeros(rs.ambient_dim)
        w1 = fundamental_weight(rs, 1)
        for mu in dominant_integral_weights_in_box(rs, 1):
            aset = alternation_set(w1, mu, rs, cap)
            label = f"B{r} mu={_text_value(to_fundamental_coords(mu, rs))}"
            if mu == zero:
                checks.append(check(f"{label} count", fibonacci(r + 1), len(aset)))
            elif mu == w1:
                checks.append(check(f"{label} count", 1, len(aset)))
                checks.append(check(f"{label} words", [()], aset.words()))
            else:
                checks.append(check(f"{label} count", 0, len(aset)))
    return checks


def _expected_sum_simple_fc(label: str, r: int) -> tuple:
    if label == "A":
        return (2,) if r == 1 else (1,) + (0,) * (r - 2) + (1,)
    if label == "B":
        return (1,) + (0,) * (r - 1)
    if label == "C":
        return (1,) + (0,) * (r - 3) + (-1, 1)
    if label == "D":
        return (1,) + (0,) * (r - 4) + (-1, 1, 1)
    return {"G2": (-1, 1),
            "F4": (1, 0, -1, 1),
            "E6": (1, 1, 0, -1, 0, 1),
            "E7": (1, 1, 0, -1, 0, 0, 1),
            "E8": (1, 1, 0, -1, 0, 0, 0, 1)}[label]


def suite_dominance(max_rank: int, cap: int, seed: int) -> list:
    systems = [("A", r) for r in range(1, max_rank + 1)]
    systems += [("B", r) for r in range(2, max_rank + 1)]
    systems += [("C", r) for r in range(3, max_rank + 1)]
    systems += [("D", r) for r in range(4, max_rank + 1)]
    systems += [("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8)]
    checks = []
    for label, r in systems:
        rs = build(label, r)
        fc = sum_of_simple_roots_in_fundamental_basis(rs)
        expected = tuple(Fraction(c) for c in _expected_sum_simple_fc(label, r))
        checks.append(check(f"{rs} sum-simple coords", expected, fc))
        checks.append(check(f"{rs} sum-simple dominant", label in ("A", "B"),
                            is_dominant(sum_of_simple_roots(rs), rs)))
    return checks


def suite_identities(max_rank: int, cap: int, seed: int) -> list:
    checks = []
    for r in range(1, max_rank + 1):
        checks.append(check(f"alternating identity r={r}", True,
                            verify_alternating_identity(r)))
    for m in range(0, 16):
        count = sum(1 for _ in nonconsecutive_subsets(1, m))
        checks.append(check(f"nonconsecutive subsets of 1..{m}",
                            fibonacci(m + 2), count))
    return checks


def suite_oracle(max_rank: int, cap: int, seed: int) -> list:
    rng = random.Random(seed)
    totals = {key: 0 for key in ORACLE_SYSTEMS}
    matches = {key: 0 for key in ORACLE_SYSTEMS}
    for i in range(ORACLE_POINTS):
        label, rank = ORACLE_SYSTEMS[i % len(ORACLE_SYSTEMS)]
        rs = build(label, rank)
        remaining = rng.randint(0, ORACLE_MAX_HEIGHT)
        coords = []
        for _ in range(rs.rank - 1):
            c = rng.randint(0, remaining)
            coords.append(c)
            remaining -= c
        coords.append(remaining)
        rng.shuffle(coords)
        xi = lattice.zeros(rs.ambient_dim)
        for c, alpha in zip(coords, rs.simple_roots):
            xi = lattice.add(xi, lattice.scale(c, alpha))
        totals[(label, rank)] += 1
        if partition_q(xi, rs) == partition_q_bruteforce(xi, rs):
            matches[(label, rank)] += 1
    checks = []
    for key in ORACLE_SYSTEMS:
        label, rank = key
        checks.append(check(f"{build(label, rank)} partition oracle",
                            f"{totals[key]} matches", f"{matches[key]} matches"))
    return checks


SUITES = {
    "fibonacci": (suite_fibonacci, 6),
    "qmult": (suite_qmult, 6),
    "charB": (suite_char_b, 4),
    "nonzero-mu": (suite_nonzero_mu, 5),
    "dominance": (suite_dominance, 8),
    "identities": (suite_identities, 20),
    "oracle": (suite_oracle, 0),
}


def cmd_verify(args) -> RunReport:
    cap = _resolve_cap(args)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    checks = []
    ranks = {}
    for name in names:
        fn, default_rank = SUITES[name]
        max_rank = args.max_rank if args.max_rank is not None else default_rank
        ranks[name] = max_rank
        checks.extend(fn(max_rank, cap, args.seed))
    parameters = {
        "suites": names,
        "max_rank": {name: ranks[name] for name in names},
        "cap": cap,
        "seed": args.seed,
    }
    return RunReport("verify", parameters, checks=checks)


def _add_common(sub, with_cap=True):
    sub.add_argument("--format", choices=("text", "json", "csv"),
                     default="text", help="output format")
    if with_cap:
        sub.add_argument("--cap", type=int, default=None,
                         help="largest Weyl group the run may enumerate "
                              f"(default ${CAP_ENV_VAR} or {DEFAULT_CAP})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylalt",
        description="Weyl alternation sets and Kostant weight multiplicities "
                    "in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="print root system data")
    p_roots.add_argument("type", help="A, B, C, D, G2, F4, E6, E7 or E8")
    p_roots.add_argument("rank", type=int)
    _add_common(p_roots, with_cap=False)
    p_roots.set_defaults(handler=cmd_roots)

    p_alt = sub.add_parser("weyl-alt", help="Weyl alternation set of (lam, mu)")
    p_alt.add_argument("type")
    p_alt.add_argument("rank", type=int)
    p_alt.add_argument("--lam", required=True, help="weight expression")
    p_alt.add_argument("--mu", default="0", help="weight expression (default 0)")
    _add_common(p_alt)
    p_alt.set_defaults(handler=cmd_weyl_alt)

    p_mult = sub.add_parser("mult", help="multiplicity of mu in L(lam) and its q-analog")
    p_mult.add_argument("type")
    p_mult.add_argument("rank", type=int)
    p_mult.add_argument("--lam", required=True, help="weight expression")
    p_mult.add_argument("--mu", default="0", help="weight expression (default 0)")
    p_mult.add_argument("--threads", type=int, default=1,
                        help="worker threads for the alternating sum")
    p_mult.add_argument("--cache-file", default=None,
                        help="partition table to load if present and save back")
    _add_common(p_mult)
    p_mult.set_defaults(handler=cmd_mult)

    p_verify = sub.add_parser("verify", help="run a named self-check suite")
    p_verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p_verify.add_argument("--max-rank", type=int, default=None,
                          help="largest rank the suite walks (suite-specific default)")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="seed for the randomized oracle suite")
    _add_common(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    start = time.perf_counter()
    try:
        report = args.handler(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (WeylaltError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    print(report.render(args.format))
    return EXIT_OK if report.ok() else EXIT_CHECK_FAILED


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
