"""Command-line front end.

    nfaprops machine.txt --property palindrome --property k-power=3 --mode shortest

One report row per requested property, in a fixed order; each row gives the
verdict, a witness word, the known length bound for this instance and the
method used.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from . import borders, oracle, palindromes, powers
from .automaton import Automaton, Kind, accepts, prepare, words_of_length
from .errors import CapExceeded, Inconclusive, ParseError, StateBudgetExceeded
from .textio import load_automaton

PROPERTIES = (
    "palindrome",
    "non-palindrome",
    "k-power",
    "ge-k-power",
    "non-k-power",
    "power",
    "non-power",
    "bordered",
    "unbordered",
    "pattern",
)
DEFAULT_PROPERTIES = PROPERTIES[:-1]
MODES = ("exists", "infinite", "shortest", "all")
WITH_K = {"k-power", "ge-k-power", "non-k-power"}

# every word has property P  <=>  no word has the complementary property
COMPLEMENT = {
    "palindrome": "non-palindrome",
    "non-palindrome": "palindrome",
    "k-power": "non-k-power",
    "non-k-power": "k-power",
    "power": "non-power",
    "non-power": "power",
    "bordered": "unbordered",
    "unbordered": "bordered",
}


class BudgetError(ValueError):
    pass


@dataclass(frozen=True)
class PropertyRequest:
    name: str
    k: int | None = None
    pattern: powers.Pattern | None = None

    @property
    def label(self) -> str:
        if self.k is not None:
            return f"{self.name}={self.k}"
        if self.pattern is not None:
            return f"pattern={','.join(map(str, self.pattern.variables))}"
        return self.name


@dataclass
class AnalysisRequest:
    input: str
    properties: list[PropertyRequest]
    mode: str = "exists"
    verify: bool = False
    budget_states: int = powers.DEFAULT_STATE_BUDGET
    budget_words: int = borders.DEFAULT_WORD_CAP
    budget_monoid: int = 50_000


@dataclass
class PropertyRow:
    property: str
    verdict: str
    witness: str | None
    witness_length: int | None
    bound: str
    method: str
    elapsed_ms: float | None = None
    oracle: str | None = None


@dataclass
class AnalysisReport:
    input: str
    n: int
    t: int
    kind: str
    mode: str
    rows: list[PropertyRow] = field(default_factory=list)

    @property
    def budget_exceeded(self) -> bool:
        return any(r.verdict == "budget-exceeded" for r in self.rows)

    @property
    def disagreements(self) -> int:
        return sum(r.oracle == "disagree" for r in self.rows)


def parse_property(text: str) -> PropertyRequest:
    name, sep, arg = text.partition("=")
    name = name.strip()
    if name not in PROPERTIES:
        raise ValueError(f"unknown property {name!r}; choose from {', '.join(PROPERTIES)}")
    if name in WITH_K:
        k = int(arg) if sep else 2
        if k < 2:
            raise ValueError("k must be at least 2")
        return PropertyRequest(name, k=k)
    if name == "pattern":
        if not arg.strip():
            raise ValueError("pattern needs variables, e.g. pattern=1,2,1,2")
        return PropertyRequest(name, pattern=powers.Pattern.parse(arg))
    if sep:
        raise ValueError(f"property {name!r} takes no argument")
    return PropertyRequest(name)


# -- bounds ----------------------------------------------------------------------------------


def _fmt_int(x: int) -> str:
    return str(x) if x < 10 ** 15 else f"{x:.3e}"


def bound_text(name: str, mode: str, n: int, k: int | None, dfa: bool) -> str:
    """Known bound on the shortest witness, instantiated for this instance."""
    if mode == "all":
        if name not in COMPLEMENT:
            return "-"
        name = COMPLEMENT[name]
    if mode == "infinite":
        if name == "unbordered":
            lo, hi = borders.unbordered_window(n)
            return f"window [4n^2+6n+2, 8n^2+18n+5] = [{lo}, {hi}]"
        if name in ("non-k-power", "non-power"):
            return f"window [n, 3n] = [{n}, {3 * n}]"
        return "-"
    if name == "palindrome":
        return f"2n^2-1 = {2 * n * n - 1}"
    if name == "non-palindrome":
        if dfa:
            return f"3n-4 (dfa) = {3 * n - 4}"
        return f"3n-1 = {3 * n - 1}"
    if name == "k-power":
        return f"kn^k = {_fmt_int(k * n ** k)}"
    if name in ("non-k-power", "non-power"):
        if dfa:
            return f"3n-3 (dfa) = {3 * n - 3}"
        return f"3n = {3 * n}"
    if name == "power":
        return f"(n+1)n^(n+1) = {_fmt_int((n + 1) * n ** (n + 1))}"
    if name == "bordered":
        return f"2n^2+n-1 = {2 * n * n + n - 1}"
    if name == "unbordered":
        return f"6n+1 = {6 * n + 1}"
    return "-"


# -- analyses --------------------------------------------------------------------------------


def _negate(v):
    return not v.holds, v.witness, v.method


def _keep(v):
    return v.holds, v.witness, v.method


def _exists(a, req, budgets):
    bs, bw, bm = budgets
    k = req.k
    name = req.name
    if name == "palindrome":
        return _keep(palindromes.accepts_palindrome(a))
    if name == "non-palindrome":
        return _negate(palindromes.is_palindromic(a))
    if name == "k-power":
        return _keep(powers.accepts_k_power(a, k, bs))
    if name == "ge-k-power":
        return _keep(powers.accepts_ge_k_power(a, k, bs, bm))
    if name == "non-k-power":
        return _negate(powers.all_k_powers(a, k))
    if name == "power":
        return _keep(powers.accepts_power(a, bs, bm))
    if name == "non-power":
        return _negate(powers.all_powers(a))
    if name == "bordered":
        return _keep(borders.accepts_bordered(a))
    if name == "unbordered":
        v = borders.accepts_unbordered(a, bw)
        holds, w, method = _keep(v)
        if holds:
            n = max(prepare(a).n_states, 1)
            method = f"{method} |w|/n={len(w) / n:.2f}"
        return holds, w, method
    if name == "pattern":
        return _keep(powers.pattern_acceptance(a, req.pattern, bm))
    raise ValueError(name)


def _infinite(a, req, budgets):
    bs, bw, bm = budgets
    k = req.k
    name = req.name
    if name == "palindrome":
        return _keep(palindromes.accepts_infinitely_many_palindromes(a))
    if name == "non-palindrome":
        return _keep(palindromes.accepts_infinitely_many_nonpalindromes(a))
    if name == "k-power":
        return _keep(powers.accepts_infinitely_many_k_powers(a, k, bs))
    if name == "ge-k-power":
        return _keep(powers.accepts_infinitely_many_ge_k_powers(a, k, bs, bm))
    if name == "non-k-power":
        return _negate(powers.all_but_finitely_many_k_powers(a, k))
    if name == "power":
        return _keep(powers.accepts_infinitely_many_ge_k_powers(a, 2, bs, bm))
    if name == "non-power":
        return _negate(powers.all_but_finitely_many_powers(a))
    if name == "bordered":
        return _keep(borders.accepts_infinitely_many_bordered(a))
    if name == "unbordered":
        return _keep(borders.accepts_infinitely_many_unbordered(a, bw))
    return None


def _all(a, req, budgets):
    name = req.name
    if name not in COMPLEMENT:
        return None
    if name == "bordered" and accepts(a, ()):
        return False, (), "empty-word"
    other = PropertyRequest(COMPLEMENT[name], k=req.k)
    holds, w, method = _exists(a, other, budgets)
    return not holds, w, method


def _compute(a, req, mode, budgets):
    if mode in ("exists", "shortest"):
        if mode == "shortest" and req.name == "pattern":
            return None
        return _exists(a, req, budgets)
    if mode == "infinite":
        return _infinite(a, req, budgets)
    return _all(a, req, budgets)


# -- oracle check ----------------------------------------------------------------------------


def _exact(a, name, k, pattern, infinite):
    """Exact oracle answer (existence or infinitude) when one is available."""
    if name == "pattern":
        if infinite:
            return None
        return oracle.exact_pattern(a, pattern.variables) is not None
    table = {
        "palindrome": oracle.exact_palindromes,
        "non-palindrome": oracle.exact_nonpalindromes,
        "k-power": lambda x: oracle.exact_k_powers(x, k),
        "ge-k-power": lambda x: oracle.exact_ge_k_powers(x, k),
        "power": lambda x: oracle.exact_ge_k_powers(x, 2),
        "bordered": oracle.exact_bordered,
    }
    if name not in table:
        return None
    exists, many = table[name](a)
    return many if infinite else exists


def _enumerated(a, name, k, lo, hi, cap):
    p = prepare(a)
    test = oracle.word_predicate(name, k)
    for length in range(lo, hi + 1):
        for count, w in enumerate(words_of_length(p, length), start=1):
            if count > cap:
                raise CapExceeded(length, cap)
            if test(w):
                return True
    return False


def _verify(a, req, mode, holds, witness, cap) -> str:
    name = req.name
    k = req.k or 2
    if mode == "all":
        name = COMPLEMENT[name]
        holds = not holds
        mode = "exists"
        if req.name == "bordered" and witness == ():
            return "agree" if accepts(a, ()) else "disagree"
    infinite = mode == "infinite"
    pred_k = k if name in WITH_K else None
    if holds and witness is not None and not infinite:
        test = oracle.word_predicate(name, pred_k, req.pattern.variables if req.pattern else None)
        if not (accepts(a, witness) and test(witness)):
            return "disagree"
    try:
        expected = _exact(a, name, k, req.pattern, infinite)
        if expected is None:
            n = prepare(a).n_states
            if infinite and name == "unbordered":
                lo, hi = borders.unbordered_window(n)
            elif infinite:
                lo, hi = n, 3 * n
            else:
                lo, hi = 0, oracle.decision_bound(name, n, pred_k)
            expected = _enumerated(a, name, pred_k, lo, hi, cap)
        if expected != holds:
            return "disagree"
        if mode == "shortest" and holds and witness is not None:
            first = oracle.oracle_decide(a, name, len(witness), k=pred_k, cap=cap)
            if not first.holds or len(first.witness) != len(witness):
                return "disagree"
    except CapExceeded:
        return "unchecked"
    return "agree"


# -- running and printing --------------------------------------------------------------------


def run(request: AnalysisRequest, automaton: Automaton | None = None) -> AnalysisReport:
    for flag in ("budget_states", "budget_words", "budget_monoid"):
        if getattr(request, flag) < 1:
            raise BudgetError(f"--{flag.replace('_', '-')} must be positive")
    if request.mode not in MODES:
        raise ValueError(f"unknown mode {request.mode!r}")
    a = automaton if automaton is not None else load_automaton(request.input)
    size = a.size()
    dfa = a.kind is Kind.DFA and a.n_symbols >= 2
    report = AnalysisReport(request.input, size.n, size.t, a.kind.value, request.mode)
    budgets = (request.budget_states, request.budget_words, request.budget_monoid)
    ordered = sorted(request.properties, key=lambda r: (PROPERTIES.index(r.name), r.label))
    for req in ordered:
        started = time.perf_counter()
        witness = None
        oracle_state = None
        try:
            result = _compute(a, req, request.mode, budgets)
            if result is None:
                verdict, method = "n/a", "-"
            else:
                holds, witness, method = result
                verdict = "yes" if holds else "no"
                if request.verify:
                    oracle_state = _verify(a, req, request.mode, holds, witness, request.budget_words)
        except StateBudgetExceeded as exc:
            verdict, method = "budget-exceeded", str(exc)
        except Inconclusive as exc:
            verdict = "inconclusive"
            method = str(exc) + (f" ({exc.covered})" if exc.covered else "")
        elapsed = (time.perf_counter() - started) * 1000
        report.rows.append(
            PropertyRow(
                property=req.label,
                verdict=verdict,
                witness=None if witness is None else a.render(witness, " "),
                witness_length=None if witness is None else len(witness),
                bound=bound_text(req.name, request.mode, size.n, req.k, dfa),
                method=method,
                elapsed_ms=round(elapsed, 3),
                oracle=oracle_state,
            )
        )
    return report


def _witness_cell(row: PropertyRow) -> str:
    if row.witness is None:
        return "-"
    return row.witness if row.witness else "ε"


def format_table(report: AnalysisReport, stable: bool = False, verify: bool = False) -> str:
    head = ["property", "verdict", "witness", "length", "bound", "method"]
    if verify:
        head.append("oracle")
    if not stable:
        head.append("ms")
    lines = []
    for r in report.rows:
        cells = [
            r.property,
            r.verdict,
            _witness_cell(r),
            "-" if r.witness_length is None else str(r.witness_length),
            r.bound,
            r.method,
        ]
        if verify:
            cells.append(r.oracle or "-")
        if not stable:
            cells.append(f"{r.elapsed_ms:.1f}")
        lines.append(cells)
    widths = [max(len(x) for x in col) for col in zip(head, *lines)]
    out = [f"input: {report.input}  n={report.n} t={report.t} kind={report.kind} mode={report.mode}"]
    for cells in [head] + lines:
        out.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
    return "\n".join(out) + "\n"


def format_json(report: AnalysisReport, stable: bool = False, verify: bool = False) -> str:
    data = asdict(report)
    for row in data["rows"]:
        if stable:
            del row["elapsed_ms"]
        if not verify:
            del row["oracle"]
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nfaprops",
        description="Decide word-combinatorial properties of the language of a finite automaton.",
    )
    parser.add_argument("input", help="automaton file")
    parser.add_argument(
        "--property",
        action="append",
        type=parse_property,
        metavar="NAME[=ARG]",
        help="property to analyse, repeatable: " + ", ".join(PROPERTIES)
        + "; k-power, ge-k-power and non-k-power take =k (default 2), pattern takes =1,2,1,2",
    )
    parser.add_argument("--mode", choices=MODES, default="exists")
    parser.add_argument("--verify", action="store_true", help="cross-check each verdict by brute force")
    parser.add_argument("--stable", action="store_true", help="omit timings so reports are reproducible")
    parser.add_argument("--budget-states", type=int, default=powers.DEFAULT_STATE_BUDGET)
    parser.add_argument("--budget-words", type=int, default=borders.DEFAULT_WORD_CAP)
    parser.add_argument("--budget-monoid", type=int, default=50_000)
    parser.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    props = args.property or [parse_property(p if p not in WITH_K else p + "=2") for p in DEFAULT_PROPERTIES]
    request = AnalysisRequest(
        input=args.input,
        properties=props,
        mode=args.mode,
        verify=args.verify,
        budget_states=args.budget_states,
        budget_words=args.budget_words,
        budget_monoid=args.budget_monoid,
    )
    try:
        report = run(request)
    except ParseError as exc:
        print(f"{args.input}: parse error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    fmt = format_json if args.format == "json" else format_table
    sys.stdout.write(fmt(report, stable=args.stable, verify=args.verify))
    if report.budget_exceeded:
        return 3
    if report.disagreements:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
