"""Command-line front end: ``python -m parray_crystal <command> --poset FILE [options]``

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on bad
input or usage.
"""

import argparse
import json
import signal
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from . import export
from .chromatic import chromatic_polynomial_value, chromatic_qsym, chromatic_sym
from .crystal import all_components, character, component_of
from .errors import CrystalError, PosetError, VerificationFailure
from .parray import PArray
from .poset import (
    find_three_plus_one, find_two_plus_two, incomparability_graph, is_natural_unit_interval_order, load_poset,
)
from .positivity import component_expansion, qsym_refinement
from .symfunc import format_combination, schur_expand
from .tworow import dfa, is_two_row_tableau, residual_components, two_row_tableaux, verify_two_row
from . import verify

FORMATS = ("text", "json", "dot")
RESIDUAL_LIMIT = 200_000


class InputError(Exception):
    """Bad user input; maps to exit code 2."""


class TimeBoxExpired(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    poset_path: str = None
    rows: int = None
    seed: int = 0
    fmt: str = "text"
    out: str = None
    array: str = None
    tableau: str = None
    time_limit: float = 60.0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.rows is not None and self.rows < 1:
            raise InputError("--rows must be at least 1")
        if self.fmt not in FORMATS:
            raise InputError(f"--format must be one of {', '.join(FORMATS)}")


@dataclass
class Report:
    text: str
    data: object = None
    dot: str = None
    status: int = 0

    def render(self, fmt):
        if fmt == "json":
            return export.dumps(self.data)
        if fmt == "dot":
            if self.dot is None:
                raise InputError("this command has no DOT output")
            return self.dot
        return self.text.rstrip("\n") + "\n"


# -- input helpers --------------------------------------------------------

def _load(config):
    if not config.poset_path:
        raise InputError("--poset is required")
    try:
        return load_poset(config.poset_path)
    except (OSError, json.JSONDecodeError, PosetError) as exc:
        raise InputError(f"cannot read poset {config.poset_path}: {exc}") from exc


def _rows(config, P):
    return config.rows or len(P)


def _parse_array(P, text, n_rows, what="--array"):
    try:
        data = json.loads(text)
        rows = data["rows"] if isinstance(data, dict) else data
        return PArray(P, rows, n_rows)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"cannot parse {what}: {exc}") from exc
    except CrystalError as exc:
        raise InputError(f"{what} is not a P-array: {exc}") from exc


def _yes(flag):
    return "yes" if flag else "no"


def _rows_text(T):
    return str(T)


# -- commands -------------------------------------------------------------

def cmd_validate(config):
    P = _load(config)
    w31 = find_three_plus_one(P)
    w22 = find_two_plus_two(P)
    lines = [f"elements: {len(P)}"]
    lines.append("(3+1)-free: yes" if w31 is None else f"(3+1)-free: no (chain {w31[0]}<{w31[1]}<{w31[2]}, point {w31[3]})")
    lines.append("(2+2)-free: yes" if w22 is None else f"(2+2)-free: no (chains {w22[0]}<{w22[1]}, {w22[2]}<{w22[3]})")
    if P.labels is None:
        nuio = None
        lines.append("natural unit interval order: n/a (no labels)")
    else:
        nuio = is_natural_unit_interval_order(P)
        lines.append(f"natural unit interval order: {_yes(nuio)}")
    data = {
        "elements": len(P),
        "three_plus_one_free": w31 is None,
        "three_plus_one_witness": list(w31) if w31 else None,
        "two_plus_two_free": w22 is None,
        "two_plus_two_witness": list(w22) if w22 else None,
        "nuio": nuio,
    }
    return Report("\n".join(lines), data)


def cmd_expand(config):
    P = _load(config)
    N = _rows(config, P)
    components = all_components(P, N)
    lines, items = [], []
    total = None
    for k, C in enumerate(components, 1):
        expansion = component_expansion(C, len(P))
        roots = " ; ".join(_rows_text(T) for T in C.roots)
        lines.append(f"component {k} ({len(C)} array{'' if len(C) == 1 else 's'}): {format_combination(expansion)}    roots: {roots}")
        items.append({"size": len(C), "expansion": export.expansion_to_json(expansion),
                      "roots": [export.rows_of(T) for T in C.roots]})
        char = character(C)
        total = char if total is None else total + char
    expected = chromatic_sym(incomparability_graph(P), N)
    if total != expected:
        raise VerificationFailure("sum of component characters differs from the chromatic polynomial")
    combined = schur_expand(total)
    lines.append(f"total: {format_combination(combined)}")
    lines.append("total equals chromatic_sym: yes")
    data = {"n_rows": N, "components": items, "total": export.expansion_to_json(combined), "matches_chromatic": True}
    return Report("\n".join(lines), data)


def cmd_qexpand(config):
    P = _load(config)
    if P.labels is None or not is_natural_unit_interval_order(P):
        raise InputError("qexpand needs a natural unit interval order (labelled poset)")
    N = _rows(config, P)
    refined = qsym_refinement(P, N)
    if refined != chromatic_qsym(incomparability_graph(P), N):
        raise VerificationFailure("graded characters differ from the quasisymmetric chromatic function")
    expansion = refined.schur_expand()
    lines = [f"q^{d}: {format_combination(expansion[d])}" for d in sorted(expansion)]
    lines.append("equals chromatic_qsym: yes")
    data = {"n_rows": N, "terms": [[d, export.expansion_to_json(expansion[d])] for d in sorted(expansion)],
            "matches_chromatic": True}
    return Report("\n".join(lines), data)


def cmd_crystal_dot(config):
    P = _load(config)
    N = _rows(config, P)
    if config.array:
        components = [component_of(_parse_array(P, config.array, N))]
        dot = export.crystal_to_dot(components[0])
    else:
        components = all_components(P, N)
        dot = export.components_to_dot(components)
    text = "\n".join(
        f"component {k}: {len(C)} arrays, {len(C.edges)} edges, roots {' ; '.join(_rows_text(T) for T in C.roots)}"
        for k, C in enumerate(components, 1)
    )
    data = {"components": [export.component_to_dict(C) for C in components]}
    return Report(text, data, dot)


def cmd_tworow(config):
    P = _load(config)
    N = _rows(config, P)
    report = verify_two_row(P, N)
    lines = [f"two-row P-tableaux: {report.tableaux}", f"fillings: {report.fillings}"]
    lines += [f"{name}: pass" for name in report.checks]
    data = {"verification": report.to_dict()}
    dot = None
    if config.tableau:
        T = _parse_array(P, config.tableau, N, "--tableau")
        if not is_two_row_tableau(T):
            raise InputError(f"--tableau {T} is not a two-row P-tableau")
    else:
        tableaux = two_row_tableaux(P, N)
        T = tableaux[0] if tableaux else None
    if T is None:
        lines.append("residual: no two-row P-tableau")
    elif len(P) > 10 or chromatic_polynomial_value(incomparability_graph(P), N) > RESIDUAL_LIMIT:
        lines.append(f"residual: skipped for {_rows_text(T)} (more than {RESIDUAL_LIMIT} arrays)")
        data["residual"] = None
    else:
        pieces = residual_components(P, T, N)
        bad = [p for p in pieces if not p.schur_expandable]
        lines.append(f"residual for {_rows_text(T)}: {len(pieces)} pieces, {len(bad)} not Schur-expandable")
        data["residual"] = {
            "tableau": export.rows_of(T),
            "pieces": [{"size": len(p.vertices), "symmetric": p.symmetric, "schur_expandable": p.schur_expandable,
                        "expansion": export.expansion_to_json(p.expansion) if p.symmetric else None}
                       for p in pieces],
        }
        C = component_of(T)
        dot = export.crystal_to_dot(C, highlight=dfa(T, N), name="dfa")
    return Report("\n".join(lines), data, dot)


@contextmanager
def _time_box(seconds):
    if seconds is None or seconds <= 0 or not hasattr(signal, "setitimer"):
        yield
        return

    def expire(signum, frame):
        raise TimeBoxExpired()

    previous = signal.signal(signal.SIGALRM, expire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


def _case_checks(case):
    P, N = case.poset, case.n_rows
    checks = [
        ("poset", lambda: verify.check_poset(P)),
        ("enumeration", lambda: verify.check_enumeration(P, N)),
        ("crystal_axioms", lambda: verify.check_crystal_axioms(P, N)),
        ("alignment_minimality", lambda: verify.check_alignment_minimality(P, N)),
        ("components", lambda: {"components": verify.check_components(P, N)["components"]}),
        ("two_row", lambda: {"tableaux": verify.check_two_row(P, N)["tableaux"]}),
        ("truncation", lambda: verify.check_truncation(P)),
    ]
    if P.labels is not None and is_natural_unit_interval_order(P):
        checks.append(("nuio", lambda: verify.check_nuio(P, N)))
    return checks


def _run_case(name, checks, time_limit):
    results = []
    # the alarm interrupts a long check; the deadline also catches an alarm
    # that was swallowed (signals raised inside gc callbacks are lost)
    deadline = time.monotonic() + time_limit if time_limit and time_limit > 0 else None
    try:
        with _time_box(time_limit):
            for check, fn in checks:
                if deadline is not None and time.monotonic() > deadline:
                    raise TimeBoxExpired()
                try:
                    results.append({"check": check, "status": "pass", "detail": fn()})
                except VerificationFailure as exc:
                    results.append({"check": check, "status": "fail", "detail": str(exc)})
    except TimeBoxExpired:
        done = {r["check"] for r in results}
        for check, _ in checks:
            if check not in done:
                results.append({"check": check, "status": "skip", "detail": f"time limit {time_limit:g}s"})
    return {"case": name, "results": results}


def cmd_verify_all(config):
    if config.poset_path:
        P = _load(config)
        cases = [verify.Case(config.poset_path, P, _rows(config, P))]
    else:
        cases = verify.standard_corpus(config.seed) + verify.nuio_corpus(config.seed)
    runs = []
    if not config.poset_path:
        runs.append(_run_case("diagram crystal |lambda|<=6, N<=5",
                              [("diagram_theorem", verify.check_diagram_theorem)], config.time_limit))
    for case in cases:
        runs.append(_run_case(case.name, _case_checks(case), config.time_limit))
    lines, failed, skipped = [], 0, 0
    for run in runs:
        for r in run["results"]:
            status = r["status"].upper()
            failed += r["status"] == "fail"
            skipped += r["status"] == "skip"
            extra = f" ({r['detail']})" if r["status"] != "pass" else ""
            lines.append(f"{status} {run['case']}: {r['check']}{extra}")
    lines.append(f"summary: {len(runs)} cases, {failed} failed, {skipped} skipped")
    data = {"seed": config.seed, "runs": _jsonable(runs), "failed": failed, "skipped": skipped}
    return Report("\n".join(lines), data, status=1 if failed else 0)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


COMMANDS = {
    "validate": cmd_validate,
    "expand": cmd_expand,
    "qexpand": cmd_qexpand,
    "crystal-dot": cmd_crystal_dot,
    "tworow": cmd_tworow,
    "verify-all": cmd_verify_all,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="parray_crystal", description=__doc__.splitlines()[0].replace("``", ""))
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--poset", dest="poset_path", help="poset JSON file")
        p.add_argument("--rows", type=int, help="row bound N (default |P|)")
        p.add_argument("--seed", type=int, default=0, help="seed for the random corpora (verify-all)")
        p.add_argument("--format", dest="fmt", choices=FORMATS, default="dot" if name == "crystal-dot" else "text",
                       help="output format (text, json or dot)")
        p.add_argument("--out", help="write output here instead of stdout")
        if name == "crystal-dot":
            p.add_argument("--array", help='P-array JSON, e.g. \'{"rows": [["c","a"],["d","b"]]}\'')
        if name == "tworow":
            p.add_argument("--tableau", help="two-row P-tableau JSON for the residual check")
        if name == "verify-all":
            p.add_argument("--time-limit", dest="time_limit", type=float, default=60.0,
                           help="seconds per poset, 0 for no limit")
    return parser


def config_from_args(args):
    fields = vars(args)
    return RunConfig(**{k: v for k, v in fields.items() if k in RunConfig.__dataclass_fields__})


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        report = COMMANDS[config.command](config)
        output = report.render(config.fmt)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except CrystalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
