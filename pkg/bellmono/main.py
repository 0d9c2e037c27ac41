"""Command-line entry point: ``python -m bellmono.main <verb> ...``."""
import argparse
import sys
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from bellmono.commands.bounds import local_bound_command, ns_bound_command, sample_command
from bellmono.commands.cloning import clone_bound_command
from bellmono.commands.functionals import (
    evaluate_command,
    expand_command,
    fixtures_command,
    flatten_command,
    normalize_command,
    validate_command,
)
from bellmono.commands.monogamy import (
    lhv_reconstruct_command,
    monogamy_check_command,
    monogamy_lp_command,
    tradeoff_command,
)
from bellmono.config.settings import config
from bellmono.core.behavior import Behavior
from bellmono.core.functional import BellFunctional
from bellmono.core.scenario import Scenario
from bellmono.errors import BellError, DocumentError, ScenarioError
from bellmono.multipartite.flatten import Bipartition
from bellmono.observability.logger import RunLogger
from bellmono.reporting import document_json, render_json, render_text
from bellmono.utils import load_behavior, load_document, load_functional, load_scenario, parse_value

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', help="write the report's document (witness, functional) to this path")
    common.add_argument('--format', choices=['text', 'json-document'], default='text')
    common.add_argument('--log-dir', default=config.RUN_LOG_DIR, help="append a JSONL run log here")

    parser = argparse.ArgumentParser(
        prog='bellmono',
        description="Exact Bell bounds, monogamy relations and cloning bounds."
    )
    verbs = parser.add_subparsers(dest='verb', required=True)

    def verb(name: str, help_text: str) -> argparse.ArgumentParser:
        return verbs.add_parser(name, parents=[common], help=help_text)

    p = verb('validate', "check a scenario, functional or behavior document")
    p.add_argument('document')

    p = verb('evaluate', "value of a functional on a behavior")
    p.add_argument('functional')
    p.add_argument('behavior')

    p = verb('normalize', "non-negative form of a functional and its offset")
    p.add_argument('functional')

    p = verb('expand', "correlator coefficients as probability coefficients")
    p.add_argument('functional')

    p = verb('local-bound', "maximum over deterministic local strategies")
    p.add_argument('functional')

    p = verb('ns-bound', "maximum over the no-signaling polytope")
    p.add_argument('functional')

    p = verb('sample', "seeded mixture of no-signaling vertices")
    p.add_argument('scenario', help="scenario document (a functional or behavior gives its scenario)")
    p.add_argument('--seed', type=int, default=config.DEFAULT_SEED)
    p.add_argument('--mix', type=_positive_int, default=config.DEFAULT_MIX)
    p.add_argument('--objective', help="functional maximized by the first vertex (debug)")

    p = verb('monogamy-check', "Σ_m B(A,B_m) <= nR on a behavior of the extended scenario")
    p.add_argument('functional')
    p.add_argument('behavior')
    p.add_argument('--cut')

    p = verb('monogamy-lp', "maximum of Σ_m B_m over the extended no-signaling polytope")
    p.add_argument('functional')
    p.add_argument('--cut')

    p = verb('lhv-reconstruct', "local model of one chained expression's settings slice")
    p.add_argument('functional')
    p.add_argument('behavior')
    p.add_argument('--chain', type=_positive_int, default=1)
    p.add_argument('--cut')

    p = verb('flatten', "two composite parties along a cut")
    p.add_argument('document')
    p.add_argument('--cut', required=True)

    p = verb('clone-bound', "bound R/B on the mean shrinking factor")
    p.add_argument('functional')
    p.add_argument('--base', required=True, help="B(A,B): p/q, sqrt2, 1/sqrt2 or k*sqrt2")
    p.add_argument('--clones', help="comma-separated B(A,B_m) values")

    p = verb('tradeoff', "range of one pair's value with other pairs fixed")
    p.add_argument('functional')
    p.add_argument('--target', type=_positive_int, required=True)
    p.add_argument('--fix', default="", help="m=v[,m=v...] in the non-negative form")
    p.add_argument('--cut')

    verb('fixtures', "list the built-in fixtures")
    return parser


def parse_cut(text: Optional[str], scenario: Scenario) -> Optional[Bipartition]:
    """``0,1`` (complement implied) or ``0,1|2``, checked against the scenario."""
    if text is None:
        return None
    try:
        if "|" in text:
            left, right = text.split("|", 1)
            cut = Bipartition(_indices(left), _indices(right))
        else:
            cut = Bipartition.of(_indices(text), scenario.num_parties)
        cut.check(scenario)
    except ValueError:
        raise DocumentError(f"malformed cut {text!r}", field="--cut")
    except ScenarioError as e:
        raise DocumentError(f"invalid cut {text!r}: {e}", field="--cut")
    return cut


def _indices(text: str) -> Tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


def parse_fix(text: str) -> Dict[int, Fraction]:
    fixed = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        m, sep, value = item.partition("=")
        if not sep or not m.strip().isdigit():
            raise DocumentError(f"expected m=v, got {item!r}", field="--fix")
        fixed[int(m)], _ = parse_value(value, field="--fix")
    return fixed


def parse_values(text: str, field: str) -> Tuple[List[Fraction], bool]:
    values, approximate = [], False
    for item in text.split(","):
        value, approx = parse_value(item, field=field)
        values.append(value)
        approximate = approximate or approx
    return values, approximate


def dispatch(args: argparse.Namespace, logger: Optional[RunLogger], sources: List[str]) -> Dict[str, Any]:
    """Load the verb's documents and run its handler."""

    def functional(ref):
        value, text = load_functional(ref)
        sources.append(text)
        return value

    def behavior(ref):
        value, text = load_behavior(ref)
        sources.append(text)
        return value

    if args.verb == 'validate':
        value, text = load_document(args.document)
        sources.append(text)
        return validate_command(value, logger)
    if args.verb == 'evaluate':
        return evaluate_command(functional(args.functional), behavior(args.behavior), logger)
    if args.verb == 'normalize':
        return normalize_command(functional(args.functional), logger)
    if args.verb == 'expand':
        return expand_command(functional(args.functional), logger)
    if args.verb == 'local-bound':
        return local_bound_command(functional(args.functional), logger)
    if args.verb == 'ns-bound':
        return ns_bound_command(functional(args.functional), logger)
    if args.verb == 'sample':
        scenario, text = load_scenario(args.scenario)
        sources.append(text)
        objective = functional(args.objective) if args.objective else None
        return sample_command(scenario, args.seed, args.mix, objective, logger)
    if args.verb == 'monogamy-check':
        f = functional(args.functional)
        cut = parse_cut(args.cut, f.scenario)
        return monogamy_check_command(f, behavior(args.behavior), cut, logger)
    if args.verb == 'monogamy-lp':
        f = functional(args.functional)
        return monogamy_lp_command(f, parse_cut(args.cut, f.scenario), logger)
    if args.verb == 'lhv-reconstruct':
        f = functional(args.functional)
        cut = parse_cut(args.cut, f.scenario)
        return lhv_reconstruct_command(f, behavior(args.behavior), args.chain, cut, logger)
    if args.verb == 'flatten':
        value, text = load_document(args.document)
        sources.append(text)
        if not isinstance(value, (Behavior, BellFunctional)):
            raise DocumentError("flatten needs a functional or behavior document", path=args.document)
        return flatten_command(value, parse_cut(args.cut, value.scenario), logger)
    if args.verb == 'clone-bound':
        f = functional(args.functional)
        base, approximate = parse_value(args.base, field="--base")
        clones = None
        if args.clones:
            clones, approx_clones = parse_values(args.clones, "--clones")
            approximate = approximate or approx_clones
        return clone_bound_command(f, base, clones, approximate, logger)
    if args.verb == 'tradeoff':
        f = functional(args.functional)
        cut = parse_cut(args.cut, f.scenario)
        return tradeoff_command(f, args.target, parse_fix(args.fix), cut, logger)
    return fixtures_command(logger)


def _inputs(args: argparse.Namespace) -> List[str]:
    keys = ('document', 'functional', 'behavior', 'scenario', 'objective')
    return [getattr(args, key) for key in keys if getattr(args, key, None)]


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        stdout: Stream for the report (default: sys.stdout)
        stderr: Stream for error lines (default: sys.stderr)

    Returns:
        Exit code: 0 success, 1 domain error, 2 usage error
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

    logger = RunLogger(args.log_dir, debug_mode=config.DEBUG_MODE) if args.log_dir else None
    sources: List[str] = []
    start_time = time.time()

    def log(status: str, summary=None, error=None):
        if logger:
            duration_ms = (time.time() - start_time) * 1000
            logger.log_command(args.verb, _inputs(args), status, duration_ms, summary, sources, error)

    try:
        report = dispatch(args, logger, sources)
    except DocumentError as e:
        stderr.write(f"error: {e}\n")
        log('usage_error', error=str(e))
        return EXIT_USAGE_ERROR
    except BellError as e:
        stderr.write(f"error: {e}\n")
        log('domain_error', error=str(e))
        return EXIT_DOMAIN_ERROR

    if args.out and report['document'] is not None:
        with open(args.out, 'w') as f:
            f.write(document_json(report['document']))
        report['details'].append(("written", args.out))

    if args.format == 'json-document':
        stdout.write(render_json(report))
    else:
        stdout.write(render_text(report))
    log('ok', summary=report['summary'])
    return EXIT_OK


def main() -> int:
    return run()


if __name__ == '__main__':
    sys.exit(main())
