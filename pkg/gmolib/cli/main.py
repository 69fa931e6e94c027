"""
gmolib command line

    gmolib [global options] list
    gmolib [global options] verify [--case ID] [--params k=v,...]
    gmolib [global options] sweep --case ID --param NAME --from X --to Y
    gmolib [global options] zeta --s S [--s-im T] [--q Q] [--route em|integral]
    gmolib selftest

Exit codes: 0 success, 1 on FAIL or NO_CONVERGENCE records (or failing
property suites), 2 on usage errors.
"""

import logging
import sys
import numpy as np
from ..errors import ConvergenceError, DomainError, GmoError
from ..harness.catalog import CATALOG, get_entry
from ..harness.records import Status, exit_code, summary_line
from ..harness.selftest import SelfTest
from ..harness.verify import Harness, zeta_by_integral
from ..kernel.cases import CaseId, parse_params
from ..quad.base import QuadConfig
from ..specfun.zeta import hurwitz_zeta
from .parameters import Parameters
from .report import ReportDocument, catalog_table


USAGE_ERROR = 2


class UsageError(GmoError):
    """Malformed or inconsistent command-line input"""
    pass


def build_config(params):
    tol = 1e-12 if params.tol is None else params.tol
    return QuadConfig(tol, tol, params.max_evals, params.max_depth,
                      params.max_level)


def _case(name):
    try:
        return CaseId(name)
    except ValueError:
        raise UsageError("Unknown case '{}'; see `gmolib list`".format(name))


def _params(entry, text):
    """Catalog defaults of the case, overridden by the parsed key=value list"""
    if text is None:
        return entry.default_params
    try:
        given = parse_params(text)
    except DomainError as e:
        raise UsageError(str(e))
    unknown = [k for k, _ in given.items() if k not in entry.slots]
    if unknown:
        raise UsageError("{} has no parameter(s) {}".format(
            entry.id, ", ".join(unknown)))
    return entry.default_params.replace(**given.to_dict())


def _emit(records, cfg, params, logger):
    document = ReportDocument(records, cfg)
    if params.out is not None:
        document.write(params.out, params.format)
        logger.info("Report written to {}".format(params.out))
    else:
        sys.stdout.write(document.render(params.format))
    if params.out is not None or params.format != 'table':
        print(summary_line(records), file=sys.stderr)
    return exit_code(records)


def cmd_list(params, logger):
    sys.stdout.write(catalog_table(CATALOG))
    return 0


def cmd_verify(params, logger):
    cfg = build_config(params)
    harness = Harness(cfg, params.jobs, params.experimental,
                      progress=params.verbose)
    if params.case is None:
        if params.params is not None:
            raise UsageError("--params needs --case")
        records = harness.verify_all()
    else:
        entry = get_entry(_case(params.case))
        record = harness.verify_case(entry.id, _params(entry, params.params))
        if record.status is Status.SKIPPED_DOMAIN:
            print("warning: {}".format(record.note), file=sys.stderr)
        records = [record]
    return _emit(records, cfg, params, logger)


def sweep_values(name, start, stop, steps):
    assert steps >= 2, "A sweep needs at least two points"
    values = np.linspace(start, stop, steps)
    if name == 'n':
        return [int(round(v)) for v in values]
    return [float(v) for v in values]


def cmd_sweep(params, logger):
    entry = get_entry(_case(params.case))
    if params.steps < 2:
        raise UsageError("--steps must be at least 2")
    if params.param not in entry.slots:
        raise UsageError("{} has no parameter '{}'; parameters: {}".format(
            entry.id, params.param, ", ".join(entry.slots) or "none"))
    cfg = build_config(params)
    harness = Harness(cfg, params.jobs, params.experimental,
                      progress=params.verbose)
    values = sweep_values(params.param, params.start, params.stop,
                          params.steps)
    records = harness.sweep(entry.id, params.param, values,
                            _params(entry, params.params))
    return _emit(records, cfg, params, logger)


def _format_complex(value):
    sign = '-' if value.imag < 0 else '+'
    return "{:.15g} {} {:.15g}i".format(value.real, sign, abs(value.imag))


def cmd_zeta(params, logger):
    s = complex(params.s, params.s_im)
    q = params.q
    if not q > 0:
        raise UsageError("zeta needs q > 0, got {}".format(q))
    try:
        if params.route == 'em':
            value = hurwitz_zeta(s, q)
        else:
            value = zeta_by_integral(s, q, build_config(params)).value
    except DomainError as e:
        raise UsageError(str(e))
    except ConvergenceError as e:
        logger.error(str(e))
        return 1
    s_text = "{:g}".format(params.s) if params.s_im == 0 \
        else _format_complex(s)
    print("zeta({}, {:g}) = {}  [{}]".format(
        s_text, q, _format_complex(value), params.route))
    return 0


def cmd_selftest(params, logger):
    selftest = SelfTest()
    results = selftest.run()
    print(selftest.format(results))
    return 0 if selftest.passed(results) else 1


COMMANDS = {
    'list': cmd_list,
    'verify': cmd_verify,
    'sweep': cmd_sweep,
    'zeta': cmd_zeta,
    'selftest': cmd_selftest,
}


def main(argv=None):
    parameters = Parameters("Numerical verification of log-cosine "
                            "integral identities")
    try:
        params = parameters.parse_args(argv)
    except SystemExit as e:
        return e.code
    logging.basicConfig(
        level=logging.INFO if params.verbose else logging.WARNING,
        stream=sys.stderr)
    logger = logging.getLogger('GMO-CLI')
    if params.save_config is not None:
        parameters.save(params.save_config)
    try:
        return COMMANDS[params.command](params, logger)
    except (UsageError, AssertionError) as e:
        print("error: {}".format(e), file=sys.stderr)
        return USAGE_ERROR


if __name__ == '__main__':
    sys.exit(main())
