"""
.. module:: cli
    :platform: Unix, Windows
    :synopsis: Command-line front end dispatching computations and emitting tables or JSON reports

.. moduleauthor:: homquiver developers

"""

import argparse
import logging
import os
import sys
from . import __version__
from . import coxeter
from . import exchange
from . import homology
from . import liecoh
from . import presets
from . import repcat
from . import serre
from ._exchange import normalize
from ._utilities import export
from .exceptions import HomquiverException

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


@export
class Report(object):
    """ Result of one command: structured results, notes, certification statuses and the exit code.

    :param command: command line echo
    :type command: list
    """

    def __init__(self, command):
        self.command = list(command)
        self.results = dict()
        self.notes = []
        self.statuses = dict()
        self.errors = []
        self.exit_code = EXIT_OK
        self.json = False

    def fail(self, message, code=EXIT_FAILURE):
        self.errors.append(str(message))
        self.exit_code = code

    def to_dict(self):
        return dict(command=self.command, results=self.results, notes=self.notes, statuses=self.statuses,
                    errors=self.errors, exit_code=self.exit_code)

    def to_json(self):
        return exchange.report_to_json(self)

    def to_text(self):
        """ Human-readable rendering, one line per result. """
        lines = []
        for key in sorted(self.results):
            lines.extend(_render(key, normalize(self.results[key]), 0))
        for key in sorted(self.statuses):
            lines.append("status {0}: {1}".format(key, self.statuses[key]))
        lines.extend("note: {0}".format(n) for n in self.notes)
        lines.extend("error: {0}".format(e) for e in self.errors)
        return "\n".join(lines)


def _render(key, value, depth):
    pad = "  " * depth
    if isinstance(value, dict):
        lines = ["{0}{1}:".format(pad, key)]
        for k in sorted(value):
            lines.extend(_render(k, value[k], depth + 1))
        return lines
    if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        lines = ["{0}{1}:".format(pad, key)]
        for idx, item in enumerate(value):
            lines.extend(_render(idx, item, depth + 1))
        return lines
    return ["{0}{1}: {2}".format(pad, key, value)]


def _load_algebra(spec):
    """ Builds the algebra from a file path or a preset name (``presets/<name>`` is accepted too). """
    if os.path.isfile(spec):
        return exchange.build_algebra(exchange.parse_algebra_file(spec)), dict()
    name = os.path.basename(spec.rstrip('/'))
    if name.endswith('.alg'):
        name = name[:-4]
    algebra, notes = presets.load_preset(name)
    if notes.get('kind') != 'quiver':
        raise HomquiverException("Preset '{0}' is not a quiver algebra".format(name))
    return algebra, notes


def _vertex(algebra, label):
    """ Vertex identifier from ``3`` or ``L3``. """
    label = str(label)
    if label not in algebra.quiver.vertices and label[:1] in ('L', 'P') and label[1:] in algebra.quiver.vertices:
        label = label[1:]
    algebra.quiver.vertex_index(label)
    return label


def cmd_basis(args, report):
    algebra, _ = _load_algebra(args.algebra)
    report.results['dimension'] = algebra.dimension
    report.results['saturation_length'] = algebra.saturation_length
    report.results['basis'] = [algebra.path_string(p) for p in algebra.basis]


def cmd_projectives(args, report):
    algebra, _ = _load_algebra(args.algebra)
    table = dict()
    for idx, v in enumerate(algebra.quiver.vertices):
        proj = algebra.projective(idx)
        table["P" + v] = dict(dims=list(proj.dims), loewy=[list(layer) for layer in repcat.loewy_series(proj)])
    report.results['projectives'] = table
    report.results['cartan_matrix'] = algebra.cartan_matrix()


def cmd_resolve(args, report):
    algebra, _ = _load_algebra(args.algebra)
    vertex = _vertex(algebra, args.simple)
    res = homology.minimal_resolution(repcat.simple(algebra, vertex), cap=args.cap)
    report.results['terms'] = res.term_names()
    report.results['status'] = res.status
    if res.is_periodic():
        report.results['period'] = list(res.period)
    if res.is_finite():
        report.results['pd'] = res.proj_dim()
    report.statuses['resolution'] = res.status


def cmd_ext(args, report):
    algebra, _ = _load_algebra(args.algebra)
    src, tgt = _vertex(algebra, args.source), _vertex(algebra, args.target)
    mod1, mod2 = repcat.simple(algebra, src), repcat.simple(algebra, tgt)
    res = homology.minimal_resolution(mod1, cap=max(args.cap or 0, args.max + 1))
    report.results['ext'] = dict((str(d), homology.ext_dim(mod1, mod2, d, resolution=res))
                                 for d in range(args.max + 1))


def cmd_pd(args, report):
    algebra, _ = _load_algebra(args.algebra)
    resolutions = homology.simple_resolutions(algebra, args.cap)
    table = dict()
    for v, res in zip(algebra.quiver.vertices, resolutions):
        if res.status == homology.TRUNCATED:
            table["L" + v] = "undetermined beyond cap"
            report.statuses["L" + v] = res.status
        else:
            table["L" + v] = normalize(res.proj_dim())
    report.results['pd'] = table


def cmd_gldim(args, report):
    algebra, _ = _load_algebra(args.algebra)
    report.results['gl_dim'] = normalize(homology.global_dim(algebra, args.cap))


def cmd_ext_quiver(args, report):
    algebra, _ = _load_algebra(args.algebra)
    report.results['ext_quiver'] = homology.ext_quiver(algebra, args.max).to_dict()


def cmd_serre(args, report):
    algebra, _ = _load_algebra(args.algebra)
    simples = [_vertex(algebra, s) for s in args.simples.split(',') if s.strip()]
    sub = serre.serre_subcategory(algebra, simples)
    report.results['subcategory'] = dict(simples=list(sub.simple_labels), dimension=sub.dimension,
                                         ideal_dimension=sub.ideal_dimension, exponent=sub.exponent)
    if args.check_fullness:
        result = serre.extension_fullness(algebra, simples, args.cap)
        report.results['fullness'] = result.to_dict()
        report.statuses['fullness'] = result.status


def cmd_initial_segments(args, report):
    algebra, _ = _load_algebra(args.algebra)
    report.results['initial_segments'] = [list(s) for s in serre.initial_segments(algebra, args.cap)]


def cmd_guichardet(args, report):
    algebra, _ = _load_algebra(args.algebra)
    result = serre.guichardet(algebra, args.cap)
    report.results['guichardet'] = result.to_dict()
    for segment, sub in zip(result.segments, result.reports):
        for entry in sub.failing():
            report.notes.append("segment {{{0}}} fails at degree {1} on (L{2}, L{3})".format(
                ",".join(segment), entry.degree, entry.source, entry.target))


def cmd_coxeter(args, report):
    group = coxeter.build_weyl_group(args.type)
    parabolic = [s for s in (args.parabolic or "").split(',') if s.strip()]
    report.results['group'] = dict(type=group.type, order=group.order,
                                   longest_length=group.length(group.longest_element()))
    mode = args.eval
    if mode == 'thm777':
        report.results['thm777'] = list(coxeter.thm777_eval(group, parabolic))
    elif mode == 'pdcor':
        element = group.element(args.element or 'e')
        report.results['pdcor'] = coxeter.oinf_formulas(group, element, args.base_pd)
        report.results['regular_pd_simple'] = coxeter.regular_pd_simple(group, element)
    elif mode == 'coideals':
        report.results['coideals'] = [sorted(group.word_string(w) for w in c) for c in coxeter.coideals(group)]
    elif mode == 'afunction':
        report.results['a_function'] = dict((group.word_string(w), coxeter.a_function(group, w))
                                            for w in group.elements)
    elif mode == 'gldim':
        report.results['gl_dim_regular'] = coxeter.gldim_regular_block(group)


def _lie_module(algebra, spec):
    if spec == 'trivial':
        return liecoh.trivial_module(algebra)
    if spec == 'adjoint':
        return liecoh.adjoint_module(algebra)
    if spec.startswith('irreducible:'):
        return liecoh.sl2_irreducible(algebra, int(spec.split(':', 1)[1]))
    raise HomquiverException("Unknown module '{0}'".format(spec))


def cmd_liecoh(args, report):
    if args.file:
        algebra = exchange.parse_lie_file(args.file)
    else:
        algebra, _ = presets.load_preset(args.preset, n=args.n)
    module = _lie_module(algebra, args.module)
    report.results['algebra'] = dict(name=algebra.name, dimension=algebra.dimension,
                                     unimodular=algebra.is_unimodular())
    if args.degree is not None:
        report.results['cohomology'] = {str(args.degree): liecoh.ce_cohomology(algebra, module, args.degree)[0]}
    else:
        report.results['cohomology'] = liecoh.cohomology_dimensions(algebra, module)
    checks = dict(top=liecoh.top_degree_check, poincare=liecoh.poincare_check,
                  euler=liecoh.euler_characteristic_check)
    for name in args.check or []:
        outcome = checks[name](algebra, module)
        report.results['check_' + name] = outcome.to_dict()
        if outcome.passed is False:
            report.fail("check {0} failed".format(name))
        elif outcome.passed is None:
            report.notes.append("check {0} skipped".format(name))


def cmd_preset(args, report):
    if args.dump:
        report.results['text'] = presets.preset_text(args.name, n=args.n)
    obj, notes = presets.load_preset(args.name, n=args.n)
    report.results['annotations'] = dict((k, v) for k, v in notes.items())
    if args.self_test:
        rows = presets.self_test(args.name, n=args.n, cap=args.cap)
        report.results['self_test'] = [dict(annotation=k, expected=e, computed=c, ok=ok) for k, e, c, ok in rows]
        failed = [r[0] for r in rows if not r[3]]
        if failed:
            report.fail("annotations not reproduced: {0}".format(", ".join(failed)))


def cmd_cross_validate(args, report):
    algebra, notes = _load_algebra(args.preset)
    info = notes.get('coxeter')
    if info is None:
        raise HomquiverException("Preset carries no Coxeter annotation")
    group = coxeter.build_weyl_group(info['type'])
    result = coxeter.cross_validate(algebra, group, info['parabolic'], info['simple_verma'], info['dominant'],
                                    args.cap)
    report.results['cross_validation'] = result.to_dict()


def _common_parser(top_level=True):
    # Subcommand copies must not overwrite values given before the subcommand
    kw = dict() if top_level else dict(default=argparse.SUPPRESS)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a machine-readable report", **kw)
    common.add_argument("--verbose", action="store_true", help="log progress to stderr", **kw)
    common.add_argument("--cap", type=int, default=kw.get("default"),
                        help="degree cap (default: HOMQUIVER_CAP or 2 dim A)")
    return common


def build_parser():
    """ Argument parser with one subcommand per operation. """
    parser = argparse.ArgumentParser(prog="homquiver", parents=[_common_parser()],
                                     description="Homological invariants of quiver algebras with relations")
    parser.add_argument("--version", action="version", version="%(prog)s {0}".format(__version__))
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    sub_common = _common_parser(top_level=False)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[sub_common], help=help_text)
        p.set_defaults(func=func)
        return p

    def add_algebra(name, func, help_text):
        p = add(name, func, help_text)
        p.add_argument("algebra", help="algebra file or preset name")
        return p

    add_algebra("basis", cmd_basis, "normal-form basis")
    add_algebra("projectives", cmd_projectives, "indecomposable projectives and their Loewy series")
    p = add_algebra("resolve", cmd_resolve, "minimal projective resolution of a simple")
    p.add_argument("simple", help="vertex of the simple, e.g. L3")
    p = add_algebra("ext", cmd_ext, "Ext dimensions between two simples")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--max", type=int, default=2, help="largest degree")
    add_algebra("pd", cmd_pd, "projective dimensions of the simples")
    add_algebra("gldim", cmd_gldim, "global dimension")
    p = add_algebra("ext-quiver", cmd_ext_quiver, "Ext table over the simples")
    p.add_argument("--max", type=int, default=2, help="largest degree")
    p = add_algebra("serre", cmd_serre, "Serre subcategory generated by simples")
    p.add_argument("--simples", required=True, help="comma separated vertices")
    p.add_argument("--check-fullness", action="store_true", help="decide extension fullness")
    add_algebra("initial-segments", cmd_initial_segments, "initial segments")
    add_algebra("guichardet", cmd_guichardet, "extension fullness of every initial segment")
    p = add("coxeter", cmd_coxeter, "Weyl group evaluators")
    p.add_argument("--type", required=True, help="A1..A5, A1xA1, B2 or G2")
    p.add_argument("--parabolic", default="", help="comma separated simple reflections")
    p.add_argument("--eval", default="thm777", choices=["thm777", "pdcor", "coideals", "afunction", "gldim"])
    p.add_argument("--element", default=None, help="group element as a word, e.g. s1s2")
    p.add_argument("--base-pd", type=int, default=None, help="projective dimension to shift")
    p = add("liecoh", cmd_liecoh, "Chevalley-Eilenberg cohomology")
    p.add_argument("--preset", default="sl2_lie", choices=list(presets.LIE_PRESETS))
    p.add_argument("--file", default=None, help="Lie algebra description file")
    p.add_argument("--n", type=int, default=2, help="dimension of abelian_n")
    p.add_argument("--module", default="trivial", help="trivial, adjoint or irreducible:K")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--check", action="append", choices=["top", "poincare", "euler"])
    p = add("preset", cmd_preset, "bundled presets")
    p.add_argument("name", choices=presets.available_presets())
    p.add_argument("--self-test", action="store_true", help="recompute every annotation")
    p.add_argument("--dump", action="store_true", help="include the description text")
    p.add_argument("--n", type=int, default=2, help="dimension of abelian_n")
    p = add("cross-validate", cmd_cross_validate, "compare Weyl group predictions with the engine")
    p.add_argument("preset")
    return parser


@export
def run_command(argv):
    """ Parses the arguments and runs one command.

    Usage errors give exit code 2, computation errors and failed assertions exit code 1.

    :param argv: arguments without the program name
    :type argv: list
    :rtype: Report
    """
    report = Report(argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        report.exit_code = e.code if isinstance(e.code, int) else EXIT_USAGE
        if report.exit_code != EXIT_OK:
            report.errors.append("usage error")
        return report
    report.json = args.json
    if args.verbose:
        logging.getLogger('homquiver').setLevel(logging.DEBUG)
    try:
        args.func(args, report)
    except HomquiverException as e:
        logger.debug("Command failed", exc_info=True)
        report.fail(str(e))
        if e.data:
            report.results['error_data'] = e.data
    return report


def main(argv=None):
    """ Console entry point. """
    argv = sys.argv[1:] if argv is None else argv
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    report = run_command(argv)
    if report.json:
        print(report.to_json())
    elif report.results or report.errors or report.notes:
        print(report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
