"""
.. module:: presets
    :platform: Unix, Windows
    :synopsis: Bundled quiver algebras and Lie algebras with annotated invariants

.. moduleauthor:: homquiver developers

"""

import logging
import os
import random
from fractions import Fraction
from math import comb
from . import _exchange as exch
from . import coxeter
from . import exchange
from . import homology
from . import liecoh
from . import repcat
from . import serre
from .linalg import Matrix
from ._utilities import export
from .exceptions import HomquiverException

logger = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')

#: Quiver presets stored as algebra descriptions
ALGEBRA_PRESETS = ('sl2_principal', 'sl3_singular_monomial', 'sl3_singular')

#: Lie algebra presets; ``abelian_n`` takes the dimension as a parameter
LIE_PRESETS = ('abelian_n', 'sl2_lie', 'borel_sl2', 'heisenberg', 'g_plus_g_sl2')

_LIE_FILES = {'sl2_lie': 'sl2.lie', 'borel_sl2': 'borel_sl2.lie', 'heisenberg': 'heisenberg.lie'}

__all__ = ['ALGEBRA_PRESETS', 'LIE_PRESETS']


@export
def available_presets():
    """ Names of all bundled presets. """
    return list(ALGEBRA_PRESETS) + list(LIE_PRESETS)


def _check_name(name):
    if name not in available_presets():
        raise HomquiverException("unknown preset '{0}'".format(name), data=dict(available=available_presets()))


@export
def preset_text(name, **kwargs):
    """ Description text of a preset in the algebra or Lie algebra format.

    **Keyword Arguments:**

    * ``n``: dimension of ``abelian_n``. *Default: 2*
    """
    _check_name(name)
    if name in ALGEBRA_PRESETS:
        return exch.read_file(os.path.join(DATA_DIR, name + '.alg'))
    if name in _LIE_FILES:
        return exch.read_file(os.path.join(DATA_DIR, _LIE_FILES[name]))
    algebra, _ = load_preset(name, **kwargs)
    return exchange.dump_lie_text(algebra)


def _lie_annotations(name, algebra):
    n = algebra.dimension
    if name == 'abelian_n':
        betti = [comb(n, d) for d in range(n + 1)]
    elif name == 'g_plus_g_sl2':
        betti = [1, 0, 0, 2, 0, 0, 1]
    else:
        betti = dict(sl2_lie=[1, 0, 0, 1], borel_sl2=[1, 1, 0], heisenberg=[1, 2, 2, 1])[name]
    return dict(kind='lie', cohomology_trivial=betti, unimodular=name != 'borel_sl2',
                provenance=dict(cohomology_trivial='derived', unimodular='derived'))


@export
def load_preset(name, **kwargs):
    """ Loads a bundled preset.

    Quiver presets are parsed from their description files and built; Lie algebra presets are parsed from their
    description files or constructed.

    .. code-block:: python

        from homquiver import presets

        alg, notes = presets.load_preset('sl3_singular')
        alg.dimension  # 14
        notes['pd']  # {'1': 1, '2': 2, '3': 2}

    **Keyword Arguments:**

    * ``n``: dimension of ``abelian_n``. *Default: 2*
    * ``cap``: maximal path length for quiver presets

    :param name: preset name
    :type name: str
    :return: tuple of (PathAlgebra or LieAlgebra, annotations)
    :rtype: tuple
    :raises HomquiverException: "unknown preset"
    """
    _check_name(name)
    if name in ALGEBRA_PRESETS:
        data = exchange.parse_algebra_text(preset_text(name))
        build_args = dict()
        if kwargs.get('cap', None) is not None:
            build_args['cap'] = kwargs['cap']
        algebra = exchange.build_algebra(data, **build_args)
        annotations = dict(data.annotations)
        annotations['kind'] = 'quiver'
        return algebra, annotations
    if name == 'abelian_n':
        n = int(kwargs.get('n', 2))
        if n < 1:
            raise HomquiverException("abelian_n needs a positive dimension", data=dict(n=n))
        algebra = liecoh.abelian(n)
    elif name == 'g_plus_g_sl2':
        algebra = liecoh.g_plus_g_sl2()
    else:
        algebra = exchange.parse_lie_text(preset_text(name))
    return algebra, _lie_annotations(name, algebra)


def _row(key, expected, computed):
    return key, expected, computed, expected == computed


def _quiver_self_test(algebra, notes, cap):
    vertices = algebra.quiver.vertices
    rows = []
    resolutions = dict(zip(vertices, homology.simple_resolutions(algebra, cap)))
    if 'dimension' in notes:
        rows.append(_row('dimension', notes['dimension'], algebra.dimension))
    for v, dims in sorted(notes.get('projective_dims', dict()).items()):
        rows.append(_row('projective_dims[{0}]'.format(v), dims, list(algebra.projective(vertices.index(v)).dims)))
    for v, layers in sorted(notes.get('loewy', dict()).items()):
        computed = [list(layer) for layer in repcat.loewy_series(algebra.projective(vertices.index(v)))]
        rows.append(_row('loewy[{0}]'.format(v), layers, computed))
    for v, value in sorted(notes.get('pd', dict()).items()):
        rows.append(_row('pd[{0}]'.format(v), value, resolutions[v].proj_dim()))
    if 'gl_dim' in notes:
        rows.append(_row('gl_dim', notes['gl_dim'], max([r.proj_dim() for r in resolutions.values()] + [0])))
    for v, names in sorted(notes.get('resolutions', dict()).items()):
        rows.append(_row('resolution[{0}]'.format(v), names, resolutions[v].term_names()))
    for src, tgt, d, value in notes.get('ext', []):
        computed = homology.ext_dim(repcat.simple(algebra, src), repcat.simple(algebra, tgt), d, cap=cap)
        rows.append(_row('ext^{0}({1},{2})'.format(d, src, tgt), value, computed))
    if 'initial_segments' in notes:
        computed = [list(s) for s in serre.initial_segments(algebra, cap)]
        rows.append(_row('initial_segments', notes['initial_segments'], computed))
    if 'guichardet' in notes or 'failing_includes' in notes:
        report = serre.guichardet(algebra, cap)
        if 'guichardet' in notes:
            rows.append(_row('guichardet', notes['guichardet'], report.verdict))
        failing = [list(s) for s in report.failing_segments()]
        for segment in notes.get('failing_includes', []):
            rows.append(_row('not_extension_full{0}'.format(segment), True, list(segment) in failing))
    if 'coxeter' in notes:
        info = notes['coxeter']
        group = coxeter.build_weyl_group(info['type'])
        predicted = list(coxeter.thm777_eval(group, info['parabolic']))
        computed = [resolutions[info['simple_verma']].proj_dim(),
                    max([r.proj_dim() for r in resolutions.values()] + [0])]
        rows.append(_row('coxeter.pd_simple_verma', predicted[0], computed[0]))
        rows.append(_row('coxeter.gl_dim', predicted[1], computed[1]))
        for v in info['dominant']:
            rows.append(_row('coxeter.pd_dominant[{0}]'.format(v), predicted[2], resolutions[v].proj_dim()))
        if 'vertex_of' in info:
            corr = coxeter.initseg_correspondence(algebra, group, info['vertex_of'], cap)
            rows.append(_row('coxeter.coideals_to_segments', True, corr['bijective']))
            rows.append(_row('coxeter.regular_pd_formula', True, corr['pd_matches']))
    return rows


def _lie_self_test(algebra, notes):
    trivial = liecoh.trivial_module(algebra)
    rows = [_row('cohomology_trivial', notes['cohomology_trivial'], liecoh.cohomology_dimensions(algebra, trivial)),
            _row('unimodular', notes['unimodular'], algebra.is_unimodular())]
    for module in (trivial, liecoh.adjoint_module(algebra)):
        rows.append(_row('top_degree[{0}]'.format(module.name), True, liecoh.top_degree_check(algebra, module).passed))
        if algebra.is_unimodular():
            rows.append(_row('poincare[{0}]'.format(module.name), True,
                             liecoh.poincare_check(algebra, module).passed))
    return rows


@export
def self_test(name, **kwargs):
    """ Recomputes every annotation of a preset with the engine.

    **Keyword Arguments:**

    * ``cap``: degree cap for the homological computations
    * ``n``: dimension of ``abelian_n``. *Default: 2*

    :param name: preset name
    :type name: str
    :return: list of ``(annotation, expected, computed, ok)`` rows
    :rtype: list
    """
    obj, notes = load_preset(name, n=kwargs.get('n', 2))
    if notes['kind'] == 'quiver':
        rows = _quiver_self_test(obj, notes, kwargs.get('cap', None))
    else:
        rows = _lie_self_test(obj, notes)
    failed = [r[0] for r in rows if not r[3]]
    if failed:
        logger.warning("Preset %s: %d annotation(s) not reproduced: %s", name, len(failed), ", ".join(failed))
    else:
        logger.info("Preset %s: all %d annotations reproduced", name, len(rows))
    return rows


def _random_matrix(rng, size, low=-2, high=2):
    return Matrix([[rng.randint(low, high) for _ in range(size)] for _ in range(size)], size)


def _random_pieces(algebra, rng, budget):
    """ Small modules whose direct sum has dimension at most ``budget``. """
    name = algebra.name
    pieces = []
    while budget > 0 and (not pieces or rng.random() < 0.6):
        if name.startswith('abelian'):
            size = rng.randint(1, budget)
            base = _random_matrix(rng, size)
            ident = Matrix.identity(size)
            mats = [ident.scale(rng.randint(-2, 2)) + base.scale(rng.randint(-2, 2)) + (base * base).scale(
                rng.randint(-1, 1)) for _ in range(algebra.dimension)]
            piece = liecoh.LieModule(algebra, mats, name="commuting")
        elif name in ('sl2', 'borel_sl2'):
            k = rng.randint(0, budget - 1)
            piece = liecoh.sl2_irreducible(algebra, k)
            if name == 'borel_sl2' and rng.random() < 0.5:
                piece = liecoh.character_module(algebra, [rng.randint(-3, 3), 0])
        elif name == 'heisenberg':
            if budget >= 3 and rng.random() < 0.5:
                x = Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]], 3)
                y = Matrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]], 3)
                z = Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]], 3)
                piece = liecoh.LieModule(algebra, [x, y, z], name="standard")
            else:
                piece = liecoh.character_module(algebra, [rng.randint(-2, 2), rng.randint(-2, 2), 0])
        elif name == 'sl2+sl2':
            left, right = liecoh.sl2(), liecoh.sl2()
            k1 = rng.randint(0, budget - 1)
            k2 = rng.randint(0, budget // (k1 + 1) - 1)
            piece = liecoh.module_tensor(liecoh.sl2_irreducible(left, k1), liecoh.sl2_irreducible(right, k2),
                                         algebra=algebra)
        else:
            piece = liecoh.trivial_module(algebra, rng.randint(1, budget))
        pieces.append(piece)
        budget -= piece.dimension
    return pieces


@export
def random_lie_module(algebra, rng=None, **kwargs):
    """ Random rational module of small dimension over a preset Lie algebra.

    A direct sum of small modules is written in a random basis, so the action matrices are dense.

    **Keyword Arguments:**

    * ``max_dim``: upper bound of the dimension. *Default: 4*

    :param algebra: Lie algebra of a preset
    :type algebra: liecoh.LieAlgebra
    :param rng: random number generator
    :type rng: random.Random
    :rtype: liecoh.LieModule
    """
    rng = rng if rng is not None else random.Random(0)
    max_dim = int(kwargs.get('max_dim', 4))
    module = liecoh.module_direct_sum(_random_pieces(algebra, rng, max_dim))
    size = module.dimension
    # Unit upper triangular, hence invertible
    change = [[Fraction(int(i == j)) if j <= i else Fraction(rng.randint(-2, 2)) for j in range(size)]
              for i in range(size)]
    return liecoh.transport_module(module, Matrix(change, size))
