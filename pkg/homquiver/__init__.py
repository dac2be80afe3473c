""" Homological invariants of finite-dimensional quiver algebras with relations in pure Python

.. moduleauthor:: homquiver developers

"""

# Library version
__version__ = "1.0.0"

# Author and license
__author__ = "homquiver developers"
__license__ = "MIT"

# Optional variables
__description__ = 'Exact homological algebra for quiver algebras with relations'
__keywords__ = 'quiver path-algebra projective-resolution Ext global-dimension Serre-subcategory ' \
               'Guichardet Bruhat-order Lie-algebra-cohomology'

# Support for "from homquiver import *"
# @see: https://stackoverflow.com/a/41895257
# @see: https://stackoverflow.com/a/35710527
__all__ = [
    'cli',
    'coxeter',
    'exceptions',
    'exchange',
    'homology',
    'liecoh',
    'linalg',
    'pathalg',
    'presets',
    'repcat',
    'serre'
]
