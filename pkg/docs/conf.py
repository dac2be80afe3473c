# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('../'))
import homquiver


# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.doctest',
              'sphinx.ext.todo',
              'sphinx.ext.coverage',
              'sphinx.ext.imgmath',
              'sphinx.ext.ifconfig',
              'sphinx.ext.autosummary',
              'sphinx.ext.inheritance_diagram']

# Inheritance diagram configuration
inheritance_graph_attrs = dict(rankdir="LR", ratio='compress')

# Disable autosummary
autosummary_generate = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'homquiver'
copyright = u'2026, homquiver developers'
author = homquiver.__author__
description = homquiver.__description__

# The short X.Y version and the full version
version = homquiver.__version__
release = homquiver.__version__

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False


# -- Options for HTML output -------------------------------------------------

html_theme = 'default'
html_theme_options = {}
html_static_path = ['_static']
html_copy_source = False
html_show_sourcelink = False
htmlhelp_basename = 'homquiver_doc'


# -- Options for LaTeX output ------------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'homquiver.tex', u'homquiver Documentation', author, 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'homquiver', u'homquiver Documentation', [author], 1)
]


# -- Options for Texinfo output ----------------------------------------------

texinfo_documents = [
    (master_doc, 'homquiver', u'homquiver Documentation', author, 'homquiver', description, 'Miscellaneous'),
]
