# -*- coding: utf-8 -*-
#
# Sphinx configuration for the pyharnack documentation.

import sys
import os

path = os.path.abspath(os.path.dirname(__file__))
sys.path.insert(0, os.path.join(path, '..'))

# numpy-style docstrings are parsed by napoleon
extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]
napoleon_google_docstring = False
napoleon_numpy_docstring = True
autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pyharnack'
copyright = u'2026, the pyharnack developers'

import pyharnack
version = pyharnack.__version__
release = pyharnack.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'pyharnackdoc'

latex_documents = [
  ('index', 'pyharnack.tex', u'pyharnack Documentation',
   u'the pyharnack developers', 'manual'),
]
man_pages = [
    ('index', 'pyharnack', u'pyharnack Documentation',
     [u'the pyharnack developers'], 1)
]
