# -*- coding: utf-8 -*-
#
# Sphinx configuration of the pinn-bench API documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

project = 'pinn-bench'
copyright = '2026, pinn-bench developers'
author = 'pinn-bench developers'
version = '0.1'
release = '0.1.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
]
autoclass_content = 'both'
autodoc_member_order = 'bysource'
autodoc_mock_imports = ['matplotlib']

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = []

html_theme = 'alabaster'
htmlhelp_basename = 'PinnBenchdoc'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'pydantic': ('https://docs.pydantic.dev/latest', None),
}
