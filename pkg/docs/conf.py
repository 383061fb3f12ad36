# -*- coding: utf-8 -*-
#
# tdnls documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))
from tdnls import __version__

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx',
              'sphinx.ext.viewcode', 'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# -- Project information -------------------------------------------------------

project = 'tdnls'
copyright = '2026, tdnls developers'

version = __version__
release = __version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}

# -- Options for HTML output ---------------------------------------------------

html_theme = 'furo'
html_static_path = []
htmlhelp_basename = 'tdnlsdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {}

latex_documents = [
  ('index', 'tdnls.tex', u'tdnls Documentation',
   u'tdnls developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'tdnls', u'tdnls Documentation',
     [u'tdnls developers'], 1)
]
