# Configuration file for the Sphinx documentation builder.

import os
import sys

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath('../../'))

project = 'Hardysim'
copyright = '2026, The Hardysim team'
author = 'The Hardysim team'
release = '0.1'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]
autodoc_member_order = 'bysource'

templates_path = ['_templates']
master_doc = 'index'
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}
