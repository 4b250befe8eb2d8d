# Configuration file for the Sphinx documentation builder.

# -- Path setup --------------------------------------------------------------

import sphinx_rtd_theme

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

from spexlab.version import __version__ as version


# -- Project information -----------------------------------------------------

project = 'spexlab'
copyright = '2026, the spexlab developers'
author = 'the spexlab developers'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.napoleon',
    'sphinx_rtd_theme',
    'sphinx.ext.autosectionlabel',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'm2r2',
]

templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store', 'README.md']

suppress_warnings = ['autosectionlabel.*']


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_theme_options = {
    'navigation_depth': 2
}

autodoc_member_order = 'bysource'

autosectionlabel_prefix_document = True

rst_prolog = """
.. |LIBRARY_VERSION| replace:: """ + version + """
"""

intersphinx_mapping = {
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None)
}
