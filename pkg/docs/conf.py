# Configuration file for the Sphinx documentation builder.
#
# http://www.sphinx-doc.org/en/master/config

import datetime
import os
import sys

sys.path.insert(0, os.path.abspath(".."))

from genramsey import __author__, __version__  # noqa: E402

# -- Project information -----------------------------------------------------

project = "genramsey"
year = datetime.datetime.now().year
copyright = f"{year}, {__author__}"
author = __author__

version = __version__
release = __version__

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "friendly"

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = "genramseydoc"

# -- Extension configuration -------------------------------------------------

autodoc_member_order = "bysource"
napoleon_google_docstring = True
napoleon_numpy_docstring = False
