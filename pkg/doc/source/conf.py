# Configuration file for the Sphinx documentation builder.
# Only the options that differ from the sphinx-quickstart defaults are set here.

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

# -- Project information -----------------------------------------------------

project = "rmb-ist"
copyright = "2026, rmb-ist developers"
author = "rmb-ist developers"

# The short X.Y version and the full version, including alpha/beta/rc tags
exec(open("../../rmb_ist/version.py").read())
version = __version__  # type: ignore # noqa F821
release = __version__  # type: ignore # noqa F821

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx_autodoc_typehints",
    "sphinxcontrib.apidoc",  # automatically generate API docs
    "m2r",
]

# apidoc settings
apidoc_module_dir = "../../rmb_ist"
apidoc_output_dir = "api"
apidoc_excluded_paths = ["**/*test*"]
apidoc_module_first = True
apidoc_separate_modules = True
apidoc_extra_args = ["-d 6"]

# mock imports
autodoc_mock_imports = [
    "numpy",
    "pandas",
    "scipy",
    "tqdm"
]

# Napoleon settings, docstrings are numpydoc without types
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = True
napoleon_include_private_with_doc = False
napoleon_use_param = True
napoleon_use_rtype = False

templates_path = ["_templates"]
source_suffix = [".rst", ".md"]
master_doc = "index"
language = None
exclude_patterns = []
pygments_style = None

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = "rmb-istdoc"

man_pages = [(master_doc, "rmb-ist", "rmb-ist Documentation", [author], 1)]
