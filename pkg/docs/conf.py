# Configuration file for the Sphinx documentation builder.
import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import credal_decide  # noqa: E402

if os.environ.get("READTHEDOCS", ""):
    # RTD doesn't use the repo's Makefile to build docs.
    import subprocess

    subprocess.run(
        ["sphinx-apidoc", "--force", "-o", "./api", "../credal_decide", "*tests"]
    )

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.autosummary",
    "sphinx_click",
]

templates_path = ["_templates"]
source_suffix = [".rst"]
master_doc = "index"

project = "credal-decide"
copyright = "2026, The credal-decide developers"
author = "The credal-decide developers"

version = credal_decide.__version__
release = credal_decide.__version__

language = "en"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store", "*tests*"]
pygments_style = "sphinx"

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = "credal-decidedoc"

man_pages = [(master_doc, "credal-decide", "credal-decide Documentation", [author], 1)]

napoleon_numpy_docstring = True
napoleon_google_docstring = False
napoleon_include_init_with_doc = True
napoleon_include_special_with_doc = True

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable", None),
    "xarray": ("https://docs.xarray.dev/en/stable", None),
}
