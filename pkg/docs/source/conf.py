# Configuration file for the Sphinx documentation builder.

import os
import sys

sys.path.insert(0, os.path.abspath("../../src"))

from glvar import __version__

# -- Project information -----------------------------------------------------
project = "glvar"
copyright = "2026, glvar"
author = "glvar"
release = __version__
version = ".".join(__version__.split(".")[:2])

# -- General configuration ---------------------------------------------------
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",  # Google-style docstrings
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.doctest",
]

templates_path = ["_templates"]
exclude_patterns = []

# Docstrings write GL_n, Sh_k and φ_t in plain text; keep them literal.
default_role = "code"

# -- Options for HTML output -------------------------------------------------
html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]
html_title = f"glvar {release}"

suppress_warnings = [
    "config.cache",
    "intersphinx.external",
    "autosectionlabel.*",
]

# -- Napoleon settings (Google-style docstrings) ----------------------------
napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_init_with_doc = False
napoleon_include_private_with_doc = False
napoleon_use_admonition_for_examples = False
napoleon_use_ivar = True
napoleon_use_rtype = True
napoleon_attr_annotations = True
napoleon_type_aliases = {
    "Scalar": "glvar.equimap.maps.Scalar",
    "Point": "glvar.polyalg.solve.Point",
    "System": "glvar.polyalg.solve.System",
}

# -- Intersphinx configuration -----------------------------------------------
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
    "typer": ("https://typer.tiangolo.com/", None),
}
intersphinx_timeout = 5

# -- Autodoc configuration ---------------------------------------------------
autodoc_default_options = {
    "members": True,
    "member-order": "bysource",
    "undoc-members": True,
    "exclude-members": "__weakref__, __dataclass_fields__, __dataclass_params__, __match_args__",
}
autodoc_class_signature = "separated"
autodoc_typehints = "description"
autodoc_typehints_description_target = "documented"

# -- Doctest configuration ---------------------------------------------------
# Imports shared by the doctest builder.
doctest_global_setup = """
from fractions import Fraction
from glvar.partitions import Partition, PartitionTuple
from glvar.polyalg import Ideal, PolynomialRing
"""


def skip_reexported_members(app, what, name, obj, skip, options):
    """Document each class and function only in the module that defines it.

    The subpackage ``__init__`` modules re-export everything through
    ``__all__``; without this hook every object would appear twice.
    """
    if what == "module" and hasattr(obj, "__module__"):
        documented = getattr(app.env, "temp_data", {}).get("autodoc:module")
        if documented and obj.__module__ and obj.__module__ != documented:
            return True
    return skip


def setup(app):
    app.connect("autodoc-skip-member", skip_reexported_members)
