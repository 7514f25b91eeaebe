# saito-forge documentation build configuration file.
#
# Only the values that differ from the Sphinx defaults are set here.

import sys
import os

# The package is documented from the source tree.
sys.path.insert(0, os.path.abspath(".."))

# -- General configuration -----------------------------------------------------

extensions = ["sphinx.ext.autodoc", "sphinx.ext.viewcode", "sphinx.ext.mathjax"]
templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "saito-forge"
copyright = "2026, saito-forge developers"
version = "0.1.0"
release = "0.1.0"

exclude_patterns = ["_build"]
pygments_style = "sphinx"

# Members of exactalg carry operator overloads; keep them in source order.
autodoc_member_order = "bysource"

# -- Options for HTML output ---------------------------------------------------

html_theme = "default"
html_static_path = ["_static"]
htmlhelp_basename = "SaitoForgedoc"

# -- Options for manual page output --------------------------------------------

man_pages = [
    (
        "commands",
        "saito-forge",
        "Exact natural Saito structures of reflection groups",
        ["saito-forge developers"],
        1,
    )
]
