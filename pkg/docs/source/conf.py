# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html
import pygpa


# -- Project information -----------------------------------------------------
project = 'pygpa'
copyright = '2026, pygpa developers'
author = 'pygpa developers'

release = pygpa.__version__
version = pygpa.__version__[:3]


# -- General configuration ---------------------------------------------------
extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx', 'sphinx.ext.autosummary', 'sphinx.ext.mathjax',
              'numpydoc']
intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable/', None),
                       'networkx': ('https://networkx.org/documentation/stable/', None)}

templates_path = ['_templates']

autoclass_content = 'both'
autosummary_generate = True
numpydoc_show_class_members = False

source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = None

modindex_common_prefix = ['pygpa.']


# -- Options for HTML output -------------------------------------------------
html_theme = 'bizstyle'
html_static_path = ['_static']
html_title = 'pygpa Documentation'
html_sidebars = {'**': ['globaltoc.html', 'relations.html', 'searchbox.html']}
htmlhelp_basename = 'pygpadoc'


# -- Options for LaTeX and manual page output --------------------------------
latex_documents = [
    (master_doc, 'pygpa.tex', 'pygpa Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'pygpa', 'pygpa Documentation', [author], 1)
]
