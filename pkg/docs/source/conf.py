# -*- coding: utf-8 -*-
#
# twofactor documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('../..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.doctest',
]

doctest_global_setup = '''
from twofactor import *
from twofactor.generators import *'''

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'twofactor'
copyright = u'2026'

# The short X.Y version and the full version, read from the package.
_version_ns = {}
with open(os.path.join(os.path.dirname(__file__), '../../twofactor/_version.py')) as f:
    exec(f.read(), _version_ns)
release = _version_ns['__version__']
version = '.'.join(release.split('.')[:2])

exclude_patterns = []
pygments_style = 'sphinx'
autodoc_member_order = 'bysource'

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'twofactordoc'

man_pages = [
    ('index', 'twofactor', u'twofactor Documentation', [], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'networkx': ('https://networkx.org/documentation/stable', None)}
