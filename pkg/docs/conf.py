# -*- coding: utf-8 -*-
#
# Copyright 2020 - The BDS simulator authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Sphinx configuration."""

from pkg_resources import get_distribution

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

source_suffix = '.rst'
master_doc = 'index'

project = u'BDS simulator'
copyright = u'2020, The BDS simulator authors'
author = u'The BDS simulator authors'

# Get the version string.
version = get_distribution('bds-sim').version
release = version

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'
add_function_parentheses = True
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Cooperative D2D relaying and battery life.',
}
htmlhelp_basename = 'bds_namedoc'

# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, 'bds', u'BDS simulator Documentation', [author], 1)]

intersphinx_mapping = {
    'python': ('https://docs.python.org/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
}

autoclass_content = 'both'
autodoc_member_order = 'bysource'
