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
"""Battery Deposit Service simulator for D2D cooperative relaying."""

import os

from setuptools import find_packages, setup

readme = open('README.rst').read()

tests_require = [
    'coverage>=4.5.3',
    'flake8>=3.5',
    'isort==4.3.4',
    'pydocstyle>=3.0.0',
    'pytest-cache>=1.0',
    'pytest-cov>=2.5.1',
    'pytest-flake8>=1.0.4',
    'pytest-pep8>=1.0.6',
    'pytest-yapf>=0.1.1',
    'pytest>=4.0.0',
    'unify>=0.4',
    'yapf==0.27.0',
]

extras_require = {
    'docs': [
        'Sphinx>=1.6.3',
    ],
    'tests': tests_require,
}

setup_requires = [
    'pytest-runner>=2.6.2',
]

extras_require['all'] = list(setup_requires)
for name, reqs in extras_require.items():
    if name.startswith(':'):
        continue
    extras_require['all'].extend(reqs)

install_requires = [
    'attrs>=18.2.0',
    'click-completion>=0.5.0',
    'click>=7.0',
    'filelock>=3.0.0',
    'numpy>=1.17.0',
    'PyYAML>=5.1',
    'scipy>=1.3.0',
    'tabulate>=0.7.7',
]

packages = find_packages(exclude=['tests', 'tests.*'])

# Get the version string without importing numpy.
g = {}
with open(os.path.join('bds', 'version.py'), 'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

setup(
    name='bds-sim',
    version=version,
    description=__doc__,
    long_description=readme,
    long_description_content_type='text/x-rst',
    keywords='D2D relaying battery simulation LTE',
    license='Apache License 2.0',
    author='The BDS simulator authors',
    packages=packages,
    zip_safe=False,
    include_package_data=True,
    platforms='any',
    entry_points={
        'console_scripts': ['bds=bds.cli:cli'],
    },
    extras_require=extras_require,
    install_requires=install_requires,
    setup_requires=setup_requires,
    tests_require=tests_require,
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Development Status :: 4 - Beta',
    ],
)
