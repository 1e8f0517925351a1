# -*- coding: utf-8  -*-

import re
from setuptools import setup, find_packages

__version__ = re.findall(r"__version__\s*\=\s*'([\w\.\-]+)'",
                         open('twofactor/_version.py').read())[0]


setup(
    name='two-factor',
    version=__version__,
    packages=find_packages(exclude=['tests']),
    install_requires=['lxml', 'numpy', 'networkx', 'tqdm'],
    entry_points={'console_scripts': ['twofactor = twofactor.cli:main']}
)
