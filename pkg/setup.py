#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import os
from setuptools import setup, find_packages

import pathcheck

install_requires = [
    "PyYAML>=3.11",
]

test_requires = [
    "pytest>=6.0",
]

# Setup
setup(
    name="pathcheck",
    version=pathcheck.__version__,
    description="A proof checker for type theory with identity types, and its interpretation in finite groupoids.",
    packages=find_packages(exclude=["examples", "examples.*"]),
    package_data={"pathcheck": ["samples/*.mltt"]},
    python_requires=">=3.7",
    install_requires=install_requires,
    tests_require=test_requires,
    extras_require={
        "test": test_requires
    },

    scripts=[
        'bin/pathcheck'
    ],

    include_package_data=True,
    license="AGPL 3",
    long_description=open(os.path.join(os.path.dirname(__file__), 'README.rst'), encoding='utf8').read()
)
