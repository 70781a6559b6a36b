# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.
#

import os

__version__ = "0.3.dev0"
__tool__ = "pathcheck"


def get_root_path():
    """ Returns the pathcheck package root path """
    return os.path.abspath(os.path.dirname(__file__))


def get_samples_path(*parts):
    """ Returns the path of a bundled sample program (or of the samples directory) """
    return os.path.join(get_root_path(), "samples", *parts)
