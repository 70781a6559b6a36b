# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import sys

from pathcheck.cli import main

sys.exit(main())
