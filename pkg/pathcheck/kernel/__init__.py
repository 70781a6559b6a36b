# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Checker for the four judgement forms, with extensional and strict-J modes """

from pathcheck.kernel.verdict import KernelMode, Verdict, TraceStep, RULE_NAMES
from pathcheck.kernel.checker import Kernel, validate_signature, check_type, check_term, def_equal, check_program
