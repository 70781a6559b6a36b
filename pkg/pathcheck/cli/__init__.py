# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Command-line front door: check, interpret, demo and hom """

from pathcheck.cli.config import RunConfig, config_from_dict, load_config_file, resolve_config
from pathcheck.cli.reports import make_report, render, exit_code
from pathcheck.cli.commands import cmd_check, cmd_interpret, cmd_demo, cmd_hom
from pathcheck.cli.main import main, get_parser
