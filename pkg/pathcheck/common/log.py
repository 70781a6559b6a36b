# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Some common functions for logging """
import logging
import re

LOGGER_NAME = "pathcheck"


def init_logging(log_level=logging.INFO):
    """
    Init logging. Reports are written on stdout, logs always go to stderr.
    :param log_level: An integer representing the log level or a string representing one
    """
    if isinstance(log_level, str):
        log_level = log_level.upper()
    logging.root.handlers = []  # remove possible side-effects from other libs
    logger = logging.getLogger(LOGGER_NAME)
    logger.handlers = []
    logger.setLevel(log_level)
    ch = logging.StreamHandler()
    ch.setLevel(log_level)
    formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    ch.setFormatter(formatter)
    logger.addHandler(ch)
    return logger


def get_logger(component):
    """
    :param component: dotted name of a pathcheck sub-package, e.g. "kernel"
    :return: the logger of this component
    """
    return logging.getLogger(LOGGER_NAME + "." + component)


def get_goal_logger(goal_name):
    """
    :param goal_name: the name of a goal, as given in reports
    :return: a logger object associated to a specific goal
    """
    return logging.getLogger(LOGGER_NAME + ".goal." + re.sub(r"[^A-Za-z0-9_\-@]", "_", goal_name))
