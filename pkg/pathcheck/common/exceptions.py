# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Exceptions used by the different parts of pathcheck """


class PathcheckException(Exception):
    pass


class ParseException(PathcheckException):
    """ Lexical or grammar error in a .mltt source, with its position """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = "line {}, column {}: {}".format(line, column if column is not None else 0, message)
        super().__init__(message)


class SignatureException(PathcheckException):
    pass


class KernelException(PathcheckException):
    """ A rule premise failed. Carries the name of the rule and of the premise """

    def __init__(self, rule, message):
        self.rule = rule
        self.message = message
        super().__init__("{}: {}".format(rule, message))


class NormalizationLimitException(PathcheckException):
    pass


class GroupoidLawException(PathcheckException):
    pass


class SearchLimitException(PathcheckException):
    pass


class UnsupportedFormerException(PathcheckException):
    pass


class EnvironmentException(PathcheckException):
    pass


class FillerNotFoundException(PathcheckException):
    pass


class QueryException(PathcheckException):
    pass


class ConfigException(PathcheckException):
    pass
