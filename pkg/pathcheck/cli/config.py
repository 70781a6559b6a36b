# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Run configuration. Values come, by increasing precedence, from the defaults, the configuration file, the
    PATHCHECK_MAX_SEARCH environment variable (for max_search only) and the command-line flags.
"""
import os
from dataclasses import dataclass, fields, replace

from pathcheck.common.base import LOAD_ERRORS, load_json_or_yaml
from pathcheck.common.exceptions import ConfigException
from pathcheck.groupoid import DEFAULT_MAX_SEARCH
from pathcheck.kernel import KernelMode
from pathcheck.kernel.reduction import DEFAULT_MAX_REDUCTION_STEPS
from pathcheck.semantics import BACKENDS

DEFAULT_CONFIG_FILE = "configuration.yaml"
MAX_SEARCH_ENV = "PATHCHECK_MAX_SEARCH"
FORMATS = ("human", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class RunConfig(object):
    """ The resolved configuration of one run. The defaults give the intensional theory without strict J """
    extensional: bool = False
    strict_j: bool = False
    backend: str = "groupoid"
    format: str = "human"
    seed: int = 0
    max_search: int = DEFAULT_MAX_SEARCH
    max_reduction_steps: int = DEFAULT_MAX_REDUCTION_STEPS
    log_level: str = "INFO"

    def kernel_mode(self):
        return KernelMode(extensional=self.extensional, strict_j=self.strict_j)

    def violation(self):
        """ :return: what is wrong with the values, or None """
        if self.backend not in BACKENDS:
            return "backend must be one of {}".format(", ".join(BACKENDS))
        if self.format not in FORMATS:
            return "format must be one of {}".format(", ".join(FORMATS))
        if self.log_level not in LOG_LEVELS:
            return "log_level must be one of {}".format(", ".join(LOG_LEVELS))
        for name in ("max_search", "max_reduction_steps"):
            if getattr(self, name) <= 0:
                return "{} must be positive".format(name)
        return None


_TYPES = {field.name: field.type for field in fields(RunConfig)}


def _coerce(name, value):
    expected = _TYPES[name]
    if expected is bool:
        if not isinstance(value, bool):
            raise ConfigException("{} must be a boolean".format(name))
        return value
    if expected is int:
        if isinstance(value, bool):
            raise ConfigException("{} must be an integer".format(name))
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigException("{} must be an integer".format(name))
    if not isinstance(value, str):
        raise ConfigException("{} must be a string".format(name))
    return value.upper() if name == "log_level" else value


def config_from_dict(data, base=None):
    """ :return: base (the defaults by default) updated with the entries of data. Raises ConfigException """
    base = base if base is not None else RunConfig()
    if data is None:
        return base
    if not isinstance(data, dict):
        raise ConfigException("the configuration must be a mapping")
    unknown = sorted(set(data) - set(_TYPES))
    if unknown:
        raise ConfigException("unknown configuration keys: {}".format(", ".join(map(str, unknown))))
    config = replace(base, **{name: _coerce(name, value) for name, value in data.items()})
    problem = config.violation()
    if problem is not None:
        raise ConfigException(problem)
    return config


def load_config_file(file_path=None):
    """
    Reads a YAML or JSON configuration file. Without file_path, ./configuration.yaml is read when it exists.
    :return: the configuration dict, empty when there is no file
    """
    if file_path is None:
        if not os.path.isfile(DEFAULT_CONFIG_FILE):
            return {}
        file_path = DEFAULT_CONFIG_FILE
    try:
        data = load_json_or_yaml(file_path)
    except LOAD_ERRORS as e:
        raise ConfigException("cannot read the configuration file {}: {}".format(file_path, e))
    return data if data is not None else {}


def resolve_config(args, environ=None):
    """
    :param args: the parsed command line; flags left to None are not set
    :param environ: the environment variables, os.environ by default
    :return: the RunConfig of the run. Raises ConfigException
    """
    environ = environ if environ is not None else os.environ
    config = config_from_dict(load_config_file(getattr(args, "config", None)))
    if environ.get(MAX_SEARCH_ENV):
        config = config_from_dict({"max_search": environ[MAX_SEARCH_ENV]}, config)
    flags = {}
    for name in ("extensional", "strict_j", "backend", "seed", "max_search", "log_level"):
        value = getattr(args, name, None)
        if value is not None:
            flags[name] = value
    if getattr(args, "json", None):
        flags["format"] = "json"
    return config_from_dict(flags, config)
