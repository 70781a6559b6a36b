# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Reading and writing pathcheck files: .mltt sources, and JSON or YAML data chosen by file extension """
import codecs
import json
import os.path

import yaml

from pathcheck.common import custom_yaml

# What loading a data file may raise: unreadable file, bad JSON, bad YAML
LOAD_ERRORS = (IOError, ValueError, yaml.YAMLError)


def is_json_path(file_path):
    return os.path.splitext(file_path)[1].lower() == ".json"


def load_json_or_yaml(file_path):
    """ Loads a configuration, environment or query file: JSON for .json files, YAML otherwise """
    with codecs.open(file_path, "r", "utf-8") as f:
        return json.load(f) if is_json_path(file_path) else custom_yaml.load(f)


def write_json_or_yaml(file_path, content):
    with codecs.open(file_path, "w", "utf-8") as f:
        f.write(dump_json(content) if is_json_path(file_path) else custom_yaml.dump(content))


def dump_json(content):
    """ Deterministic JSON rendering: insertion ordered keys, fixed separators, trailing newline """
    return json.dumps(content, sort_keys=False, indent=2, separators=(',', ': '), ensure_ascii=False) + "\n"


def read_source(file_path):
    """ Reads a .mltt source file (always UTF-8) """
    with codecs.open(file_path, "r", "utf-8") as f:
        return f.read()
