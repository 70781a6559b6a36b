# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" YAML for pathcheck files, based on PyYAML: mappings keep their order, tuples are written as flow sequences """
from collections import OrderedDict

import yaml
try:
    from yaml import CSafeLoader as SafeLoader
    from yaml import CSafeDumper as SafeDumper
except ImportError:
    from yaml import SafeLoader, SafeDumper

_MAPPING_TAG = yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG
_SEQUENCE_TAG = yaml.resolver.BaseResolver.DEFAULT_SEQUENCE_TAG


class OrderedLoader(SafeLoader):
    """ Safe loader building OrderedDicts, so that the declaration order of environment files is kept """


class OrderedDumper(SafeDumper):
    """ Safe dumper writing mappings in insertion order, and tuples (object pairs, morphism images) inline """


def _construct_mapping(loader, node):
    loader.flatten_mapping(node)
    return OrderedDict(loader.construct_pairs(node))


def _represent_mapping(dumper, data):
    return dumper.represent_mapping(_MAPPING_TAG, list(data.items()))


def _represent_tuple(dumper, data):
    return dumper.represent_sequence(_SEQUENCE_TAG, list(data), flow_style=True)


OrderedLoader.add_constructor(_MAPPING_TAG, _construct_mapping)
OrderedDumper.add_representer(dict, _represent_mapping)
OrderedDumper.add_representer(OrderedDict, _represent_mapping)
OrderedDumper.add_representer(tuple, _represent_tuple)


def load(stream):
    """ Parses the first YAML document of a configuration, environment or query file (a string or a file) """
    return yaml.load(stream, OrderedLoader)


def dump(data, stream=None, **kwds):
    """ Serializes data as block-style YAML. Returns the string when stream is None """
    return yaml.dump(data, stream, OrderedDumper, allow_unicode=True, default_flow_style=False, indent=2, **kwds)
