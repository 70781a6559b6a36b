# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Semantic environments: a fibration for each declared type family and a section for each declared term constant.

    An environment file is JSON or YAML:

        backend: groupoid            # or discrete
        preset: interval             # optional: interval, z2 or discrete-N
        types:
          A: <groupoid>              # closed family: the total groupoid
          B: {total: <groupoid>, map: <functor>}
        terms:
          a: <functor>               # section from the telescope groupoid to the total of the result

    Entries missing from the file are filled by the preset: closed families by the preset groupoid G, indexed
    families by the constant family base x G, and the k-th constant of a given type by its k-th section in
    lexicographic order.
"""
import re
from collections import OrderedDict, namedtuple

from pathcheck.common.base import LOAD_ERRORS, load_json_or_yaml
from pathcheck.common.exceptions import EnvironmentException, GroupoidLawException
from pathcheck.common.log import get_logger
from pathcheck.groupoid import FunctorConstraints, PathObject, compose, cyclic, discrete, enumerate_functors, \
    functor_from_json, groupoid_from_json, identity_functor, interval, is_fibration, pairing, product, pullback, \
    relative_path_object, terminal_map
from pathcheck.semantics.interpreter import Interpreter
from pathcheck.syntax.terms import DefDecl, TermConstDecl, TypeFamilyDecl

_logger = get_logger("semantics.environment")

BACKENDS = ("groupoid", "discrete")

FamilyEntry = namedtuple("FamilyEntry", ["telescope", "fibration"])
ConstantEntry = namedtuple("ConstantEntry", ["telescope", "result", "section"])


def preset_groupoid(name):
    """ :return: the groupoid of a preset: "interval", "z2" or "discrete-N". Raises EnvironmentException """
    if name == "interval":
        return interval()
    if name == "z2":
        return cyclic(2)
    match = re.match(r"^discrete-(\d+)$", name or "")
    if match:
        return discrete(int(match.group(1)))
    raise EnvironmentException("unknown preset {}".format(name))


class SemEnv(object):
    """ The interpretation of a signature, built declaration by declaration """

    def __init__(self, signature, backend="groupoid"):
        if backend not in BACKENDS:
            raise EnvironmentException("unknown backend {}".format(backend))
        self.signature = signature
        self.backend = backend
        self._families = OrderedDict()
        self._constants = OrderedDict()
        self._paths = {}

    def family(self, name):
        if name not in self._families:
            raise EnvironmentException("no interpretation for the type family {}".format(name))
        return self._families[name]

    def constant(self, name):
        if name not in self._constants:
            raise EnvironmentException("no interpretation for the term constant {}".format(name))
        return self._constants[name]

    def add_family(self, name, telescope, fibration):
        if fibration.cod != telescope.total:
            raise EnvironmentException("{} does not lie over the interpretation of its telescope".format(name))
        if not is_fibration(fibration):
            raise EnvironmentException("{} is not interpreted by a fibration".format(name))
        if self.backend == "discrete" and not fibration.dom.is_discrete():
            raise EnvironmentException("{} is not discrete, as the discrete backend requires".format(name))
        self._families[name] = FamilyEntry(telescope, fibration)

    def add_constant(self, name, telescope, result, section):
        if section.dom != telescope.total or section.cod != result.total \
                or not compose(result.projection, section).is_identity():
            raise EnvironmentException("{} is not interpreted by a section of its type".format(name))
        self._constants[name] = ConstantEntry(telescope, result, section)

    def path_structure(self, fibration):
        """
        :return: the PathObject interpreting identity types over the fibration: its relative path object, or its
                 relative diagonal in the discrete backend
        """
        if fibration not in self._paths:
            if self.backend == "groupoid":
                path = relative_path_object(fibration)
            else:
                E = fibration.dom
                path = PathObject(E, identity_functor(E), pairing(identity_functor(E), identity_functor(E),
                                                                  target=pullback(fibration, fibration).groupoid))
            self._paths[fibration] = path
        return self._paths[fibration]

    def to_json(self):
        return OrderedDict([
            ("backend", self.backend),
            ("types", OrderedDict((name, OrderedDict([("total", entry.fibration.dom.to_json()),
                                                      ("map", entry.fibration.to_json())]))
                                  for name, entry in self._families.items())),
            ("terms", OrderedDict((name, entry.section.to_json()) for name, entry in self._constants.items())),
        ])


def _family_from_json(name, data, telescope):
    if "objects" in data:
        if len(telescope):
            raise EnvironmentException("{} has a telescope: give its total and its map".format(name))
        return terminal_map(groupoid_from_json(data))
    return functor_from_json(data["map"], groupoid_from_json(data["total"]), telescope.total)


def build_env(signature, data=None, backend=None):
    """
    :param data: the decoded environment file, or None to use the preset only
    :param backend: overrides the backend of data
    :return: the SemEnv of signature. Raises EnvironmentException
    """
    data = data if data is not None else {}
    if not isinstance(data, dict):
        raise EnvironmentException("an environment is a mapping")
    env = SemEnv(signature, backend or data.get("backend", "groupoid"))
    preset = data.get("preset")
    G = preset_groupoid(preset) if preset is not None else None
    types, terms = data.get("types") or {}, data.get("terms") or {}
    interpreter = Interpreter(env)
    ordinals = {}

    for decl in signature:
        if isinstance(decl, DefDecl):
            continue
        telescope = interpreter.context(decl.telescope)
        try:
            if isinstance(decl, TypeFamilyDecl):
                if decl.name in types:
                    fibration = _family_from_json(decl.name, types[decl.name], telescope)
                elif G is None:
                    raise EnvironmentException("no interpretation for the type family {}".format(decl.name))
                elif not len(telescope):
                    fibration = terminal_map(G)
                else:
                    fibration = product(telescope.total, G).first
                env.add_family(decl.name, telescope, fibration)
            elif isinstance(decl, TermConstDecl):
                result = interpreter.type(telescope, decl.result)
                k = ordinals.get(result, 0)
                ordinals[result] = k + 1
                if decl.name in terms:
                    section = functor_from_json(terms[decl.name], telescope.total, result.total)
                elif G is None:
                    raise EnvironmentException("no interpretation for the term constant {}".format(decl.name))
                else:
                    section = _preset_section(decl.name, telescope, result, k)
                env.add_constant(decl.name, telescope, result, section)
        except (GroupoidLawException, KeyError, TypeError) as e:
            raise EnvironmentException("bad interpretation of {}: {}".format(decl.name, e))
    _logger.debug("environment built for %d declarations (%s backend)", len(signature), env.backend)
    return env


def _preset_section(name, telescope, result, k):
    sections = enumerate_functors(telescope.total, result.total,
                                  FunctorConstraints(over=[(result.projection, identity_functor(telescope.total))]))
    if not sections:
        raise EnvironmentException("the type of {} has no section in the preset".format(name))
    return sections[k % len(sections)]


def env_from_preset(signature, preset, backend=None):
    return build_env(signature, {"preset": preset}, backend)


def load_env(file_path, signature, backend=None):
    """ Reads an environment file (JSON or YAML). Raises EnvironmentException """
    try:
        data = load_json_or_yaml(file_path)
    except LOAD_ERRORS as e:
        raise EnvironmentException("cannot read {}: {}".format(file_path, e))
    return build_env(signature, data, backend)
