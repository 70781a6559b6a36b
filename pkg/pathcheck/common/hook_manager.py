# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Named hooks overriding the choices of the semantic backend """
import bisect
import itertools

from pathcheck.common.log import get_logger

_logger = get_logger("common.hook_manager")


class HookManager(object):
    """
    Callbacks registered by name. The interpreter calls the "filler_choice" hook with the lifting problem and the
    candidate fillers of a J-instance; a hook returns the index of the filler to keep, or None to leave the choice
    to the next hook. Hooks run by decreasing priority, then in registration order. A hook that raises is logged
    and skipped.
    """

    def __init__(self):
        self._hooks = {}
        self._registered = itertools.count()

    def add_hook(self, name, callback, prio=0):
        bisect.insort(self._hooks.setdefault(name, []), (-prio, next(self._registered), callback))

    def has_hook(self, name):
        return bool(self._hooks.get(name))

    def _values(self, name, kwargs):
        for _, _, callback in self._hooks.get(name, ()):
            try:
                value = callback(**kwargs)
            except Exception:
                _logger.exception("hook %s raised an exception, ignored", name)
                continue
            if value is not None:
                yield value

    def call_hook(self, name, **kwargs):
        """ :return: the non-None values returned by the hooks registered under name """
        return list(self._values(name, kwargs))

    def call_hook_first(self, name, default=None, **kwargs):
        """ :return: the first non-None value returned by the hooks, or default. The remaining hooks are not called """
        return next(self._values(name, kwargs), default)
