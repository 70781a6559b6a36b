# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Kernel modes and verdicts """
from dataclasses import dataclass
from typing import Optional, Tuple

RULE_NAMES = (
    "Π form.", "Π intro.", "Π elim.", "Π conv.",
    "Σ form.", "Σ intro.", "Σ elim.", "Σ conv.",
    "Id form.", "Id intro.", "Id elim.", "Id conv.", "Id refl.",
    "Id B.-C.", "r B.-C.",
    "var", "const", "delta", "ctx", "conv", "subst",
)


@dataclass(frozen=True)
class KernelMode(object):
    """ Defaults give the intensional theory, without the Beck-Chevalley equation for J """
    extensional: bool = False
    strict_j: bool = False

    def describe(self):
        flags = [name for name, value in (("extensional", self.extensional), ("strict-j", self.strict_j)) if value]
        return "+".join(flags) if flags else "intensional"


@dataclass(frozen=True)
class TraceStep(object):
    rule: str
    judgement: object

    def __post_init__(self):
        if self.rule not in RULE_NAMES:
            raise ValueError("unknown rule name {}".format(self.rule))


@dataclass(frozen=True)
class Verdict(object):
    accepted: bool
    trace: Tuple = ()
    reason: Optional[str] = None

    def rules(self):
        """ :return: the set of rule names used in the derivation """
        return {step.rule for step in self.trace}

    def __bool__(self):
        return self.accepted
