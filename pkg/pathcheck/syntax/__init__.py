# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Abstract syntax, parser, printer and substitution for the type theory with identity types """

from pathcheck.syntax.terms import BaseApp, Pi, Sigma, Id, Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, SuspSub, \
    Context, Signature, TypeFamilyDecl, TermConstDecl, DefDecl, IsType, HasType, TypeEq, TermEq, free_vars, alpha_eq, \
    alpha_key, is_j_rooted
from pathcheck.syntax.substitution import substitute, push_substitution, rename, fresh_name, substitution_telescope
from pathcheck.syntax.parser import parse, parse_term, parse_type
from pathcheck.syntax.printer import pretty, print_signature, print_program
