# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import pytest

from pathcheck import get_samples_path
from pathcheck.common.base import read_source
from pathcheck.common.exceptions import ParseException
from pathcheck.syntax import parse, parse_term, parse_type
from pathcheck.syntax.terms import BaseApp, Id, Var, ConstApp, Lam, Refl, J, SuspSub, Context, TypeFamilyDecl, \
    TermConstDecl, DefDecl, IsType, HasType, TermEq, TypeEq, goal_name, alpha_eq

SIGNATURE = """
assume A : Type
assume B : (x : A) Type
assume a : A
assume f : (x : A) A
"""


class TestDeclarations(object):
    def test_declaration_kinds(self):
        signature, goals = parse(SIGNATURE + "def c : A := f a\n")
        assert goals == []
        assert isinstance(signature.get("A"), TypeFamilyDecl)
        assert signature.get("B").telescope == Context((("x", BaseApp("A")),))
        assert signature.get("a") == TermConstDecl("a", Context(), BaseApp("A"))
        assert signature.get("c") == DefDecl("c", BaseApp("A"), ConstApp("f", (ConstApp("a"),)))
        assert [decl.name for decl in signature] == ["A", "B", "a", "f", "c"]

    def test_comments_and_blank_lines(self):
        signature, goals = parse("-- header\n\nassume A : Type -- a base type\n   \n")
        assert len(signature) == 1
        assert goals == []

    def test_duplicate_declaration(self):
        with pytest.raises(ParseException) as e:
            parse("assume A : Type\nassume A : Type\n")
        assert e.value.line == 2
        assert e.value.column == 8

    def test_duplicate_telescope_variable(self):
        with pytest.raises(ParseException) as e:
            parse("assume A : Type\nassume B : (x : A) (x : A) Type\n")
        assert e.value.line == 2

    def test_not_a_declaration(self):
        with pytest.raises(ParseException) as e:
            parse("assume A : Type\nfoo\n")
        assert e.value.line == 2
        assert e.value.column == 1

    def test_unexpected_character(self):
        with pytest.raises(ParseException) as e:
            parse("assume A : Type!\n")
        assert (e.value.line, e.value.column) == (1, 16)


class TestGoals(object):
    def test_goal_kinds_and_lines(self):
        _, goals = parse(SIGNATURE + "checktype A\ncheck a : A\neqtype A = A\neq a = a : A\n")
        assert [type(goal) for goal in goals] == [IsType, HasType, TypeEq, TermEq]
        assert [goal_name(goal) for goal in goals] == ["checktype@6", "check@7", "eqtype@8", "eq@9"]

    def test_given_telescope(self):
        _, goals = parse(SIGNATURE + "check refl A x : Id A x y given (x : A) (y : A)\n")
        goal = goals[0]
        assert goal.context.names() == ["x", "y"]
        assert goal.term == Refl(BaseApp("A"), Var("x"))
        assert goal.type == Id(BaseApp("A"), Var("x"), Var("y"))

    def test_given_single_binding(self):
        _, goals = parse(SIGNATURE + "eq x = x : A given x : A\n")
        assert goals[0].context == Context((("x", BaseApp("A")),))

    def test_empty_given(self):
        with pytest.raises(ParseException):
            parse(SIGNATURE + "check a : A given\n")

    def test_unbound_identifier_position(self):
        with pytest.raises(ParseException) as e:
            parse(SIGNATURE + "check f x : A\n")
        assert e.value.line == 6
        assert e.value.column == 9
        assert "unbound identifier" in str(e.value)

    def test_samples_parse(self):
        signature, goals = parse(read_source(get_samples_path("rules.mltt")))
        assert len(signature) == 9
        assert len(goals) >= 20
        _, goals = parse(read_source(get_samples_path("empty.mltt")))
        assert goals == []


class TestExpressions(object):
    def setup_method(self):
        self.signature = parse(SIGNATURE)[0]

    def test_family_application(self):
        assert parse_type("B (f a)", self.signature) == BaseApp("B", (ConstApp("f", (ConstApp("a"),)),))

    def test_type_family_in_term_position(self):
        with pytest.raises(ParseException):
            parse_term("A", self.signature)

    def test_constant_in_type_position(self):
        with pytest.raises(ParseException):
            parse_type("a", self.signature)

    def test_variable_applied(self):
        with pytest.raises(ParseException):
            parse_term("x a", self.signature, Context((("x", BaseApp("A")),)))

    def test_lambda_shadowing_is_renamed(self):
        term = parse_term("lam (x : A) x", self.signature, Context((("x", BaseApp("A")),)))
        assert isinstance(term, Lam)
        assert term.var != "x"
        assert term.body == Var(term.var)

    def test_j(self):
        term = parse_term("J A [x y z => B x] [w => f w] a a (refl A a)", self.signature)
        assert isinstance(term, J)
        assert (term.x, term.y, term.z, term.w) == ("x", "y", "z", "w")
        assert term.family == BaseApp("B", (Var("x"),))

    def test_substitution_postfix(self):
        term = parse_term("(J A [x y z => A] [w => w] v v (refl A v))[a/v]", self.signature)
        assert isinstance(term, SuspSub)
        assert term.variables == ("v",)
        assert term.mapping["v"] == ConstApp("a")

    def test_substitution_postfix_on_non_j(self):
        term = parse_term("(f v)[a/v]", self.signature)
        assert term == ConstApp("f", (ConstApp("a"),))

    def test_postfix_on_bound_variable(self):
        context = Context((("u", BaseApp("A")),))
        term = parse_term("(J A [x y z => A] [w => w] u u (refl A u))[a/u]", self.signature, context)
        assert isinstance(term, SuspSub)
        assert term.variables == ("u",)

    def test_unresolved_pending(self):
        with pytest.raises(ParseException) as e:
            parse_term("(f v)[a/u]", self.signature)
        assert "'v'" in str(e.value)

    def test_parenthesised_types(self):
        assert alpha_eq(parse_type("Pi (x : A) (B x)", self.signature),
                        parse_type("Pi (y : A) B y", self.signature))
