# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Parser for .mltt sources: one declaration or goal per line, `--` starts a comment """
import re
from collections import namedtuple

from pathcheck.common.exceptions import ParseException
from pathcheck.syntax.substitution import substitute, fresh_name
from pathcheck.syntax.terms import BaseApp, Pi, Sigma, Id, Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, \
    Context, Signature, TypeFamilyDecl, TermConstDecl, DefDecl, IsType, HasType, TypeEq, TermEq

KEYWORDS = {"assume", "def", "check", "checktype", "eq", "eqtype", "given", "Type", "Pi", "Sig", "Id", "lam", "app",
            "pair", "as", "fst", "snd", "refl", "J"}

_TOKEN_RE = re.compile(r"(?P<comment>--.*)|(?P<symbol>:=|=>|[()\[\]:=/])|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<space>\s+)")

Token = namedtuple("Token", ["kind", "text", "line", "column"])
_Pending = namedtuple("_Pending", ["name", "token"])


def tokenize(text, line=1):
    """ Splits one line in tokens. Kinds are "symbol", "name" and "keyword" """
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseException("unexpected character {!r}".format(text[pos]), line, pos + 1)
        kind = match.lastgroup
        if kind == "comment":
            break
        if kind != "space":
            value = match.group(kind)
            if kind == "name" and value in KEYWORDS:
                kind = "keyword"
            tokens.append(Token(kind, value, line, pos + 1))
        pos = match.end()
    return tokens


class Parser(object):
    """ Parses a whole source, declaration by declaration. Binders are renamed apart as they are met """

    def __init__(self, signature=None):
        self._signature = signature if signature is not None else Signature()
        self._tokens = []
        self._pos = 0
        self._line = 0
        self._scope = []
        self._used = set()
        self._pending = []

    def get_signature(self):
        return self._signature

    def parse(self, source):
        """ :return: (Signature, list of judgements) """
        goals = []
        for number, text in enumerate(source.splitlines(), 1):
            tokens = tokenize(text, number)
            if not tokens:
                continue
            head = tokens[0]
            if head.text in ("assume", "def") and head.kind == "keyword":
                self._start(tokens, number)
                self._signature = self._signature.declare(self._parse_declaration())
            elif head.text in ("check", "checktype", "eq", "eqtype") and head.kind == "keyword":
                goals.append(self._parse_goal(tokens, number))
            else:
                raise ParseException("expected a declaration or a goal, got {!r}".format(head.text), number,
                                     head.column)
        return self._signature, goals

    def parse_term(self, text, context=Context()):
        return self._parse_expression(text, context, self._parse_term)

    def parse_type(self, text, context=Context()):
        return self._parse_expression(text, context, self._parse_type)

    # Line state

    def _start(self, tokens, line, context=Context()):
        self._tokens = tokens
        self._pos = 0
        self._line = line
        self._scope = [(name, name) for name, _ in context]
        self._used = set(context.names()) | {decl.name for decl in self._signature}
        self._pending = []

    def _parse_expression(self, text, context, parse_fn):
        self._start(tokenize(text), 1, context)
        expr = parse_fn()
        self._expect_end()
        self._check_pending()
        return expr

    def _peek(self, offset=0):
        pos = self._pos + offset
        return self._tokens[pos] if pos < len(self._tokens) else None

    def _error(self, message, token=None):
        token = token if token is not None else self._peek()
        if token is None:
            column = (self._tokens[-1].column + len(self._tokens[-1].text)) if self._tokens else 1
            return ParseException(message + ", got end of line", self._line, column)
        return ParseException(message + ", got {!r}".format(token.text), token.line, token.column)

    def _next(self):
        token = self._peek()
        if token is None:
            raise self._error("unexpected end of line")
        self._pos += 1
        return token

    def _at(self, text, kind=None):
        token = self._peek()
        return token is not None and token.text == text and (kind is None or token.kind == kind)

    def _expect(self, text):
        token = self._peek()
        if token is None or token.text != text or token.kind == "name":
            raise self._error("expected {!r}".format(text))
        self._pos += 1
        return token

    def _expect_name(self):
        token = self._peek()
        if token is None or token.kind != "name":
            raise self._error("expected a name")
        self._pos += 1
        return token

    def _expect_end(self):
        if self._peek() is not None:
            raise self._error("expected end of line")

    def _check_pending(self):
        if self._pending:
            first = self._pending[0]
            raise ParseException("unbound identifier {!r}".format(first.name), first.token.line, first.token.column)

    # Scoping

    def _bind(self, token):
        """ Opens a binder for the source name of token. :return: the (possibly renamed) internal name """
        internal = fresh_name(token.text, self._used)
        self._used.add(internal)
        self._scope.append((token.text, internal))
        return internal

    def _unbind(self, count=1):
        del self._scope[len(self._scope) - count:]

    def _resolve(self, name):
        for source, internal in reversed(self._scope):
            if source == name:
                return internal
        return None

    # Declarations and goals

    def _parse_declaration(self):
        keyword = self._next()
        name = self._expect_name()
        if name.text in self._signature:
            raise ParseException("duplicate declaration {!r}".format(name.text), name.line, name.column)
        self._expect(":")
        if keyword.text == "def":
            type_expr = self._parse_type()
            self._expect(":=")
            body = self._parse_term()
            self._expect_end()
            self._check_pending()
            return DefDecl(name.text, type_expr, body)

        telescope = self._parse_telescope()
        if self._at("Type", "keyword"):
            self._next()
            self._expect_end()
            return TypeFamilyDecl(name.text, telescope)
        result = self._parse_type()
        self._expect_end()
        self._check_pending()
        return TermConstDecl(name.text, telescope, result)

    def _starts_binding(self):
        first, second, third = self._peek(), self._peek(1), self._peek(2)
        return first is not None and first.text == "(" and second is not None and second.kind == "name" \
            and third is not None and third.text == ":"

    def _parse_telescope(self):
        """ { "(" NAME ":" type ")" }. Binders stay in scope for the rest of the line """
        entries, sources = [], set()
        while self._starts_binding():
            self._next()
            name = self._expect_name()
            if name.text in sources:
                raise ParseException("duplicate variable {!r} in telescope".format(name.text), name.line,
                                     name.column)
            self._expect(":")
            type_expr = self._parse_type()
            self._expect(")")
            sources.add(name.text)
            entries.append((self._bind(name), type_expr))
        return Context(tuple(entries))

    def _parse_given(self, tokens, line):
        """ The context of a goal: a telescope, or a single unparenthesised binding """
        self._tokens = tokens
        self._pos = 0
        if self._starts_binding():
            context = self._parse_telescope()
        else:
            name = self._expect_name()
            self._expect(":")
            type_expr = self._parse_type()
            context = Context(((self._bind(name), type_expr),))
        self._expect_end()
        if not len(context):
            raise self._error("expected a context after 'given'")
        self._check_pending()
        return context

    def _parse_goal(self, tokens, line):
        given_at = next((pos for pos, tok in enumerate(tokens) if tok.text == "given" and tok.kind == "keyword"), None)
        self._start(tokens, line)
        context = Context()
        if given_at is not None:
            if given_at + 1 == len(tokens):
                raise ParseException("expected a context after 'given'", line, tokens[given_at].column)
            context = self._parse_given(tokens[given_at + 1:], line)
            tokens = tokens[:given_at]
        self._tokens = tokens
        self._pos = 0

        keyword = self._next().text
        if keyword == "check":
            term = self._parse_term()
            self._expect(":")
            goal = HasType(context, term, self._parse_type(), line)
        elif keyword == "checktype":
            goal = IsType(context, self._parse_type(), line)
        elif keyword == "eq":
            left = self._parse_term()
            self._expect("=")
            right = self._parse_term()
            self._expect(":")
            goal = TermEq(context, left, right, self._parse_type(), line)
        else:
            left = self._parse_type()
            self._expect("=")
            goal = TypeEq(context, left, self._parse_type(), line)
        self._expect_end()
        self._check_pending()
        return goal

    # Types

    def _parse_binder_type(self, constructor):
        self._expect("(")
        name = self._expect_name()
        self._expect(":")
        dom = self._parse_type()
        self._expect(")")
        var = self._bind(name)
        cod = self._parse_type()
        self._unbind()
        return constructor(var, dom, cod)

    def _parse_type(self):
        token = self._peek()
        if token is None:
            raise self._error("expected a type")
        if token.kind == "keyword" and token.text == "Pi":
            self._next()
            return self._parse_binder_type(Pi)
        if token.kind == "keyword" and token.text == "Sig":
            self._next()
            return self._parse_binder_type(Sigma)
        if token.kind == "keyword" and token.text == "Id":
            self._next()
            type_expr = self._parse_atype()
            left = self._parse_aterm()
            right = self._parse_aterm()
            return Id(type_expr, left, right)
        if token.kind == "name":
            self._next()
            return BaseApp(self._family_name(token), tuple(self._parse_args()))
        return self._parse_atype()

    def _parse_atype(self):
        token = self._peek()
        if token is not None and token.kind == "name":
            self._next()
            return BaseApp(self._family_name(token), ())
        if token is not None and token.text == "(":
            self._next()
            type_expr = self._parse_type()
            self._expect(")")
            return type_expr
        raise self._error("expected a type")

    def _family_name(self, token):
        decl = self._signature.get(token.text)
        if self._resolve(token.text) is not None or (decl is not None and not isinstance(decl, TypeFamilyDecl)):
            raise ParseException("{!r} is not a type family".format(token.text), token.line, token.column)
        if decl is None:
            raise ParseException("unbound identifier {!r}".format(token.text), token.line, token.column)
        return token.text

    # Terms

    def _starts_aterm(self):
        token = self._peek()
        return token is not None and (token.kind == "name" or token.text == "(")

    def _parse_args(self):
        args = []
        while self._starts_aterm():
            args.append(self._parse_aterm())
        return args

    def _name_term(self, token, args=None):
        internal = self._resolve(token.text)
        decl = self._signature.get(token.text)
        if internal is not None:
            if args:
                raise ParseException("variable {!r} applied to arguments, use 'app'".format(token.text),
                                     token.line, token.column)
            return Var(internal)
        if decl is not None:
            if isinstance(decl, TypeFamilyDecl):
                raise ParseException("{!r} is a type family, expected a term".format(token.text), token.line,
                                     token.column)
            return ConstApp(token.text, tuple(args or ()))
        if args:
            raise ParseException("unbound identifier {!r}".format(token.text), token.line, token.column)
        # may still be bound by a substitution postfix
        self._pending.append(_Pending(token.text, token))
        self._used.add(token.text)
        return Var(token.text)

    def _parse_aterm(self):
        token = self._peek()
        if token is not None and token.kind == "name":
            self._next()
            return self._name_term(token)
        if token is not None and token.text == "(":
            self._next()
            term = self._parse_term()
            self._expect(")")
            return term
        raise self._error("expected a term")

    def _parse_term(self):
        token = self._peek()
        if token is None:
            raise self._error("expected a term")
        if token.kind == "keyword":
            self._next()
            if token.text == "lam":
                self._expect("(")
                name = self._expect_name()
                self._expect(":")
                dom = self._parse_type()
                self._expect(")")
                var = self._bind(name)
                body = self._parse_term()
                self._unbind()
                return Lam(var, dom, body)
            if token.text == "app":
                fn = self._parse_aterm()
                return App(fn, self._parse_aterm())
            if token.text == "pair":
                first = self._parse_aterm()
                second = self._parse_aterm()
                self._expect("as")
                return Pair(first, second, self._parse_type())
            if token.text == "fst":
                return Fst(self._parse_aterm())
            if token.text == "snd":
                return Snd(self._parse_aterm())
            if token.text == "refl":
                type_expr = self._parse_atype()
                return Refl(type_expr, self._parse_aterm())
            if token.text == "J":
                return self._parse_j()
            raise self._error("expected a term", token)
        return self._parse_postfix()

    def _parse_j(self):
        type_expr = self._parse_atype()
        self._expect("[")
        names = [self._expect_name() for _ in range(3)]
        self._expect("=>")
        x, y, z = [self._bind(name) for name in names]
        family = self._parse_type()
        self._unbind(3)
        self._expect("]")
        self._expect("[")
        name = self._expect_name()
        self._expect("=>")
        w = self._bind(name)
        base = self._parse_term()
        self._unbind()
        self._expect("]")
        left = self._parse_aterm()
        right = self._parse_aterm()
        path = self._parse_aterm()
        return J(type_expr, x, y, z, family, w, base, left, right, path)

    def _parse_postfix(self):
        """ (NAME {aterm} | "(" term ")") { "[" term "/" NAME "]" } """
        mark = len(self._pending)
        token = self._peek()
        if token.kind == "name":
            self._next()
            term = self._name_term(token, self._parse_args())
        elif token.text == "(":
            term = self._parse_aterm()
        else:
            raise self._error("expected a term")
        head_pending = self._pending[mark:]
        del self._pending[mark:]
        while self._at("["):
            self._next()
            replacement = self._parse_term()
            self._expect("/")
            name = self._expect_name()
            self._expect("]")
            target = self._resolve(name.text)
            if target is None:
                target = name.text
                head_pending = [p for p in head_pending if p.name != name.text]
            head_pending += self._pending[mark:]
            del self._pending[mark:]
            term = substitute(term, {target: replacement})
        self._pending.extend(head_pending)
        return term


def parse(source, signature=None):
    """ Parses a .mltt source. :return: (Signature, list of judgement goals) """
    return Parser(signature).parse(source)


def parse_term(text, signature, context=Context()):
    return Parser(signature).parse_term(text, context)


def parse_type(text, signature, context=Context()):
    return Parser(signature).parse_type(text, context)
