# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Homotopy queries on finite groupoids, read from JSON or YAML.

    A query file holds one query, or {"groupoids": {...}, "queries": [...]} where the groupoids are shared by the
    queries. A query is a mapping with a "query" key among lift, factor, classify, path-object, llp, homotopy and
    three-for-two, an optional "name" and an optional "groupoids" mapping from names to groupoid JSON. Groupoids
    are referred to by

        - a name of the "groupoids" mapping, or a preset: interval, z2, discrete-N, terminal, empty
        - {"product": [G, H]} or {"path": G} (the arrow groupoid)

    and maps by

        - {"dom": G, "cod": H, "obj": [...], "mor": [...]}
        - {"identity": G}, {"diagonal": G}, {"terminal": G}, {"path-r": G}, {"path-p": G}, {"compose": [g, f]}

    Queries:

        lift           f, g, h, k     a filler of the square g h = k f
        factor         f              the factorization through the mapping path space
        classify       f              the classes of f in the model structure
        path-object    of             the path object (G^I, r, p) of the groupoid "of"
        llp            f, g           whether f lifts against g, with a square without filler otherwise
        homotopy       f, g           a right homotopy f => g, vertical for "fibration" when given
        three-for-two  f, g           the equivalence flags of f, g and g o f
"""
from collections import OrderedDict

from pathcheck.common.exceptions import EnvironmentException, GroupoidLawException, QueryException
from pathcheck.common.log import get_logger
from pathcheck.groupoid import arrow_groupoid, classify, compose, diagonal, empty, functor_from_json, \
    groupoid_from_json, identity_functor, product, terminal, terminal_map
from pathcheck.homotopy import LiftingProblem, factorize, llp_counterexample, right_homotopy, solve_lift, \
    three_for_two
from pathcheck.semantics import preset_groupoid

_logger = get_logger("cli.queries")

QUERY_KINDS = ("lift", "factor", "classify", "path-object", "llp", "homotopy", "three-for-two")


class QueryContext(object):
    """ Resolves the groupoid and map references of one query """

    def __init__(self, groupoids=None):
        if groupoids is not None and not isinstance(groupoids, dict):
            raise QueryException("\"groupoids\" must be a mapping")
        self._named = groupoids or {}
        self._cache = {}

    def groupoid(self, ref):
        if isinstance(ref, str):
            if ref not in self._cache:
                self._cache[ref] = self._named_groupoid(ref)
            return self._cache[ref]
        if isinstance(ref, dict) and "product" in ref:
            parts = ref["product"]
            if not isinstance(parts, list) or len(parts) != 2:
                raise QueryException("a product is given by two groupoids")
            return product(self.groupoid(parts[0]), self.groupoid(parts[1])).groupoid
        if isinstance(ref, dict) and "path" in ref:
            return arrow_groupoid(self.groupoid(ref["path"])).groupoid
        raise QueryException("not a groupoid reference: {!r}".format(ref))

    def _named_groupoid(self, name):
        if name in self._named:
            try:
                return groupoid_from_json(self._named[name])
            except GroupoidLawException as e:
                raise QueryException("groupoid {}: {}".format(name, e))
        if name == "terminal":
            return terminal()
        if name == "empty":
            return empty()
        try:
            return preset_groupoid(name)
        except EnvironmentException:
            raise QueryException("unknown groupoid {}".format(name))

    def map(self, ref):
        if not isinstance(ref, dict):
            raise QueryException("not a map reference: {!r}".format(ref))
        if "obj" in ref:
            if "dom" not in ref or "cod" not in ref:
                raise QueryException("a map given by its values needs \"dom\" and \"cod\"")
            try:
                return functor_from_json(ref, self.groupoid(ref["dom"]), self.groupoid(ref["cod"]))
            except GroupoidLawException as e:
                raise QueryException("bad map: {}".format(e))
        if "identity" in ref:
            return identity_functor(self.groupoid(ref["identity"]))
        if "diagonal" in ref:
            return diagonal(self.groupoid(ref["diagonal"]))
        if "terminal" in ref:
            return terminal_map(self.groupoid(ref["terminal"]))
        if "path-r" in ref:
            return arrow_groupoid(self.groupoid(ref["path-r"])).r
        if "path-p" in ref:
            return arrow_groupoid(self.groupoid(ref["path-p"])).p
        if "compose" in ref:
            parts = ref["compose"]
            if not isinstance(parts, list) or len(parts) != 2:
                raise QueryException("a composite is given by two maps [g, f]")
            try:
                return compose(self.map(parts[0]), self.map(parts[1]))
            except GroupoidLawException as e:
                raise QueryException("bad composite: {}".format(e))
        raise QueryException("not a map reference: {!r}".format(ref))


def _field(query, name):
    if name not in query:
        raise QueryException("the {} query needs \"{}\"".format(query["query"], name))
    return query[name]


def answer(query):
    """
    :param query: one decoded query
    :return: (passed, witness). Raises QueryException on a malformed query and SearchLimitException
    """
    if not isinstance(query, dict) or query.get("query") not in QUERY_KINDS:
        raise QueryException("a query is a mapping whose \"query\" is one of {}".format(", ".join(QUERY_KINDS)))
    kind = query["query"]
    context = QueryContext(query.get("groupoids"))

    if kind == "path-object":
        path = arrow_groupoid(context.groupoid(_field(query, "of")))
        G = path.r.dom
        witness = OrderedDict([("groupoid", path.groupoid.to_json()), ("r", path.r.to_json()),
                               ("p", path.p.to_json()),
                               ("r_acyclic_cofibration", classify(path.r).acyclic_cofibration),
                               ("p_fibration", classify(path.p).fibration),
                               ("factors_diagonal", compose(path.p, path.r) == diagonal(G))])
        return all(witness[key] for key in ("r_acyclic_cofibration", "p_fibration", "factors_diagonal")), witness

    f = context.map(_field(query, "f"))
    if kind == "classify":
        return True, classify(f).to_json()
    if kind == "factor":
        factorization = factorize(f)
        problem = factorization.violation(f)
        witness = factorization.to_json()
        if problem is not None:
            witness["violation"] = problem
        return problem is None, witness

    g = context.map(_field(query, "g"))
    if kind == "lift":
        problem = LiftingProblem(f, g, context.map(_field(query, "h")), context.map(_field(query, "k")))
        reason = problem.violation()
        if reason is not None:
            raise QueryException(reason)
        filler = solve_lift(problem)
        return filler is not None, OrderedDict([("filler", filler.to_json() if filler is not None else None)])
    if kind == "llp":
        square = llp_counterexample(f, g)
        return square is None, OrderedDict([("has_llp", square is None),
                                            ("counterexample", square.to_json() if square is not None else None)])
    if kind == "homotopy":
        fibration = context.map(query["fibration"]) if "fibration" in query else None
        try:
            homotopy = right_homotopy(f, g, fibration=fibration)
        except GroupoidLawException as e:
            raise QueryException(str(e))
        return homotopy is not None, OrderedDict([("homotopy", homotopy.to_json() if homotopy is not None else None)])
    try:
        flags = three_for_two(f, g)
    except GroupoidLawException as e:
        raise QueryException(str(e))
    return flags.holds, flags.to_json()


def split_queries(data):
    """
    :return: the list of (name, query) of a decoded query file. The "groupoids" of a file holding "queries" are
             shared by every query, which may add or override names in its own "groupoids"
    """
    shared = None
    if isinstance(data, dict) and "queries" in data:
        queries = data["queries"]
        if not isinstance(queries, list):
            raise QueryException("\"queries\" must be a list")
        shared = data.get("groupoids")
        if shared is not None and not isinstance(shared, dict):
            raise QueryException("\"groupoids\" must be a mapping")
    else:
        queries = [data]
    named = []
    for position, query in enumerate(queries):
        default = "{}#{}".format(query.get("query") if isinstance(query, dict) else "query", position + 1)
        name = query.get("name", default) if isinstance(query, dict) else default
        if shared and isinstance(query, dict):
            own = query.get("groupoids") or {}
            if not isinstance(own, dict):
                raise QueryException("\"groupoids\" must be a mapping")
            groupoids = OrderedDict(shared)
            groupoids.update(own)
            query = OrderedDict(query, groupoids=groupoids)
        named.append((str(name), query))
    _logger.debug("%d queries", len(named))
    return named
