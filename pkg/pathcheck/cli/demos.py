# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Demonstration suites. Each demo returns a list of report entries and embeds its own environments """
import random
from collections import OrderedDict

from pathcheck.common.exceptions import QueryException
from pathcheck.common.log import get_logger
from pathcheck.groupoid import FunctorConstraints, arrow_groupoid, classify, compose, diagonal, random_functor
from pathcheck.groupoid.families import random_acyclic_cofibration, random_fibration, random_groupoid, \
    small_groupoids
from pathcheck.homotopy import LiftingProblem, factorize, functor_universe, solve_lift, three_for_two, verify_wfs
from pathcheck.kernel import check_program
from pathcheck.semantics import check_soundness, coherence_instances, coherence_probe, env_from_preset, \
    extensionality_check_discrete, generate_equalities, reflection_countermodel, stability_check, stability_instances
from pathcheck.cli.reports import goal_entry, verdict_entry
from pathcheck.syntax.terms import goal_name

_logger = get_logger("cli.demos")


def _status(passed):
    return "ok" if passed else "failed"


def demo_countermodel(config):
    """ Id A a b is inhabited in the interval while a and b are distinct points; not in a discrete groupoid """
    interval_report = reflection_countermodel("interval")
    discrete_report = reflection_countermodel("discrete-2", config.backend)
    return [goal_entry("countermodel/interval", _status(interval_report.refutes_reflection),
                       witness=interval_report.to_json()),
            goal_entry("countermodel/discrete-2", _status(not discrete_report.refutes_reflection),
                       witness=discrete_report.to_json())]


def demo_extensional_set(config):
    entries = []
    for n in range(1, 6):
        report = extensionality_check_discrete(n)
        entries.append(goal_entry("extensional-set/discrete-{}".format(n), _status(report.passed),
                                  witness=report.to_json()))
    return entries


def demo_coherence(config):
    entries = []
    for instance in coherence_instances():
        report = coherence_probe(instance.env, instance.context, instance.term, instance.hook_manager)
        entries.append(goal_entry(instance.name, _status(report.passed),
                                  witness=OrderedDict([("strict_equal", report.strict_equal),
                                                       ("homotopy_found", report.passed)])))
    return entries


def _random_square(rng, f, g):
    h = random_functor(rng, f.dom, g.dom)
    if h is None:
        return None
    k = random_functor(rng, f.cod, g.cod, FunctorConstraints(pins=[(f, compose(g, h))]))
    return LiftingProblem(f, g, h, k) if k is not None else None


def demo_wfs(config, squares=100, factorizations=50, pairs=200):
    """
    The model structure at desk scale: path objects of the small groupoids, the weak factorization systems on a
    small universe of maps, random lifting problems, random factorizations and random composable pairs
    """
    rng = random.Random(config.seed)
    entries = []

    failures = []
    groupoids = small_groupoids(max_objects=3, max_generators=2)
    for position, G in enumerate(groupoids):
        path = arrow_groupoid(G)
        if not (classify(path.r).acyclic_cofibration and classify(path.p).fibration
                and compose(path.p, path.r) == diagonal(G)):
            failures.append(position)
    entries.append(goal_entry("wfs/path-objects", _status(not failures),
                              witness=OrderedDict([("groupoids", len(groupoids)), ("failures", failures)])))

    report = verify_wfs(functor_universe(small_groupoids(max_objects=2, max_generators=1, max_order=1)))
    entries.append(goal_entry("wfs/universe", _status(report.passed),
                              witness=OrderedDict([("maps", len(report.classes)),
                                                   ("checks", len(report.checks)),
                                                   ("failures", [c.to_json() for c in report.failures()])])))

    solved, drawn = 0, 0
    while drawn < squares:
        f = random_acyclic_cofibration(rng, max_objects=4, max_order=2)
        g = random_fibration(rng, max_objects=4, max_order=2)
        problem = _random_square(rng, f, g)
        if problem is None:
            continue
        drawn += 1
        if solve_lift(problem) is not None:
            solved += 1
    entries.append(goal_entry("wfs/lifting", _status(solved == drawn),
                              witness=OrderedDict([("squares", drawn), ("solved", solved)])))

    factored = 0
    for _ in range(factorizations):
        A = random_groupoid(rng, max_objects=3, max_order=2, min_objects=1)
        B = random_groupoid(rng, max_objects=3, max_order=2, min_objects=1)
        f = random_functor(rng, A, B)
        if factorize(f).violation(f) is None:
            factored += 1
    entries.append(goal_entry("wfs/factorization", _status(factored == factorizations),
                              witness=OrderedDict([("maps", factorizations), ("factored", factored)])))

    violations = 0
    for _ in range(pairs):
        A, B, C = [random_groupoid(rng, max_objects=3, max_order=2, min_objects=1) for _ in range(3)]
        if not three_for_two(random_functor(rng, A, B), random_functor(rng, B, C)).holds:
            violations += 1
    entries.append(goal_entry("wfs/three-for-two", _status(violations == 0),
                              witness=OrderedDict([("pairs", pairs), ("violations", violations)])))
    return entries


def demo_soundness(config, count=30):
    """ Kernel-accepted definitional equalities are interpreted by equal sections """
    signature, equalities = generate_equalities(seed=config.seed, count=count)
    verdicts = check_program(signature, equalities, config.kernel_mode())
    entries = []
    accepted = []
    for judgement, verdict in zip(equalities, verdicts):
        if verdict.accepted:
            accepted.append(judgement)
        else:
            entries.append(verdict_entry("soundness/kernel/" + goal_name(judgement), verdict))
    for preset in ("interval", "z2"):
        report = check_soundness(env_from_preset(signature, preset), accepted)
        for name, passed, error in report.entries:
            entries.append(goal_entry("soundness/{}/{}".format(preset, name), _status(passed), error=error))
    return entries


def demo_stability(config, count=50):
    """ Path objects of fibrations are stable under base change, up to an isomorphism commuting with r and p """
    entries = []
    for position, (g, sigma) in enumerate(stability_instances(seed=config.seed, count=count)):
        report = stability_check(g, sigma)
        entries.append(goal_entry("stability/{}".format(position + 1), _status(report.passed)))
    return entries


DEMOS = OrderedDict([
    ("countermodel", demo_countermodel),
    ("extensional-set", demo_extensional_set),
    ("coherence", demo_coherence),
    ("wfs", demo_wfs),
    ("soundness", demo_soundness),
    ("stability", demo_stability),
])


def run_demo(name, config):
    """ :return: the report entries of the demo called name. Raises QueryException for an unknown demo """
    if name not in DEMOS:
        raise QueryException("unknown demo {} (known: {})".format(name, ", ".join(DEMOS)))
    entries = DEMOS[name](config)
    _logger.info("demo %s: %d entries", name, len(entries))
    return entries
