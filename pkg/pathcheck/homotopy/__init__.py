# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Lifting problems, factorizations, homotopies and the weak factorization systems of finite groupoids """

from pathcheck.homotopy.lifting import LiftingProblem, lifting_problem_from_json, fillers, solve_lift, \
    enumerate_squares, llp_counterexample, has_llp
from pathcheck.homotopy.factorization import Factorization, factorize
from pathcheck.homotopy.homotopies import right_homotopy
from pathcheck.homotopy.three_for_two import ThreeForTwo, three_for_two
from pathcheck.homotopy.wfs import WfsCheck, WfsReport, functor_universe, verify_wfs
