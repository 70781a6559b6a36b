# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Interpretation of the type theory in finite groupoids, with fibrations as types """

from pathcheck.semantics.fibrations import SemFibration, PulledBackFibration, SigmaFibration, SemSection
from pathcheck.semantics.context import SemContext
from pathcheck.semantics.interpreter import FillerCache, Interpreter, InterpretedGoal, interp_context, interp_type, \
    interp_term, interpret_program
from pathcheck.semantics.environment import SemEnv, BACKENDS, preset_groupoid, build_env, env_from_preset, load_env
from pathcheck.semantics.probes import SoundnessReport, CountermodelReport, ExtensionalityReport, StabilityReport, \
    CoherenceReport, AgreementReport, check_soundness, reflection_countermodel, extensionality_check_discrete, \
    stability_check, coherence_probe, backend_agreement
from pathcheck.semantics.corpus import CoherenceInstance, soundness_signature, generate_equalities, \
    coherence_instances, stability_instances, last_filler_hook
