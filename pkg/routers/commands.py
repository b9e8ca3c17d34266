"""
Command dispatch: routes a RunConfig to the braid and Coxeter operations and
collects the records to print.
"""

import logging
from pathlib import Path
from typing import Callable

from braids import braidclass, dehornoy, garside
from braids.words import parse_braid
from config.settings import settings
from coxeter import krammer, surface
from coxeter.graph import CoxeterGraph, load_graph, parse_word
from coxeter.roots import CoxeterSystem
from models.errors import BraidForgeError, UsageError
from routers.schemas import CommandResult, RunConfig
from utils.formatting import (
    Record,
    format_factors,
    format_letters,
    format_matrix_rows,
    format_perms,
    format_simple_list,
)

logger = logging.getLogger(__name__)


def _load(config: RunConfig) -> CoxeterGraph:
    path = Path(config.graph)
    if not path.is_file():
        raise UsageError(f"Graph file not found: {config.graph}")
    return load_graph(path)


def _system(config: RunConfig, graph: CoxeterGraph) -> CoxeterSystem:
    return CoxeterSystem(graph, config.mode)


def _normal_form(config: RunConfig) -> list[Record]:
    w = parse_braid(config.words[0], config.strands)
    form = garside.group_normal_form(w)
    p, rest = garside.delta_normal_form(w)
    return [
        ("strands", str(w.strands)),
        ("factors", format_factors(form)),
        ("perms", format_perms(form.positive, form.negative)),
        ("word", format_letters(form.to_word().letters)),
        ("inf", str(p)),
        ("sup", str(p + len(rest))),
        ("delta_form", f"{p}:{format_simple_list(rest)}"),
    ]


def _compare(config: RunConfig) -> list[Record]:
    u = parse_braid(config.words[0], config.strands)
    v = parse_braid(config.words[1], config.strands)
    order, verdict = dehornoy.compare_with_certificate(u, v)
    return [
        ("order", order.value),
        ("main_index", str(verdict.index)),
        ("certificate", format_letters(verdict.certificate)),
        ("handle_steps", str(verdict.steps)),
    ]


def _classify(config: RunConfig) -> list[Record]:
    f = parse_braid(config.words[0], config.strands)
    verdict = braidclass.classify(f, config.radius)
    records = [("verdict", {
        "periodic": "Periodic",
        "reducible": "Reducible",
        "no_witness_found": "NoWitnessFound",
    }[verdict.kind])]
    if verdict.periodic is not None:
        records += [("m", str(verdict.periodic.m)), ("k", str(verdict.periodic.k))]
    if verdict.witness is not None:
        records += [
            ("conjugator", format_letters(verdict.witness.conjugator.letters)),
            ("support", ",".join(str(x) for x in sorted(verdict.witness.support))),
            ("orbit_length", str(verdict.orbit_length)),
        ]
    records.append(("radius", str(verdict.radius)))
    return records


def _roots(config: RunConfig) -> list[Record]:
    graph = _load(config)
    system = _system(config, graph)
    depth = None if config.full else (settings.orbit_depth if config.depth is None else config.depth)
    roots = system.positive_roots(depth)
    records = [
        ("mode", system.field.mode.value),
        ("type", system.coxeter_type.value),
        ("depth", "full" if depth is None else str(depth)),
        ("count", str(len(roots))),
    ]
    records += [("root", system.format_root(r)) for r in system.sort_roots(roots)]
    return records


def _inversions(config: RunConfig) -> list[Record]:
    graph = _load(config)
    system = _system(config, graph)
    w = parse_word(graph, config.words[0])
    inversions = system.inversion_set(w)
    records = [
        ("mode", system.field.mode.value),
        ("length", str(len(inversions))),
        ("length_by_descents", str(system.length_by_descents(w))),
        ("reduced_word", format_letters(system.reduced_word(w))),
    ]
    records += [("root", system.format_root(r)) for r in system.sort_roots(inversions)]
    return records


def _essential(config: RunConfig) -> list[Record]:
    graph = _load(config)
    system = _system(config, graph)
    w = parse_word(graph, config.words[0])
    verdict = krammer.essential_certificate(
        graph, w,
        depth=config.depth,
        m_max=config.m_max,
        closure_depth=config.closure_depth,
        system=system,
    )
    records = [
        ("mode", system.field.mode.value),
        ("verdict", {
            "certified_essential": "CertifiedEssential",
            "not_essential": "NotEssential",
            "inconclusive": "Inconclusive",
        }[verdict.kind]),
    ]
    if verdict.reason:
        records.append(("reason", verdict.reason))
    records += [
        ("support", ",".join(verdict.support)),
        ("reached", ",".join(verdict.reached)),
        ("unknown_roots", str(verdict.unknown_roots)),
    ]
    records += [(key, str(value)) for key, value in verdict.bounds.items()]
    records += [("witness", system.format_root(r)) for r in verdict.witnesses]
    return records


def _surface(config: RunConfig) -> list[Record]:
    graph = _load(config)
    order = tuple(config.order.replace(",", " ").split()) if config.order else None
    report = surface.surface_report(graph, order)
    relations = surface.verify_artin_relations(graph, report.order)
    J = surface.intersection_matrix(graph, report.order)
    records = [
        ("order", ",".join(report.order)),
        ("genus", str(report.genus)),
        ("boundary", str(report.boundary)),
        ("euler", str(report.euler_traced)),
        ("euler_formula", str(report.euler_formula)),
        ("h1_rank", str(report.h1_rank)),
        ("form_rank", str(report.form_rank)),
        ("convention", report.convention),
    ]
    records += format_matrix_rows("J", J.tolist())
    records.append(("relations", "ok" if relations.ok else "failed"))
    records.append(("relations_checked", str(relations.checked)))
    records += [("relation_failure", failure) for failure in relations.failures]
    if config.rep is not None:
        word = surface.parse_artin_word(graph, config.rep)
        records += format_matrix_rows("rep", surface.homological_rep(graph, report.order, word).tolist())
    return records


HANDLERS: dict[str, Callable[[RunConfig], list[Record]]] = {
    "normal-form": _normal_form,
    "compare": _compare,
    "classify": _classify,
    "roots": _roots,
    "inversions": _inversions,
    "essential": _essential,
    "surface": _surface,
}


def dispatch(config: RunConfig) -> CommandResult:
    """
    Run one command.

    Returns:
        CommandResult with exit code 0 on success, 1 on domain errors and 2
        on usage errors; failures carry a single ``error`` record
    """
    logger.info(f"Dispatching {config.command}")
    try:
        records = HANDLERS[config.command](config)
        return CommandResult(exit_code=0, records=records)
    except UsageError as e:
        logger.error(f"Usage error in {config.command}: {e}")
        return CommandResult(exit_code=2, records=[("error", str(e))])
    except BraidForgeError as e:
        logger.error(f"{type(e).__name__} in {config.command}: {e}")
        return CommandResult(exit_code=1, records=[("error", str(e))])
