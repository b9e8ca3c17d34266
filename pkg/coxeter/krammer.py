"""
Root orbits under an element w of a Coxeter group and the essential-element
certificate.

A root alpha separates u and v when u alpha and v alpha have opposite signs.
For a non-periodic root only finitely many m have alpha separating w^m and
w^(m+1), and each such m has w^m alpha in the window Phi_w or -Phi_w. Orbits
are followed in both directions until they have left the window for good,
then the parity of the event count classifies the root.
"""

import heapq
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from config.settings import ScalarMode, settings
from coxeter.classification import CoxeterType
from coxeter.graph import CoxeterGraph
from coxeter.roots import CoxeterSystem, Root
from models.errors import UnsupportedGraphError
from models.schemas import EssentialVerdict, OrbitVerdict

logger = logging.getLogger(__name__)


def separates(system: CoxeterSystem, alpha: Root, u: Sequence[str], v: Sequence[str]) -> bool:
    """True iff u alpha and v alpha have strictly opposite signs."""
    return system.sign(system.act(u, alpha)) * system.sign(system.act(v, alpha)) == -1


@dataclass
class _Walk:
    events: list[int] = field(default_factory=list)
    exited: bool = False
    period: Optional[int] = None


def _walk(
    system: CoxeterSystem,
    step: Sequence[str],
    alpha: Root,
    window: frozenset,
    ceiling: float,
    m_max: int,
    streak_needed: int,
    forward: bool,
) -> _Walk:
    walk = _Walk()
    current = alpha
    current_sign = system.sign(alpha)
    streak = 0
    for m in range(1, m_max + 1):
        image = system.act(step, current)
        if image == alpha:
            walk.period = m
            return walk
        image_sign = system.sign(image)
        if image_sign != current_sign:
            # forward: separates w^(m-1), w^m; backward: separates w^-m, w^-(m-1)
            walk.events.append(m - 1 if forward else -m)
        current, current_sign = image, image_sign

        outside = image not in window and system.negate(image) not in window
        if outside and system.height(image) > ceiling:
            streak += 1
        else:
            streak = 0
        if streak >= streak_needed and not system.is_finite:
            walk.exited = True
            return walk
    return walk


def orbit_classify(
    system: CoxeterSystem,
    w: Sequence[str],
    alpha: Root,
    m_max: Optional[int] = None,
    exit_streak: Optional[int] = None,
) -> OrbitVerdict:
    """
    Periodic, Even or Odd for the orbit of alpha under w, or Unknown when
    m_max steps do not settle it.
    """
    m_max = settings.orbit_m_max if m_max is None else m_max
    exit_streak = settings.orbit_exit_streak if exit_streak is None else exit_streak
    window = system.inversion_set(w)
    ceiling = max((system.height(beta) for beta in window), default=0.0)

    forward = _walk(system, tuple(w), alpha, window, ceiling, m_max, exit_streak, True)
    if forward.period is not None:
        return OrbitVerdict(kind="periodic", period=forward.period)
    backward = _walk(system, tuple(reversed(w)), alpha, window, ceiling, m_max, exit_streak, False)
    if backward.period is not None:
        return OrbitVerdict(kind="periodic", period=backward.period)

    events = tuple(sorted(forward.events + backward.events))
    if not (forward.exited and backward.exited):
        return OrbitVerdict(kind="unknown", events=events)
    count = len(events)
    return OrbitVerdict(kind="odd" if count % 2 else "even", count=count, events=events)


@dataclass(frozen=True)
class OddRootScan:
    """Odd roots among the scanned positive roots, with the full verdict map."""

    odd: tuple[Root, ...]
    unknown: int
    verdicts: dict = field(compare=False, hash=False)


def odd_roots(
    system: CoxeterSystem,
    w: Sequence[str],
    depth: Optional[int] = None,
    m_max: Optional[int] = None,
    jobs: Optional[int] = None,
) -> OddRootScan:
    """Positive roots of depth <= depth whose orbit verdict is Odd."""
    depth = settings.orbit_depth if depth is None else depth
    jobs = settings.jobs if jobs is None else jobs
    roots = system.positive_roots(depth)

    def classify(root: Root) -> OrbitVerdict:
        return orbit_classify(system, w, root, m_max)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(classify, roots))
    else:
        verdicts = [classify(root) for root in roots]

    verdict_map = dict(zip(roots, verdicts))
    odd = tuple(root for root, verdict in verdict_map.items() if verdict.kind == "odd")
    unknown = sum(1 for verdict in verdicts if verdict.kind == "unknown")
    if unknown:
        logger.warning(f"{unknown} of {len(roots)} orbits stayed undecided within m_max")
    logger.debug(f"odd_roots: {len(odd)} odd among {len(roots)} roots of depth <= {depth}")
    return OddRootScan(odd=odd, unknown=unknown, verdicts=verdict_map)


def closure(
    system: CoxeterSystem,
    roots: Sequence[Root],
    max_depth: Optional[int] = None,
    limit: Optional[int] = None,
) -> set[Root]:
    """
    Positive roots reachable from ``roots`` by reflecting roots of the set in
    one another, admitting only roots of depth <= max_depth.

    Shallow roots are processed first; the search stops early once every
    simple root has been reached.
    """
    max_depth = settings.closure_depth if max_depth is None else max_depth
    limit = settings.closure_limit if limit is None else limit
    simple = set(system.simple_roots())
    reached: set[Root] = set()
    queue: list = []
    counter = 0

    def admit(root: Root):
        nonlocal counter
        root = system.positive_part(root)
        if root in reached or len(reached) >= limit:
            return
        depth = system.root_depth(root)
        if depth > max_depth:
            return
        reached.add(root)
        counter += 1
        heapq.heappush(queue, (depth, counter, root))

    for root in roots:
        admit(root)
    done: list[Root] = []
    while queue and not simple <= reached:
        _, _, beta = heapq.heappop(queue)
        for gamma in list(done):
            admit(system.reflection_in_root(beta, gamma))
            admit(system.reflection_in_root(gamma, beta))
        done.append(beta)
    if len(reached) >= limit:
        logger.warning(f"Reflection closure hit its limit of {limit} roots")
    return reached


def essential_certificate(
    g: CoxeterGraph,
    w: Sequence[str],
    depth: Optional[int] = None,
    m_max: Optional[int] = None,
    closure_depth: Optional[int] = None,
    mode: Optional[ScalarMode] = None,
    system: Optional[CoxeterSystem] = None,
) -> EssentialVerdict:
    """
    Bounded certificate that w lies in no proper parabolic subgroup.

    CertifiedEssential means the reflections in the w-odd roots found
    generate W. NotEssential is only reported with a sound witness.

    Raises:
        UnsupportedGraphError: g is not irreducible of indefinite type
    """
    logger.info("=== Essential certificate ===")
    depth = settings.orbit_depth if depth is None else depth
    m_max = settings.orbit_m_max if m_max is None else m_max
    closure_depth = settings.closure_depth if closure_depth is None else closure_depth
    system = system or CoxeterSystem(g, mode)
    bounds = {"depth": depth, "m_max": m_max, "closure_depth": closure_depth}

    if not g.is_connected:
        raise UnsupportedGraphError("Essential certificates need an irreducible (connected) graph")
    if system.coxeter_type != CoxeterType.INDEFINITE:
        raise UnsupportedGraphError(
            f"Essential certificates need an indefinite graph, got {system.coxeter_type.value}"
        )

    w = tuple(w)
    support = tuple(s for s in g.vertices if s in system.support(w))
    if len(support) < g.rank:
        logger.info(f"Reduced support {support} is a proper subset of the vertices")
        return EssentialVerdict(
            kind="not_essential", reason="proper-support", support=support, bounds=bounds
        )

    simple_verdicts = [orbit_classify(system, w, alpha, m_max) for alpha in system.simple_roots()]
    if all(v.kind == "periodic" for v in simple_verdicts):
        logger.info("Every simple root is periodic, so w has finite order")
        return EssentialVerdict(
            kind="not_essential", reason="finite-order", support=support, bounds=bounds
        )

    scan = odd_roots(system, w, depth, m_max)
    logger.info(f"Found {len(scan.odd)} odd roots ({scan.unknown} undecided)")
    reached_roots = closure(system, scan.odd, closure_depth)
    reached = tuple(s for s, alpha in zip(g.vertices, system.simple_roots()) if alpha in reached_roots)

    if len(reached) == g.rank:
        return EssentialVerdict(
            kind="certified_essential",
            witnesses=tuple(system.sort_roots(scan.odd)),
            support=support,
            reached=reached,
            unknown_roots=scan.unknown,
            bounds=bounds,
        )
    logger.warning(f"Reflection closure reached only {reached}; result inconclusive")
    return EssentialVerdict(
        kind="inconclusive",
        support=support,
        reached=reached,
        unknown_roots=scan.unknown,
        bounds=bounds,
    )
