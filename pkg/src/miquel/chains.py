"""Iterated triad triangles around a fixed concurrency point: construction,
period-3 similarity bookkeeping, and the cyclic center-role recurrences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from .errors import DegenerateStepError, GeometryError
from .kernel import DEFAULT_TOL, DirectedAngle, Point, Tolerance, Triangle
from .triads import (
    CIRCUMCIRCLE_BAND,
    MiquelResult,
    SimilarityClass,
    SpecialRole,
    Triad,
    classify_similarity,
    detect_special_role,
    family_member,
    miquel_point,
)

# role positions drift along a chain as numeric error compounds; detection
# therefore uses a looser relative band than one-shot constructions
CHAIN_DETECT_TOL = Tolerance(angle_eps=1e-9, length_eps_rel=1e-6)


class ChainStep(NamedTuple):
    triangle: Triangle
    triad: Triad
    result: MiquelResult
    role: SpecialRole


@dataclass(frozen=True)
class ChainRecord:
    """A run of nested triad triangles sharing one concurrency point.

    ``steps[k].triangle`` is the triangle after k+1 steps; its vertices are
    the triad points relabeled A = point on the old BC, B = on CA, C = on AB.
    """

    seed: Triangle
    point: Point
    thetas: tuple[float, ...]
    seed_role: SpecialRole
    steps: tuple[ChainStep, ...]

    @property
    def triangles(self) -> list[Triangle]:
        return [self.seed] + [s.triangle for s in self.steps]

    @property
    def roles(self) -> list[SpecialRole]:
        return [self.seed_role] + [s.role for s in self.steps]


class RoleCycle(NamedTuple):
    roles: tuple[SpecialRole, ...]


def _normalize_thetas(thetas, k: int) -> tuple[float, ...]:
    if thetas is None:
        return (0.0,) * k
    if isinstance(thetas, (int, float, DirectedAngle)):
        th = thetas.value if isinstance(thetas, DirectedAngle) else float(thetas)
        return (th,) * k
    values = tuple(
        th.value if isinstance(th, DirectedAngle) else float(th) for th in thetas
    )
    if len(values) != k:
        raise ValueError(f"theta schedule has {len(values)} entries for {k} steps")
    return values


def iterate_chain(
    t0: Triangle,
    p: Point,
    k: int,
    thetas: Union[None, float, Sequence[float]] = None,
    tol: Tolerance = DEFAULT_TOL,
    detect_tol: Tolerance = CHAIN_DETECT_TOL,
    max_steps: int = 12,
) -> ChainRecord:
    """Run ``k`` nesting steps from ``t0`` with fixed point ``p``.

    Each step takes the family member of the current triangle at the
    scheduled rotation (default all-zero: the pedal chain) and promotes its
    triad triangle to the next host. The point must stay off every side
    line and circumcircle along the way. Pedal steps lose roughly a digit
    each on ill-conditioned hosts, hence the default cap; raise
    ``max_steps`` deliberately to go deeper.
    """
    if k < 1:
        raise ValueError("a chain needs at least one step")
    if k > max_steps:
        raise ValueError(f"chain length {k} exceeds the cap of {max_steps} steps")
    schedule = _normalize_thetas(thetas, k)
    seed_role = detect_special_role(t0, p, detect_tol)
    steps: list[ChainStep] = []
    current = t0
    for i, theta in enumerate(schedule):
        r = current.circumradius
        if current.min_side_line_distance(p) < tol.length_eps(r):
            raise DegenerateStepError(f"point hits a side line at step {i}")
        if abs(current.circumcircle.offset_of(p)) < CIRCUMCIRCLE_BAND * r:
            raise DegenerateStepError(f"collinear collapse on the circumcircle at step {i}")
        try:
            triad = family_member(current, p, theta, tol)
            result = miquel_point(current, triad, tol)
            nxt = triad.triangle()
        except GeometryError as exc:
            raise DegenerateStepError(f"step {i} degenerated: {exc}") from exc
        if result.point.dist(p) > 1e-6 * r:
            raise DegenerateStepError(
                f"concurrency point drifted off the fixed point at step {i}"
            )
        role = detect_special_role(nxt, p, detect_tol)
        steps.append(ChainStep(nxt, triad, result, role))
        current = nxt
    return ChainRecord(t0, p, schedule, seed_role, tuple(steps))


class Mod3Report(NamedTuple):
    ok: bool
    worst_residual: float
    failures: list[tuple[int, int]]
    cross_class_similar: list[tuple[int, int, SimilarityClass]]


def check_mod3_similarity(rec: ChainRecord, tol: Tolerance = DEFAULT_TOL) -> Mod3Report:
    """Every index pair congruent mod 3 must be similar; pairs across
    residue classes are reported when they happen to match as well."""
    tris = rec.triangles
    if len(tris) < 4:
        raise ValueError("need at least four triangles to compare mod-3 classes")
    failures: list[tuple[int, int]] = []
    cross: list[tuple[int, int, SimilarityClass]] = []
    worst = 0.0
    for i in range(len(tris)):
        for j in range(i + 1, len(tris)):
            match = classify_similarity(tris[i], tris[j], tol)
            if (i - j) % 3 == 0:
                if match is None:
                    failures.append((i, j))
                else:
                    worst = max(worst, match.residual)
            elif match is not None:
                cross.append((i, j, match))
    return Mod3Report(not failures, worst, failures, cross)


def detect_role_cycle(rec: ChainRecord) -> RoleCycle:
    return RoleCycle(tuple(rec.roles))


# cyclic successor of a role name along a chain; the incircle/excircle role
# and the three arc/median/symmedian roles advance together
_ROLE_SUCCESSOR = {
    "circumcenter": ("orthocenter",),
    "orthocenter": ("incenter", "excenter"),
    "incenter": ("circumcenter",),
    "excenter": ("circumcenter",),
    "first_brocard": ("first_brocard",),
    "second_brocard": ("second_brocard",),
    "s_role": ("m_role",),
    "m_role": ("q_role",),
    "q_role": ("s_role",),
}


def follows_role_cycle(cycle: RoleCycle) -> bool:
    """True when every consecutive role pair matches the cyclic recurrence."""
    names = [r.role for r in cycle.roles]
    if any(n not in _ROLE_SUCCESSOR for n in names):
        return False
    return all(
        names[i + 1] in _ROLE_SUCCESSOR[names[i]] for i in range(len(names) - 1)
    )
