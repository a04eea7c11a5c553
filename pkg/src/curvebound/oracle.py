"""Brute-force verification tools.

Discretized bang-bang path search per class, a local deformation walk, and
the radial / loop length-bound checks. Tests and the verify command use
these as independent evidence; the production minimiser never does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .errors import BudgetExhausted, PreconditionViolation
from .geometry import TWO_PI, CsPath, Point, Pose, ProblemInstance, norm_angle, p_dist, path_from_moves
from .intersect import first_self_intersection

_KIND = {1: "L", 0: "S", -1: "R"}


@dataclass(frozen=True)
class BangBangPath:
    """A piecewise-constant-curvature path: (curvature sign, length) pieces."""

    start: Pose
    pieces: tuple[tuple[int, float], ...]

    @property
    def total_length(self) -> float:
        return sum(l for _, l in self.pieces)

    @property
    def turning(self) -> float:
        return sum(s * l for s, l in self.pieces)

    def to_cs_path(self) -> CsPath:
        return path_from_moves(self.start, [(_KIND[s], l) for s, l in self.pieces])


@dataclass(frozen=True)
class OracleBudget:
    max_pieces: int = 7
    restarts: int = 64
    endpoint_tol: float = 1e-6
    seed: int = 0
    descent_iters: int = 36
    keep: int = 1024
    polish_top: int = 8

    def __post_init__(self) -> None:
        if self.max_pieces > 7:
            raise ValueError("budget allows at most 7 pieces")


@dataclass(frozen=True)
class OracleResult:
    length: float  # original (unscaled) units
    witness: BangBangPath  # curvature-scaled frame
    endpoint_error: float


def _sign_patterns(m: int) -> np.ndarray:
    pats = [[v] for v in (1, 0, -1)]
    for _ in range(m - 1):
        pats = [p + [v] for p in pats for v in (1, 0, -1) if v != p[-1]]
    return np.asarray(pats, dtype=np.float64)


def _batch_endpoint(signs: np.ndarray, lens: np.ndarray, start: Pose):
    """Endpoint (x, y, unwrapped final heading) for rows of piece lengths."""
    turn = signs * lens
    h = start.theta + np.cumsum(turn, axis=-1)
    h_prev = np.concatenate(
        [np.full(h.shape[:-1] + (1,), start.theta), h[..., :-1]], axis=-1
    )
    is_arc = signs != 0.0
    dx = np.where(is_arc, signs * (np.sin(h) - np.sin(h_prev)), lens * np.cos(h_prev))
    dy = np.where(is_arc, signs * (np.cos(h_prev) - np.cos(h)), lens * np.sin(h_prev))
    return start.x + dx.sum(-1), start.y + dy.sum(-1), h[..., -1]


def _batch_forward(signs: np.ndarray, lens: np.ndarray, start: Pose):
    """Endpoint residual data and exact Jacobian for rows of piece lengths.

    Growing piece j slides everything after it along the heading at the end
    of the piece and, for an arc, also rotates the tail about that junction.
    """
    rows, m = lens.shape
    h = start.theta + np.cumsum(signs * lens, axis=1)
    h_prev = np.concatenate([np.full((rows, 1), start.theta), h[:, :-1]], axis=1)
    is_arc = signs != 0.0
    dx = np.where(is_arc, signs * (np.sin(h) - np.sin(h_prev)), lens * np.cos(h_prev))
    dy = np.where(is_arc, signs * (np.cos(h_prev) - np.cos(h)), lens * np.sin(h_prev))
    xs = start.x + np.cumsum(dx, axis=1)
    ys = start.y + np.cumsum(dy, axis=1)
    val = np.stack([xs[:, -1], ys[:, -1], h[:, -1]], axis=1)
    rx = xs[:, -1:] - xs
    ry = ys[:, -1:] - ys
    jac = np.stack(
        [np.cos(h) - signs * ry, np.sin(h) + signs * rx, np.broadcast_to(signs, h.shape)],
        axis=1,
    )
    return val, jac


def _gn_project(signs: np.ndarray, lens: np.ndarray, start: Pose, goal: np.ndarray,
                iters: int, cap: float):
    """Batched damped Gauss-Newton projection onto endpoint = goal, 0 <= lens <= cap."""
    eye = np.eye(3)
    for _ in range(iters):
        val, jac = _batch_forward(signs, lens, start)
        g = val - goal
        jjt = jac @ jac.transpose(0, 2, 1)
        trace = jjt[:, 0, 0] + jjt[:, 1, 1] + jjt[:, 2, 2]
        jjt = jjt + (1e-12 * trace + 1e-10)[:, None, None] * eye
        y = np.linalg.solve(jjt, g[:, :, None])
        step = (jac.transpose(0, 2, 1) @ y)[:, :, 0]
        lens = np.clip(lens - step, 0.0, cap)
    x, yy, h = _batch_endpoint(signs, lens, start)
    resid = np.maximum(np.abs(x - goal[0]), np.maximum(np.abs(yy - goal[1]), np.abs(h - goal[2])))
    return lens, resid


def oracle_min_in_class(inst: ProblemInstance, n: int, budget: OracleBudget | None = None) -> OracleResult:
    """Best bang-bang path found for class n; an upper bound on the true minimum.

    Curvature-sign patterns are enumerated exhaustively; each gets
    ``budget.restarts`` random starts projected onto the endpoint-and-class
    constraints, followed by length descent along the constraint manifold
    and a constrained polish of the most promising rows.
    """
    budget = budget or OracleBudget()
    scaled = inst.scaled()
    start, end = scaled.start, scaled.end
    tau = norm_angle(end.theta - start.theta) + TWO_PI * n
    goal = np.array([end.x, end.y, start.theta + tau])

    rng = np.random.default_rng(np.random.SeedSequence([budget.seed, n + (1 << 16)]))
    pats = _sign_patterns(budget.max_pieces)
    m = pats.shape[1]
    b = max(2, budget.restarts)
    signs = np.repeat(pats, b, axis=0)
    rows = signs.shape[0]

    diag = p_dist(start.position, end.position)
    cap = diag + TWO_PI * (abs(n) + 2) + 8.0
    lens = rng.uniform(0.0, max(diag, 2.0), size=(rows, m))
    lens[0::b] = 0.01  # one near-degenerate start per pattern

    lens, resid = _gn_project(signs, lens, start, goal, iters=14, cap=cap)
    feasible = resid <= 1e-7
    if feasible.any():
        signs, lens = signs[feasible], lens[feasible]
        order = np.argsort(lens.sum(axis=1), kind="stable")[: budget.keep]
        signs, lens = signs[order], lens[order]

        # Descend the total length along the constraint manifold.
        best_lens = lens.copy()
        best_total = lens.sum(axis=1)
        eye = 1e-10 * np.eye(3)
        for t in range(budget.descent_iters):
            alpha = 0.6 * (0.02 / 0.6) ** (t / max(budget.descent_iters - 1, 1))
            val, jac = _batch_forward(signs, lens, start)
            ones = np.ones((lens.shape[0], m, 1))
            jjt = jac @ jac.transpose(0, 2, 1) + eye
            y = np.linalg.solve(jjt, jac @ ones)
            d = (ones - jac.transpose(0, 2, 1) @ y)[:, :, 0]
            trial = np.clip(lens - alpha * d, 0.0, cap)
            trial, resid = _gn_project(signs, trial, start, goal, iters=2, cap=cap)
            total = trial.sum(axis=1)
            ok = (resid <= 1e-7) & (total < best_total)
            lens = np.where(ok[:, None], trial, lens)
            best_total = np.where(ok, total, best_total)
            best_lens = np.where(ok[:, None], trial, best_lens)
        lens, signs = best_lens, signs
        totals = best_total
    else:
        totals = lens.sum(axis=1)

    order = np.argsort(totals, kind="stable")
    best_len, best_err, best_row, best_signs = math.inf, math.inf, lens[order[0]], signs[order[0]]
    for idx in order[: budget.polish_top]:
        sg = signs[idx]

        def g_fun(ls, sg=sg):
            val, _ = _batch_forward(sg[None, :], np.asarray(ls)[None, :], start)
            return val[0] - goal

        def g_jac(ls, sg=sg):
            _, jac = _batch_forward(sg[None, :], np.asarray(ls)[None, :], start)
            return jac[0]

        res = minimize(
            lambda ls: float(np.sum(ls)),
            lens[idx],
            jac=lambda ls: np.ones_like(ls),
            method="SLSQP",
            bounds=[(0.0, cap)] * m,
            constraints=[{"type": "eq", "fun": g_fun, "jac": g_jac}],
            options={"maxiter": 120, "ftol": 1e-12},
        )
        ls = np.clip(res.x, 0.0, None)
        err = float(np.abs(g_fun(ls)).max())
        length = float(ls.sum())
        if err <= budget.endpoint_tol and length < best_len:
            best_len, best_err, best_row, best_signs = length, err, ls, sg
        elif math.isinf(best_len) and err < best_err:
            best_err, best_row, best_signs = err, ls, sg

    witness = BangBangPath(
        start,
        tuple((int(s), float(l)) for s, l in zip(best_signs, best_row) if l > 1e-12),
    )
    if math.isinf(best_len):
        raise BudgetExhausted(
            f"no witness met endpoint tolerance (best error {best_err:.3g})",
            best=OracleResult(witness.total_length / inst.kappa, witness, best_err),
        )
    return OracleResult(best_len / inst.kappa, witness, best_err)


def _piece_jacobian(signs: np.ndarray, lens: np.ndarray, start: Pose) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint constraint residual and its exact Jacobian w.r.t. piece lengths.

    Growing piece j slides the tail along the heading at its end and, for an
    arc, rotates everything after it about that junction.
    """
    m = len(lens)
    h = start.theta + np.cumsum(signs * lens)
    xs = np.empty(m + 1)
    ys = np.empty(m + 1)
    xs[0], ys[0] = start.x, start.y
    hp = start.theta
    for j in range(m):
        if signs[j] == 0.0:
            xs[j + 1] = xs[j] + lens[j] * math.cos(hp)
            ys[j + 1] = ys[j] + lens[j] * math.sin(hp)
        else:
            xs[j + 1] = xs[j] + signs[j] * (math.sin(h[j]) - math.sin(hp))
            ys[j + 1] = ys[j] + signs[j] * (math.cos(hp) - math.cos(h[j]))
        hp = h[j]
    jac = np.zeros((3, m))
    for j in range(m):
        ex, ey = math.cos(h[j]), math.sin(h[j])
        rx, ry = xs[m] - xs[j + 1], ys[m] - ys[j + 1]
        jac[0, j] = ex - signs[j] * ry
        jac[1, j] = ey + signs[j] * rx
        jac[2, j] = signs[j]
    return np.array([xs[m], ys[m], h[-1] if m else start.theta]), jac


def _project_endpoint(signs: np.ndarray, lens: np.ndarray, start: Pose,
                      goal: np.ndarray, iters: int = 8) -> np.ndarray | None:
    """Gauss-Newton projection onto the endpoint + turning constraint set."""
    x = lens.copy()
    for _ in range(iters):
        val, jac = _piece_jacobian(signs, x, start)
        g = val - goal
        if float(np.abs(g).max()) <= 1e-9:
            return x
        jjt = jac @ jac.T + 1e-12 * np.eye(3)
        step = jac.T @ np.linalg.solve(jjt, g)
        x = np.clip(x - step, 0.0, None)
    val, _ = _piece_jacobian(signs, x, start)
    return x if float(np.abs(val - goal).max()) <= 1e-8 else None


def try_lengthen_in_class(inst: ProblemInstance, witness: BangBangPath, target: float,
                          seed: int = 0, restarts: int = 3, steps: int = 160) -> bool:
    """Local deformation walk: can the witness grow past target length?

    Random small perturbations of the piece lengths are projected back onto
    the endpoint-and-turning constraints, so every accepted state is a valid
    bounded-curvature path connected to the previous one by a small move.
    Acceptance is biased toward growth (small downhill slack). Returns True
    as soon as a state exceeds the target length.
    """
    scaled = inst.scaled()
    start, end = scaled.start, scaled.end
    base_signs = [s for s, _ in witness.pieces]
    base_lens = [l for _, l in witness.pieces]
    tau = sum(s * l for s, l in witness.pieces)
    goal = np.array([end.x, end.y, start.theta + tau])
    rng = np.random.default_rng(np.random.SeedSequence([seed, 737]))

    paddings = []
    for lead in ([1, -1], [-1, 1], [1, -1, 1, -1]):
        signs = list(lead) + base_signs + list(reversed(lead))
        lens = [0.0] * len(lead) + base_lens + [0.0] * len(lead)
        if len(signs) <= 11 and all(a != b for a, b in zip(signs, signs[1:])):
            paddings.append((np.asarray(signs, float), np.asarray(lens, float)))
    if not paddings:
        paddings.append((np.asarray(base_signs, float), np.asarray(base_lens, float)))

    for signs, lens0 in paddings:
        for _ in range(restarts):
            x = lens0.copy()
            cur = float(x.sum())
            for _ in range(steps):
                grow = _growth_direction(signs, x, start)
                trial = np.clip(
                    x + 0.08 * grow + rng.normal(0.0, 0.04, size=x.shape), 0.0, None
                )
                proj = _project_endpoint(signs, trial, start, goal)
                if proj is None:
                    continue
                total = float(proj.sum())
                if total < cur - 0.05:
                    continue
                x, cur = proj, total
                if cur >= target:
                    return True
    return False


def _growth_direction(signs: np.ndarray, lens: np.ndarray, start: Pose) -> np.ndarray:
    """Unit direction of steepest total-length growth tangent to the constraints."""
    _, jac = _piece_jacobian(signs, lens, start)
    ones = np.ones(len(lens))
    jjt = jac @ jac.T + 1e-10 * np.eye(3)
    d = ones - jac.T @ np.linalg.solve(jjt, jac @ ones)
    norm = float(np.linalg.norm(d))
    return d / norm if norm > 1e-9 else d


def check_radial_bound(path: CsPath, origin: Point) -> bool:
    """Length of a path staying at radius >= 1 must cover its swept angle."""
    samples = path.sample(0.01)
    radii = [math.hypot(p[0] - origin[0], p[1] - origin[1]) for _, p, _ in samples]
    if min(radii) < 1.0 - 1e-9:
        raise PreconditionViolation(f"path dips to radius {min(radii):.6f} < 1 around origin")
    angles = np.unwrap([math.atan2(p[1] - origin[1], p[0] - origin[0]) for _, p, _ in samples])
    eta = abs(float(angles[-1] - angles[0]))
    return path.length + 1e-9 >= eta


def check_loop_bound(path: CsPath) -> bool:
    """The sub-path between the first self-intersection parameters is >= 2*pi."""
    crossing = first_self_intersection(path)
    return crossing.s2 - crossing.s1 >= TWO_PI - 1e-6
