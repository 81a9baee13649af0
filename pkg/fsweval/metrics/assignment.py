import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np


# padded rows/columns cost the distance ceiling
PAD_COST = 1.0


@dataclass(frozen=True)
class AssignmentResult:
    pairs: Tuple[Tuple[int, int], ...]
    total_cost: float

    def __post_init__(self) -> None:
        rows = [i for i, _ in self.pairs]
        cols = [j for _, j in self.pairs]
        assert len(set(rows)) == len(rows), "row matched twice"
        assert len(set(cols)) == len(cols), "column matched twice"
        assert self.total_cost >= 0.0

    def __len__(self) -> int:
        return len(self.pairs)


def _hungarian(cost: List[List[float]]) -> Tuple[List[int], List[float], List[float]]:
    """Shortest augmenting path Hungarian method on a square matrix.

    Returns the row -> column assignment and the dual potentials (u, v), with
    cost[i][j] - u[i] - v[j] >= 0 everywhere and == 0 on the assignment.
    """
    n = len(cost)
    inf = math.inf
    # 1-based; index 0 is the virtual row/column
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    p = [0] * (n + 1)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            row = cost[i0 - 1]
            delta = inf
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = row[j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    assignment = [0] * n
    for j in range(1, n + 1):
        assignment[p[j] - 1] = j - 1
    return assignment, u[1:], v[1:]


def _assignment_cost(cost: List[List[float]], assignment: Sequence[int]) -> float:
    return math.fsum(cost[i][j] for i, j in enumerate(assignment))


def _is_optimal(value: float, optimum: float) -> bool:
    return value <= optimum + 1e-12 * max(1.0, abs(optimum))


def _lexicographic_optimum(cost: List[List[float]]) -> List[int]:
    """Optimal assignment that is lexicographically smallest as a row -> column list."""
    n = len(cost)
    assignment, u, v = _hungarian(cost)
    optimum = _assignment_cost(cost, assignment)

    fixed: List[int] = []
    for i in range(n):
        free = [j for j in range(n) if j not in fixed]
        for j in free:
            if j == assignment[i]:
                break
            # positive reduced cost under an optimal dual rules (i, j) out of every optimum
            if cost[i][j] - u[i] - v[j] > 1e-12 * max(1.0, abs(cost[i][j])):
                continue
            rest_cols = [c for c in free if c != j]
            rest_rows = list(range(i + 1, n))
            if rest_rows:
                sub = [[cost[r][c] for c in rest_cols] for r in rest_rows]
                sub_assignment, _, _ = _hungarian(sub)
                rest = [rest_cols[c] for c in sub_assignment]
            else:
                rest = []
            candidate = fixed + [j] + rest
            if _is_optimal(_assignment_cost(cost, candidate), optimum):
                assignment = candidate
                break
        fixed.append(assignment[i])
    return assignment


def solve_assignment(cost: "np.ndarray | Sequence[Sequence[float]]") -> AssignmentResult:
    """Minimum-cost injective matching of size min(m, n) over an m x n cost matrix.

    Rectangular inputs are padded to square with ``PAD_COST``; padded pairs are
    dropped from the result. Among optimal matchings the lexicographically
    smallest pair list is returned.
    """
    matrix = np.asarray(cost, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] == 0 or matrix.shape[1] == 0:
        raise ValueError(f"cost must be a non-empty 2-D matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise ValueError("cost matrix must be finite")
    if np.any(matrix < 0):
        raise ValueError("cost matrix must be non-negative")

    m, n = matrix.shape
    size = max(m, n)
    square = np.full((size, size), PAD_COST, dtype=np.float64)
    square[:m, :n] = matrix
    assignment = _lexicographic_optimum(square.tolist())

    pairs = tuple((i, j) for i, j in enumerate(assignment) if i < m and j < n)
    total = math.fsum(float(matrix[i, j]) for i, j in pairs)
    return AssignmentResult(pairs=pairs, total_cost=total)
