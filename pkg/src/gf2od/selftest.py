"""Property suites run by ``gf2od selftest``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import brute
from .gf2core import BitVector, SymMatrix, add_outer, is_kernel_basis, kernel_basis, nullity, parity
from .parity import solve_diag_system
from .generators import random_symmetric, random_tree, random_vector
from .trees import boundary_state
from .update import apply_toggle, classify_toggle


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failed": len(self.failures),
                "examples": self.failures[:5]}


def all_symmetric(n: int):
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    for bits in itertools.product((0, 1), repeat=len(cells)):
        rows = [0] * n
        for (i, j), b in zip(cells, bits):
            if b:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield SymMatrix(n, rows, _checked=False)


def check_diag_system(m: SymMatrix) -> str | None:
    sols = solve_diag_system(m)
    d = m.diagonal()
    want = sols.rank & 1
    if sols.dimension > 12:
        return None
    for x in sols:
        if (m @ x) != d:
            return "%r: %s is not a solution" % (m, x)
        if parity(d.bits & x.bits) != want:
            return "%r: diag . %s != rank mod 2" % (m, x)
    return None


def diag_parity_suite(max_n: int = 4) -> SuiteResult:
    res = SuiteResult("diagonal system, exhaustive n <= %d" % max_n)
    for n in range(max_n + 1):
        for m in all_symmetric(n):
            res.checked += 1
            err = check_diag_system(m)
            if err:
                res.failures.append(err)
    return res


def check_toggle(m: SymMatrix, u: BitVector) -> str | None:
    kernel = kernel_basis(m)
    case = classify_toggle(m, kernel, u)
    if not case.check(m, u):
        return "bad certificate for %r, u=%s" % (m, u)
    m2, k2, dnul = apply_toggle(m, kernel, u)
    if m2 != add_outer(m, u):
        return "wrong updated matrix"
    if dnul != nullity(m2) - nullity(m):
        return "%r, u=%s: predicted dnul %d" % (m, u, dnul)
    if not is_kernel_basis(m2, k2):
        return "%r, u=%s: incremental kernel invalid" % (m, u)
    return None


def toggle_suite(trials: int, rng: random.Random, max_n: int = 32) -> SuiteResult:
    res = SuiteResult("rank-one update, %d random trials" % trials)
    for _ in range(trials):
        n = rng.randint(1, max_n)
        m = random_symmetric(n, rng, density=rng.choice([0.1, 0.5, 0.9]))
        u = random_vector(n, rng)
        res.checked += 1
        err = check_toggle(m, u)
        if err:
            res.failures.append(err)
    return res


def check_tree(t) -> str | None:
    got = boundary_state(t).counts()
    want = brute.boundary_counts(t.n, list(t.edges()), t.label.to_list(), t.root)
    if got != want:
        return "tree %r: recursion %r, enumeration %r" % (t, got, want)
    return None


def tree_suite(trials: int, rng: random.Random, max_n: int = 14) -> SuiteResult:
    res = SuiteResult("tree boundary counts vs enumeration, n <= %d" % max_n)
    for _ in range(trials):
        t = random_tree(rng.randint(1, max_n), rng)
        res.checked += 1
        err = check_tree(t)
        if err:
            res.failures.append(err)
    return res


def run_all(seed: int) -> list[SuiteResult]:
    rng = random.Random(seed)
    return [diag_parity_suite(4), toggle_suite(2000, rng), tree_suite(50, rng)]
