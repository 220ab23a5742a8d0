"""End-to-end checks for the headline numbers, one test per criterion.

Each test pins the expected values and a wall-clock budget where one
applies.  The terminal summary prints a PASS/FAIL line per criterion.
"""
from __future__ import annotations

import functools
import random
import time

from quiverlab import (
    DynkinType,
    LaurentPoly,
    NotDivisible,
    Quiver,
    canonical_key,
    cc_value,
    classify,
    dynkin_type,
    exchange_graph,
    initial_seed,
    interval_module,
    mutate_quiver,
    mutate_seed,
    mutation_class,
    variables_of,
    verify_cc_bijection,
    verify_gen_exchange_instance,
    verify_root_bijection,
)
from conftest import GRID6_ARROWS, GRID10_ARROWS, TRIANGLE_ARROWS, linear_a, star_d4_in

# the finite-type suite: four diagrams, two orientations each
FINITE_SUITE: dict[str, tuple[Quiver, DynkinType, int]] = {
    "a2-linear": (linear_a(2), DynkinType("A", 2), 3),
    "a2-reversed": (Quiver.from_arrows(2, [[2, 1, 1]]), DynkinType("A", 2), 3),
    "a3-linear": (linear_a(3), DynkinType("A", 3), 6),
    "a3-sink": (Quiver.from_arrows(3, [[1, 2, 1], [3, 2, 1]]), DynkinType("A", 3), 6),
    "a4-linear": (linear_a(4), DynkinType("A", 4), 10),
    "a4-zigzag": (
        Quiver.from_arrows(4, [[1, 2, 1], [3, 2, 1], [3, 4, 1]]),
        DynkinType("A", 4),
        10,
    ),
    "d4-star-in": (star_d4_in(), DynkinType("D", 4), 12),
    "d4-mixed": (
        Quiver.from_arrows(4, [[2, 1, 1], [3, 2, 1], [4, 2, 1]]),
        DynkinType("D", 4),
        12,
    ),
}


@functools.cache
def suite_graph(name: str):
    return exchange_graph(FINITE_SUITE[name][0])


@functools.cache
def triangle_mutation_steps() -> tuple[LaurentPoly, LaurentPoly]:
    s = initial_seed(Quiver.from_arrows(3, TRIANGLE_ARROWS))
    m1 = mutate_seed(s, 1)
    m12 = mutate_seed(m1, 2)
    return m1.cluster[0], m12.cluster[1]


@functools.cache
def grid6_mutation_run():
    s = initial_seed(Quiver.from_arrows(6, GRID6_ARROWS))
    produced = []
    for k in (5, 3, 1, 6):
        s = mutate_seed(s, k)
        produced.append(s.cluster[k - 1])
    return tuple(produced), s.quiver


def fraction(numerator: LaurentPoly, denominator: LaurentPoly) -> LaurentPoly:
    return numerator.exact_divide(denominator)


def test_criterion_1_a3_census():
    started = time.perf_counter()
    graph = exchange_graph(linear_a(3))
    collected = variables_of(graph)
    elapsed = time.perf_counter() - started

    assert graph.num_seeds == 14
    assert graph.num_edges == 21

    x1, x2, x3 = (LaurentPoly.variable(3, i) for i in (1, 2, 3))
    one = LaurentPoly.one(3)
    published = {
        x1,
        x2,
        x3,
        fraction(one + x2, x1),
        fraction(x1 + x3 + x2 * x3, x1 * x2),
        fraction(x1 + x1 * x2 + x3 + x2 * x3, x1 * x2 * x3),
        fraction(x1 + x3, x2),
        fraction(x1 + x1 * x2 + x3, x2 * x3),
        fraction(one + x2, x3),
    }
    assert {p.to_text() for p in published} == set(collected.texts())
    assert elapsed < 1.0, f"census took {elapsed:.3f}s"


def test_criterion_2_triangle_goldens():
    started = time.perf_counter()
    u1, u2 = triangle_mutation_steps()
    elapsed = time.perf_counter() - started

    x1, x2, x3 = (LaurentPoly.variable(3, i) for i in (1, 2, 3))
    assert u1 == fraction(x2 + x3, x1)
    assert u2 == fraction(x1 + x2 + x3, x1 * x2)
    assert elapsed < 0.01, f"two mutations took {elapsed:.4f}s"


def test_criterion_3_grid6_sequence():
    started = time.perf_counter()
    produced, final_quiver = grid6_mutation_run()
    elapsed = time.perf_counter() - started

    x = [None] + [LaurentPoly.variable(6, i) for i in range(1, 7)]
    assert produced[0] == fraction(x[3] * x[4] + x[2] * x[6], x[5])
    assert produced[1] == fraction(
        x[3] * x[4] + x[1] * x[5] + x[2] * x[6], x[3] * x[5]
    )
    assert produced[2] == fraction(
        x[2] * x[3] * x[4]
        + x[3] * x[3] * x[4]
        + x[1] * x[2] * x[5]
        + x[2] * x[2] * x[6]
        + x[2] * x[3] * x[6],
        x[1] * x[3] * x[5],
    )
    assert produced[3] == fraction(
        x[3] * x[4] + x[4] * x[5] + x[2] * x[6], x[5] * x[6]
    )
    assert dynkin_type(final_quiver) == DynkinType("D", 6)
    assert elapsed < 0.1, f"sequence took {elapsed:.3f}s"


def test_criterion_4_grid10_census():
    started = time.perf_counter()
    census = mutation_class(Quiver.from_arrows(10, GRID10_ARROWS))
    elapsed = time.perf_counter() - started

    assert not census.truncated
    assert census.size == 5739
    assert census.multiple_arrow_members == 84
    assert census.max_multiplicity == 2
    assert elapsed < 300, f"census took {elapsed:.1f}s"


def test_criterion_5_finite_type_suite():
    started = time.perf_counter()
    for name, (q, expected_type, num_roots) in FINITE_SUITE.items():
        result = classify(q)
        assert result.verdict == "finite", name
        assert result.dynkin == expected_type, name

        graph = suite_graph(name)
        count = len(variables_of(graph).variables)
        assert count == q.n + num_roots, f"{name}: {count} variables"

        report = verify_root_bijection(q)
        assert report.ok, f"{name}: {report}"
        assert report.num_roots == num_roots, name
    elapsed = time.perf_counter() - started
    assert elapsed < 30, f"suite took {elapsed:.1f}s"


def test_criterion_6_positivity():
    for name in FINITE_SUITE:
        for p in variables_of(suite_graph(name)).variables:
            assert p.is_nonnegative(), f"{name}: {p.to_text()}"
    for p in triangle_mutation_steps():
        assert p.is_nonnegative()
    produced, _ = grid6_mutation_run()
    for p in produced:
        assert p.is_nonnegative()


def test_criterion_7_laurent_phenomenon():
    # exact division backs every mutation; a NotDivisible anywhere in
    # these walks (or in the enumerations above) would break the law
    rng = random.Random(20260815)
    walks = [
        (Quiver.from_arrows(3, TRIANGLE_ARROWS), 60, 12),
        (Quiver.from_arrows(6, GRID6_ARROWS), 40, 8),
        (Quiver.from_arrows(10, GRID10_ARROWS), 16, 5),
        (Quiver.from_arrows(2, [[1, 2, 2]]), 18, 8),
    ]
    try:
        for name in FINITE_SUITE:
            suite_graph(name)
        triangle_mutation_steps()
        grid6_mutation_run()
        for q, steps, repeats in walks:
            for _ in range(repeats):
                s = initial_seed(q)
                for _ in range(steps):
                    s = mutate_seed(s, rng.randint(1, q.n))
                for p in s.cluster:
                    assert p.is_nonnegative()
    except NotDivisible as exc:
        raise AssertionError(f"a mutation produced a non-Laurent value: {exc}")


def test_criterion_8_cc_bijection():
    started = time.perf_counter()
    for name in (
        "a2-linear",
        "a2-reversed",
        "a3-linear",
        "a3-sink",
        "a4-linear",
        "a4-zigzag",
    ):
        report = verify_cc_bijection(FINITE_SUITE[name][0])
        assert report.ok, f"{name}: {report.mismatches}"
        assert report.tilting_count == report.seed_count, name
    elapsed = time.perf_counter() - started
    assert elapsed < 60, f"bijection checks took {elapsed:.1f}s"


def test_criterion_9_gen_exchange():
    a2 = linear_a(2)
    s1 = interval_module(a2, 1, 1)
    s2 = interval_module(a2, 2, 2)
    p1 = interval_module(a2, 1, 2)
    assert verify_gen_exchange_instance(s1, s2, [p1], [])
    assert cc_value(s1) * cc_value(s2) == cc_value(p1) + LaurentPoly.one(2)


def test_criterion_10_property_suites():
    cases = 10_000

    def random_quiver(rng: random.Random, n: int, max_mult: int) -> Quiver:
        b = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = rng.randint(-max_mult, max_mult)
                b[i][j] = v
                b[j][i] = -v
        return Quiver.from_matrix(b)

    rng = random.Random(1)
    for _ in range(cases):
        q = random_quiver(rng, rng.randint(2, 6), 3)
        k = rng.randint(1, q.n)
        assert mutate_quiver(mutate_quiver(q, k), k) == q

    rng = random.Random(2)
    for _ in range(cases):
        q = random_quiver(rng, rng.randint(2, 6), 3)
        m = mutate_quiver(q, rng.randint(1, q.n))
        assert all(m.b[i][i] == 0 for i in range(m.n))
        assert all(
            m.b[i][j] == -m.b[j][i] for i in range(m.n) for j in range(m.n)
        )

    rng = random.Random(3)
    for _ in range(cases):
        q = random_quiver(rng, rng.randint(2, 5), 2)
        perm = list(range(q.n))
        rng.shuffle(perm)
        shuffled = Quiver.from_matrix(
            [[q.b[perm[i]][perm[j]] for j in range(q.n)] for i in range(q.n)]
        )
        assert canonical_key(q) == canonical_key(shuffled)

    rng = random.Random(4)
    for _ in range(cases):
        nvars = rng.randint(1, 3)

        def random_poly() -> LaurentPoly:
            terms = {}
            for _ in range(rng.randint(1, 4)):
                exps = tuple(rng.randint(-3, 3) for _ in range(nvars))
                coeff = rng.choice([c for c in range(-9, 10) if c])
                terms[exps] = terms.get(exps, 0) + coeff
            cleaned = [(e, c) for e, c in terms.items() if c]
            if not cleaned:
                cleaned = [(tuple(0 for _ in range(nvars)), 1)]
            return LaurentPoly.from_terms(nvars, cleaned)

        p = random_poly()
        d = random_poly()
        assert (p * d).exact_divide(d) == p
