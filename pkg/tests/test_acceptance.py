"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` (lines are also repeated in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

import random
import time

import pytest

from conftest import ACCEPTANCE_LINES, random_element, random_trimatrix
from nilgt.coxeter import make_type_a_realization
from nilgt.morphism import MorphismSpec, commuting_swap, gamma_determinant, is_isomorphism, is_morphism, letters_commute
from nilgt.nilalg import (
    RIGHTMOST,
    AlgebraElement,
    degree,
    full_product,
    generator_power,
    monomial,
    presentation_lines,
    reduce_monomial,
)
from nilgt.trimat import TriMatrix, bnabla, extended_t_matrix, nabla, t_matrix
from nilgt.typeatilde import (
    ASCENDING,
    DESCENDING,
    Interval,
    abacus,
    assemble_t_matrix,
    blob_matrix,
    blob_modulus_report,
    blob_oracle,
    entries_in_range,
    generic_action,
    interval_expression,
    interval_extended_matrix,
    table_action,
    table_in_range,
    verify_commuting_rearrangement,
)

SEED = 20261015


def record(number, ok, detail):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


# 1 ------------------------------------------------------------------------
ISO_T = TriMatrix(((0, 0, 0, 0), (0, 0, 0, 0), (-1, -1, 0, 0), (-1, 1, -1, 0)))
ISO_S = TriMatrix(((0, 0, 0, 0), (-1, 0, 0, 0), (-1, -1, 0, 0), (0, 1, -1, 0)))
ISO_GAMMA = ((1, 1, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))


def criterion_1():
    def body():
        spec = MorphismSpec(ISO_T, ISO_S, ISO_GAMMA)
        return is_morphism(spec), is_isomorphism(spec), gamma_determinant(spec)

    (morph, iso, det), secs = timed(body)
    ok = morph and iso and det == 8 and secs < 1
    return ok, f"morphism={morph} isomorphism={iso} det={det} ({secs:.3f}s)"


# 2 ------------------------------------------------------------------------
NABLA_RESULT = (
    (0, 0, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (-1, -1, 0, 0, 0, 0),
    (-1, -1, -1, 0, 0, 0),
    (1, 2, 0, 0, 0, 0),
    (0, 0, 1, -1, 2, 0),
)


def criterion_2():
    t = TriMatrix(((0, 0, 0, 0), (-1, 0, 0, 0), (-1, -1, 0, 0), (-1, -1, -1, 0)))
    s = TriMatrix(((0, 0), (2, 0)))
    c = ((1, 2, 0, 0), (0, 0, 1, -1))
    got, secs = timed(lambda: nabla(t, c, s))
    ok = got == TriMatrix(NABLA_RESULT) and secs < 1
    return ok, f"6x6 block matrix reproduced ({secs:.3f}s)"


# 3 ------------------------------------------------------------------------
WORKED_T = (
    (0, 0, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (-1, -1, 0, 0, 0, 0),
    (-1, -1, -1, 0, 0, 0),
    (0, 0, 1, -1, 0, 0),
    (0, 1, 0, -1, -1, 0),
)
WORKED_RELATIONS = [
    "J_1^2 = 0",
    "J_2^2 = -J_1J_2",
    "J_3^2 = -J_1J_3 - J_2J_3",
    "J_4^2 = -J_1J_4 - J_2J_4 - J_3J_4",
    "J_5^2 = J_3J_5 - J_4J_5",
    "J_6^2 = J_2J_6 - J_4J_6 - J_5J_6",
]
WORKED_Q = ((0,), (0, 1), (0, 1, 2), (0, 1, 2, 3), (3,), (3, 2))


def criterion_3():
    from nilgt.coxeter import RootVector

    def body():
        real = make_type_a_realization(5)
        u = (0, 1, 2, 3, 2, 1)
        t = t_matrix(real, u)
        e = extended_t_matrix(real, u)
        product = bnabla(real, interval_extended_matrix(5, Interval(0, 3)), interval_extended_matrix(5, Interval(2, 1, DESCENDING)))
        q_ok = all(real.equal(v, RootVector({a: 1 for a in s})) for v, s in zip(e.q, WORKED_Q))
        return t == TriMatrix(WORKED_T), q_ok, product == e, presentation_lines(t, name="J") == WORKED_RELATIONS

    flags, secs = timed(body)
    ok = all(flags) and secs < 1
    names = ("T_u", "Q_u", "factorization", "presentation")
    return ok, " ".join(f"{n}={f}" for n, f in zip(names, flags)) + f" ({secs:.3f}s)"


# 4 ------------------------------------------------------------------------
ABACUS_U = (3, 1, 0, 4, 2, 8, 7, 5, 6, 2, 5, 1, 0)
ABACUS_LINES = [(3, 4, 5), (1, 0), (2,), (8, 7, 6, 5), (2, 1, 0)]


def criterion_4():
    def body():
        xi, u_prime = abacus(10, ABACUS_U)
        return [letters for letters, _ in xi.lines] == ABACUS_LINES, verify_commuting_rearrangement(10, ABACUS_U, u_prime)

    (lines_ok, moves_ok), secs = timed(body)
    ok = lines_ok and moves_ok and secs < 1
    return ok, f"lines={lines_ok} rearrangement={moves_ok} ({secs:.3f}s)"


# 5 ------------------------------------------------------------------------
def structure_failures(t, rng):
    n = t.n
    fails = []
    for _ in range(3):
        x, y, z = (random_element(rng, t) for _ in range(3))
        if x * y != y * x:
            fails.append("commutativity")
        if (x * y) * z != x * (y * z):
            fails.append("associativity")
    for i in range(1, n + 1):
        if generator_power(t, i, i + 1) != 0:
            fails.append(f"X_{i}^{i + 1}")
        if monomial(t, range(1, i)) * generator_power(t, i, 2) != 0:
            fails.append(f"prefix {i}")
    a, b = rng.randrange(1 << n), rng.randrange(1 << n)
    p = AlgebraElement(t, {a: 1}) * AlgebraElement(t, {b: 1})
    if p and degree(p) != 2 * (bin(a).count("1") + bin(b).count("1")):
        fails.append("grading")
    if n <= 8:
        top = full_product(t)
        full = (1 << n) - 1
        if top == 0:
            fails.append("top monomial vanished")
        for mask in range(1 << n):
            if AlgebraElement(t, {mask: 1}) * AlgebraElement(t, {full & ~mask: 1}) != top:
                fails.append(f"basis pairing {mask}")
                break
    return fails


def criterion_5(count=200):
    rng = random.Random(SEED + 5)

    def body():
        bad = []
        for _ in range(count):
            t = random_trimatrix(rng, rng.randint(1, 10))
            bad += structure_failures(t, rng)
        return bad

    bad, secs = timed(body)
    ok = not bad and secs < 60
    return ok, f"{count} matrices, {len(bad)} failures ({secs:.2f}s)"


# 6 ------------------------------------------------------------------------
def criterion_6(count=500):
    rng = random.Random(SEED + 6)

    def body():
        discrepancies = 0
        for _ in range(count):
            n = rng.randint(1, 8)
            t = random_trimatrix(rng, n)
            exps = tuple(rng.randint(0, 3) for _ in range(n))
            if reduce_monomial(t, exps) != reduce_monomial(t, exps, strategy=RIGHTMOST):
                discrepancies += 1
        return discrepancies

    bad, secs = timed(body)
    ok = bad == 0 and secs < 30
    return ok, f"{count} monomials, {bad} discrepancies ({secs:.2f}s)"


# 7 ------------------------------------------------------------------------
def criterion_7():
    def body():
        intervals = table_cases = 0
        mismatches = []
        for m in range(2, 8):
            real = make_type_a_realization(m)
            for a in range(m):
                for b in range(m):
                    for d in (ASCENDING, DESCENDING):
                        iv = Interval(a, b, d)
                        intervals += 1
                        if interval_extended_matrix(m, iv) != extended_t_matrix(real, interval_expression(m, iv)):
                            mismatches.append((m, str(iv)))
                        if not table_in_range(m, iv):
                            continue
                        for c in range(m):
                            table_cases += 1
                            v, dd = table_action(m, c, iv)
                            gv, gd = generic_action(m, c, iv)
                            if dd != gd or not real.equal(v, gv):
                                mismatches.append((m, str(iv), c))
        return intervals, table_cases, mismatches

    (intervals, table_cases, mismatches), secs = timed(body)
    ok = not mismatches and secs < 10
    return ok, f"{intervals} intervals, {table_cases} table cases, {len(mismatches)} mismatches ({secs:.2f}s)"


# 8 ------------------------------------------------------------------------
def random_type_a_word(rng, max_m=6, max_len=10):
    m = rng.randint(2, max_m)
    return m, tuple(rng.randrange(m) for _ in range(rng.randint(0, max_len)))


def criterion_8_parts(count=200):
    rng = random.Random(SEED + 8)
    assembly_bad = 0
    out_of_range = []
    start = time.perf_counter()
    for _ in range(count):
        m, u = random_type_a_word(rng)
        real = make_type_a_realization(m)
        _, u_prime = abacus(m, u)
        if assemble_t_matrix(m, u) != t_matrix(real, u_prime):
            assembly_bad += 1
        for w in (u, u_prime):
            if not entries_in_range(t_matrix(real, w)):
                out_of_range.append((m, w))
    return assembly_bad, out_of_range, time.perf_counter() - start


def criterion_8(count=200):
    assembly_bad, out_of_range, secs = criterion_8_parts(count)
    ok = assembly_bad == 0 and not out_of_range and secs < 30
    detail = f"{count} expressions, assembly mismatches {assembly_bad}; {len(out_of_range)} matrices outside {{0,1,-1,-2}}"
    if out_of_range:
        m, w = min(out_of_range, key=lambda mw: len(mw[1]))
        detail += f" (e.g. m={m}, u={w}: a repeated letter gives entry 2)"
    return ok, detail + f" ({secs:.2f}s)"


# 9 ------------------------------------------------------------------------
def criterion_9(count=200):
    rng = random.Random(SEED + 9)

    def body():
        done = failures = 0
        while done < count:
            m = rng.randint(4, 7)
            real = make_type_a_realization(m)
            u = tuple(rng.randrange(m) for _ in range(rng.randint(2, 9)))
            spots = [p for p in range(1, len(u)) if letters_commute(real, u[p - 1], u[p])]
            if not spots:
                continue
            _, spec = commuting_swap(real, u, rng.choice(spots))
            failures += not is_isomorphism(spec)
            done += 1
        return failures

    failures, secs = timed(body)
    ok = failures == 0 and secs < 60
    return ok, f"{count} swaps, {failures} failures ({secs:.2f}s)"


# 10 -----------------------------------------------------------------------
def criterion_10():
    def body():
        mismatches = []
        for m in (2, 3, 4, 5):
            for h in (1, 2, 3):
                closed = blob_matrix(m, h)
                for a in range(m):
                    if closed != blob_oracle(m, h, a):
                        mismatches.append((m, h, a))
        m2 = all(x == -2 for h in (1, 2, 3) for x in blob_matrix(2, h).lower_entries())
        return mismatches, m2, blob_modulus_report()

    (mismatches, m2, verdict), secs = timed(body)
    confirmed = [k for k, v in verdict.items() if v]
    ok = not mismatches and m2 and secs < 10
    return ok, (
        f"{len(mismatches)} mismatches, m=2 all -2: {m2}; oracle confirms modulus "
        f"{' and '.join(confirmed) or 'neither'} (m-1: {verdict['m-1']}, m: {verdict['m']}) ({secs:.2f}s)"
    )


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


@pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 6, 7, 9, 10])
def test_criterion(number):
    ok, detail = CRITERIA[number]()
    assert record(number, ok, detail), detail


def test_criterion_8_assembly():
    assembly_bad, out_of_range, secs = criterion_8_parts()
    ok, detail = criterion_8()
    record(8, ok, detail)
    assert assembly_bad == 0 and secs < 30


@pytest.mark.xfail(
    strict=True,
    reason="T_u has entry 2 whenever a letter recurs with only commuting letters in between; "
    "the {0,1,-1,-2} range holds for reduced expressions only",
)
def test_criterion_8_entry_range():
    _, out_of_range, _ = criterion_8_parts()
    assert not out_of_range


if __name__ == "__main__":
    for number, fn in CRITERIA.items():
        record(number, *fn())
