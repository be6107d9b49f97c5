"""Worked examples reproduced as quick checks (``nilgt selftest``)."""

from .coxeter import RootVector, make_type_a_realization
from .morphism import MorphismSpec, gamma_determinant, is_isomorphism, is_morphism
from .nilalg import presentation_lines
from .trimat import TriMatrix, bnabla, extended_t_matrix, nabla, t_matrix
from .typeatilde import (
    DESCENDING,
    Interval,
    abacus,
    blob_selftest,
    interval_extended_matrix,
    verify_commuting_rearrangement,
)

ISO_T = TriMatrix(((0, 0, 0, 0), (0, 0, 0, 0), (-1, -1, 0, 0), (-1, 1, -1, 0)))
ISO_S = TriMatrix(((0, 0, 0, 0), (-1, 0, 0, 0), (-1, -1, 0, 0), (0, 1, -1, 0)))
ISO_GAMMA = ((1, 1, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))

NABLA_T = TriMatrix(((0, 0, 0, 0), (-1, 0, 0, 0), (-1, -1, 0, 0), (-1, -1, -1, 0)))
NABLA_S = TriMatrix(((0, 0), (2, 0)))
NABLA_C = ((1, 2, 0, 0), (0, 0, 1, -1))
NABLA_RESULT = (
    (0, 0, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (-1, -1, 0, 0, 0, 0),
    (-1, -1, -1, 0, 0, 0),
    (1, 2, 0, 0, 0, 0),
    (0, 0, 1, -1, 2, 0),
)

WORKED_U = (0, 1, 2, 3, 2, 1)
WORKED_T = (
    (0, 0, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (-1, -1, 0, 0, 0, 0),
    (-1, -1, -1, 0, 0, 0),
    (0, 0, 1, -1, 0, 0),
    (0, 1, 0, -1, -1, 0),
)
WORKED_RELATIONS = (
    "J_1^2 = 0",
    "J_2^2 = -J_1J_2",
    "J_3^2 = -J_1J_3 - J_2J_3",
    "J_4^2 = -J_1J_4 - J_2J_4 - J_3J_4",
    "J_5^2 = J_3J_5 - J_4J_5",
    "J_6^2 = J_2J_6 - J_4J_6 - J_5J_6",
)

ABACUS_U = (3, 1, 0, 4, 2, 8, 7, 5, 6, 2, 5, 1, 0)
ABACUS_LINES = ((3, 4, 5), (1, 0), (2,), (8, 7, 6, 5), (2, 1, 0))


def _roots(*supports):
    return tuple(RootVector({a: 1 for a in s}) for s in supports)


def check_isomorphism_example():
    spec = MorphismSpec(ISO_T, ISO_S, ISO_GAMMA)
    return is_morphism(spec) and is_isomorphism(spec) and gamma_determinant(spec) == 8


def check_nabla_example():
    return nabla(NABLA_T, NABLA_C, NABLA_S) == TriMatrix(NABLA_RESULT)


def check_worked_example():
    real = make_type_a_realization(5)
    t = t_matrix(real, WORKED_U)
    e = extended_t_matrix(real, WORKED_U)
    e_floor = interval_extended_matrix(5, Interval(0, 3))
    e_ceil = interval_extended_matrix(5, Interval(2, 1, DESCENDING))
    product = bnabla(real, e_floor, e_ceil)
    q_expected = _roots((0,), (0, 1), (0, 1, 2), (0, 1, 2, 3), (3,), (3, 2))
    return (
        t == TriMatrix(WORKED_T)
        and product == e
        and all(real.equal(a, b) for a, b in zip(e.q, q_expected))
        and tuple(presentation_lines(t, name="J")) == WORKED_RELATIONS
    )


def check_abacus_example():
    xi, u_prime = abacus(10, ABACUS_U)
    return (
        tuple(letters for letters, _ in xi.lines) == ABACUS_LINES
        and verify_commuting_rearrangement(10, ABACUS_U, u_prime)
    )


def check_blob_closed_form():
    try:
        blob_selftest()
    except AssertionError:
        return False
    return True


CHECKS = (
    ("isomorphism example: gamma is an isomorphism, det 8", check_isomorphism_example),
    ("nabla example: 6x6 block matrix", check_nabla_example),
    ("m=5 worked example: T_u, extended product, presentation", check_worked_example),
    ("m=10 abacus example", check_abacus_example),
    ("blob closed form agrees with t_matrix", check_blob_closed_form),
)


def run_selftest():
    return [(name, bool(fn())) for name, fn in CHECKS]
