from __future__ import annotations

from typing import Tuple

import numpy as np

from ..errors import GenusMismatch
from ..models import Handedness, HomologyClass, TwistLetter, TwistWord


def _vector(x: HomologyClass) -> np.ndarray:
    return np.array(x.coords, dtype=object)


def identity(genus: int) -> np.ndarray:
    return np.identity(2 * genus, dtype=int).astype(object)


def symplectic_form(genus: int) -> np.ndarray:
    """Block matrix J with <x, y> = x^T J y and <a_i, b_i> = 1."""
    J = np.zeros((2 * genus, 2 * genus), dtype=int).astype(object)
    for i in range(genus):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = -1
    return J


def intersection_pairing(x: HomologyClass, y: HomologyClass) -> int:
    if x.genus != y.genus:
        raise GenusMismatch(f"pairing genus {x.genus} with genus {y.genus}")
    return int(_vector(x).dot(symplectic_form(x.genus)).dot(_vector(y))) if x.genus else 0


def twist_matrix(cycle: HomologyClass, handedness: Handedness = Handedness.RIGHT) -> np.ndarray:
    """Transvection x -> x + s<x, c>c with s = +1 right-handed, -1 left-handed."""
    g = cycle.genus
    c = _vector(cycle)
    if g == 0:
        return identity(0)
    Jc = symplectic_form(g).dot(c)
    return identity(g) + handedness.sign * np.outer(c, Jc)


def compose_word(word: TwistWord) -> np.ndarray:
    M = identity(word.genus)
    for letter in word.letters:
        M = M.dot(twist_matrix(letter.cycle, letter.handedness))
    return M


def inverse_word(word: TwistWord) -> TwistWord:
    return TwistWord(
        word.genus,
        tuple(TwistLetter(l.cycle, l.handedness.reversed()) for l in reversed(word.letters)),
    )


def apply_matrix(M: np.ndarray, x: HomologyClass) -> HomologyClass:
    if M.shape != (2 * x.genus, 2 * x.genus):
        raise GenusMismatch(f"{M.shape[0]}x{M.shape[1]} matrix applied to a genus {x.genus} class")
    if x.genus == 0:
        return x
    return HomologyClass(x.genus, tuple(int(v) for v in M.dot(_vector(x))))


def round_handle_check(word: TwistWord, z: HomologyClass) -> bool:
    """True iff the monodromy of ``word`` maps z to +z or -z.

    On the torus a primitive class determines an essential simple closed curve
    up to isotopy and orientation, so this decides legitimacy of the round
    handle. For higher genus it is only a necessary condition.
    """
    if word.genus != z.genus:
        raise GenusMismatch(f"class on genus {z.genus} checked against a genus {word.genus} word")
    image = apply_matrix(compose_word(word), z)
    return image == z or image == -z


def is_symplectic(M: np.ndarray, genus: int) -> bool:
    J = symplectic_form(genus)
    return bool((M.T.dot(J).dot(M) == J).all())


def as_rows(M: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in M)
