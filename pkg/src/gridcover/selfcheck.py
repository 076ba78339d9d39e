"""Internal cross-check battery behind the `verify` CLI subcommand.

Each check recomputes one engine quantity along two independent routes
and reports agreement; together they pin down the state indexing, the
operator constructions, and the sweep against direct enumeration, on
small sizes where everything can be compared exhaustively.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import counting, oracle
from .errors import CrossCheckError
from .states import aztec_boundary_index, aztec_boundary_word, index_of_state, state_of_index
from .transfer import (
    Semiring,
    bit_reversed_index,
    build_bar_operator,
    build_bar_operator_tensor,
    build_row_operator,
    dense_matrix,
)

DEFAULT_MAX_M = 5


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _state_index_bijection(max_m: int) -> None:
    for length in range(1, max(8, max_m) + 1):
        for i in range(1, (1 << length) + 1):
            word = state_of_index(length, i)
            if index_of_state(word) != i:
                raise CrossCheckError(f"index round-trip failed at length {length}, i={i}")


def _aztec_boundary_consistency(max_m: int) -> None:
    for m in range(1, max(12, max_m) + 1):
        for r in range(1, m + 2):
            for s in range(1, m + 3 - r):
                idx = aztec_boundary_index(m, r, s)
                word = aztec_boundary_word(m, r, s)
                if index_of_state(word) != idx:
                    raise CrossCheckError(
                        f"boundary word {word!r} has index {index_of_state(word)}, "
                        f"closed form gives {idx} (m={m}, r={r}, s={s})"
                    )


def _operator_constructions(max_m: int) -> None:
    ring = Semiring.symbolic()
    for m in range(1, max_m + 1):
        lemma = dense_matrix(build_bar_operator(m, ring), form="lemma")
        merged = dense_matrix(build_bar_operator(m, ring), form="merged")
        if lemma != merged:
            raise CrossCheckError(f"two-matrix and merged forms differ at m={m}")
        tensor = dense_matrix(build_bar_operator_tensor(m, ring))
        size = 1 << m
        for i in range(size):
            ri = bit_reversed_index(i + 1, m) - 1
            for j in range(size):
                if tensor[ri][bit_reversed_index(j + 1, m) - 1] != lemma[i][j]:
                    raise CrossCheckError(
                        f"bit-reversed tensor form differs at m={m}, entry ({i+1},{j+1})"
                    )


def _sweep_vs_dense(max_m: int) -> None:
    rng = random.Random(20210915)
    ring = Semiring.numeric(2, 3, 5)
    for m in range(1, max_m + 1):
        op = build_bar_operator(m, ring)
        dense = dense_matrix(op)
        size = 1 << m
        vec = [rng.randrange(0, 100) for _ in range(size)]
        direct = [sum(vec[i] * dense[i][j] for i in range(size)) for j in range(size)]
        if op.apply(vec) != direct:
            raise CrossCheckError(f"block-recursive apply differs from dense at m={m}")


def _row_operator_pure_dimer(max_m: int) -> None:
    for m in range(1, max_m + 1):
        row = dense_matrix(build_row_operator(m, 1, frozenset(), Semiring.numeric(1, 1, 1)))
        uniform = dense_matrix(build_bar_operator(m, Semiring.numeric(0, 1, 1)))
        if row != uniform:
            raise CrossCheckError(f"empty-site row operator differs from pure dimer at m={m}")


def _partition_vs_enumeration(max_m: int) -> None:
    cap = max(10, 2 * max_m)
    for m in range(1, cap + 1):
        for n in range(1, cap // m + 1):
            if counting.partition_function(m, n) != oracle.brute_force_partition(m, n):
                raise CrossCheckError(f"recursion and enumeration differ on {m}x{n}")


def _structural_zeros(max_m: int) -> None:
    ring = Semiring.symbolic()
    for m in range(1, max_m + 1):
        dense = dense_matrix(build_bar_operator(m, ring))
        for i in range(1 << m):
            for j in range(1 << m):
                if i & j and dense[i][j]:
                    raise CrossCheckError(
                        f"entry ({i+1},{j+1}) of the m={m} operator should be zero"
                    )


_CHECKS = (
    ("state-index-bijection", _state_index_bijection),
    ("aztec-boundary-index", _aztec_boundary_consistency),
    ("operator-constructions", _operator_constructions),
    ("sweep-vs-dense", _sweep_vs_dense),
    ("row-operator-pure-dimer", _row_operator_pure_dimer),
    ("partition-vs-enumeration", _partition_vs_enumeration),
    ("structural-zeros", _structural_zeros),
)


def run_self_checks(max_m: int = DEFAULT_MAX_M) -> list[CheckResult]:
    """Run the battery at the given operator size; never raises."""
    if not 1 <= max_m <= 8:
        raise ValueError("self-check size must be in 1..8 (dense constructions)")
    results = []
    for name, check in _CHECKS:
        try:
            check(max_m)
        except CrossCheckError as exc:
            results.append(CheckResult(name, False, str(exc)))
        else:
            results.append(CheckResult(name, True, ""))
    return results
