"""Partition-regularity decisions for linear equations, and certification of
two-class asymptotic structures.

The homogeneous decision is Rado's criterion (a nonempty zero-sum subset of
coefficients).  The asymptotic certification builds, for a coefficient
arrangement whose length-k prefix sums to zero and a closeness parameter N,
the augmented matrix of the Hindman-Leader inequality criterion: the original
equation, a pair of ratio rows (N*x_a - x_b > 0 in slack form) tying each
class to its anchor variable, and one separation row forcing the first class
above the second.  The equation is asymptotically PR in (prefix, suffix)
exactly when some positive slack weights make this matrix satisfy the
columns condition; the weight choice q = N-1 everywhere except q = 1 on the
separation row is certified here by exhibiting the certificate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .linalg import (
    ColumnsCertificate,
    QMatrix,
    _Basis,
    columns_condition,
    first_zero_sum_subset,
    zero_sum_subsets,
)
from .model import Equation, trivial_constant_solution
from .results import FilterResult, OrderedPartition, Status, Verdict


class NotLinearError(ValueError):
    pass


class NotPRError(ValueError):
    pass


RADO_CITATION = (
    "Rado: a linear homogeneous equation is partition regular over the "
    "positive integers iff some nonempty subset of its coefficients sums to zero"
)

INHOMOGENEOUS_NOTE = (
    "inhomogeneous rule: PR iff a positive constant solution exists and the "
    "homogeneous part satisfies the Rado condition; this conjunction is "
    "applied as stated even when a constant solution alone would give "
    "monochromatic points"
)


def rado_condition(coeffs: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Smallest (bitmask order) nonempty zero-sum subset of coefficients."""
    if any(c == 0 for c in coeffs):
        raise ValueError("coefficients must be nonzero")
    return first_zero_sum_subset(coeffs)


def linear_pr_verdict(eq: Equation) -> Verdict:
    """Full PR decision for a linear equation (constant term permitted)."""
    poly = eq.poly
    if not poly.is_linear():
        raise NotLinearError("equation is not linear")
    coeffs = poly.linear_coefficients()
    c0 = poly.constant_term()
    subset = rado_condition(coeffs)
    names = lambda J: [poly.variables[i] for i in J]

    if c0 == 0:
        if subset is not None:
            return Verdict(
                Status.PR,
                certificate={"kind": "rado_subset", "variables": names(subset)},
            )
        reason = FilterResult(
            "linear-rado", fired=True, applicable=True,
            evidence={"coefficients": coeffs},
            citation=RADO_CITATION,
        )
        return Verdict(Status.NOT_PR, reasons=[reason])

    constant = trivial_constant_solution(poly)
    if constant is not None and subset is not None:
        return Verdict(
            Status.PR,
            certificate={
                "kind": "constant_and_rado",
                "constant": constant,
                "variables": names(subset),
            },
            notes=[INHOMOGENEOUS_NOTE],
        )
    evidence = {
        "coefficients": coeffs,
        "constant_term": c0,
        "has_constant_solution": constant is not None,
        "homogeneous_part_rado": subset is not None,
    }
    reason = FilterResult(
        "linear-inhomogeneous", fired=True, applicable=True,
        evidence=evidence, citation=RADO_CITATION,
    )
    notes = [INHOMOGENEOUS_NOTE]
    if constant is not None and subset is None:
        notes.append(
            f"constant solution k={constant} exists but the homogeneous part "
            "fails the Rado condition; the conjunctive rule wins"
        )
    return Verdict(Status.NOT_PR, reasons=[reason], notes=notes)


def asymptotic_candidates_linear(eq: Equation) -> list[OrderedPartition]:
    """Candidate asymptotic structures of a PR linear homogeneous equation:
    one two-class partition (I1 = J, I2 = rest) per nonempty zero-sum proper
    subset J of the coefficients, plus the single-class partition when the
    full coefficient set sums to zero."""
    poly = eq.poly
    if not poly.is_linear() or poly.constant_term() != 0:
        raise NotLinearError("equation is not linear homogeneous")
    coeffs = poly.linear_coefficients()
    if rado_condition(coeffs) is None:
        raise NotPRError("equation is not partition regular")
    n = len(coeffs)
    out = []
    for subset in zero_sum_subsets(coeffs):
        chosen = frozenset(subset)
        if len(chosen) == n:
            out.append(OrderedPartition((chosen,)))
        else:
            rest = frozenset(range(n)) - chosen
            out.append(OrderedPartition((chosen, rest)))
    return out


# ---------------------------------------------------------------------------
# augmented-matrix construction


def hl_slack_pairs(k: int, n: int) -> list[tuple[int, int]]:
    """Slack labels in construction order (1-based variable positions)."""
    pairs = []
    for i in range(2, k + 1):
        pairs.extend([(1, i), (i, 1)])
    for j in range(k + 2, n + 1):
        pairs.extend([(k + 1, j), (j, k + 1)])
    pairs.append((1, k + 1))
    return pairs


def default_hl_weights(k: int, n: int, N: int) -> dict[tuple[int, int], Fraction]:
    """The certified weight choice: 1 on the separation slack, N-1 elsewhere."""
    weights = {pair: Fraction(N - 1) for pair in hl_slack_pairs(k, n)}
    weights[(1, k + 1)] = Fraction(1)
    return weights


def hl_matrix(coeffs: Sequence[int], k: int, N: int,
              weights: Mapping[tuple[int, int], Fraction]) -> QMatrix:
    """Augmented matrix for the two-class inequality system.

    Row 0 is the equation.  For each prefix variable i in 2..k a pair of
    ratio rows anchored at x_1 (N*x_1 - x_i - q*z and -x_1 + N*x_i - q*z'),
    the same for each suffix variable j in k+2..n anchored at x_{k+1}, and a
    final separation row x_1 - x_{k+1} - q*z''.  Every slack variable gets a
    fresh column, appended in construction order.
    """
    n = len(coeffs)
    if any(c == 0 for c in coeffs):
        raise ValueError("coefficients must be nonzero")
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if N < 2:
        raise ValueError("N must be at least 2")
    pairs = hl_slack_pairs(k, n)
    slack_col = {pair: n + idx for idx, pair in enumerate(pairs)}
    for pair in pairs:
        q = weights.get(pair)
        if q is None:
            raise ValueError(f"missing slack weight for {pair}")
        if q <= 0:
            raise ValueError(f"slack weight for {pair} must be positive")
    ncols = n + len(pairs)
    rows = [list(coeffs) + [0] * len(pairs)]

    def ratio_row(big: int, small: int):
        # N*x_big - x_small - q*z > 0 in slack form (1-based positions)
        row = [0] * ncols
        row[big - 1] = N
        row[small - 1] = -1
        row[slack_col[(big, small)]] = -weights[(big, small)]
        rows.append(row)

    for i in range(2, k + 1):
        ratio_row(1, i)
        ratio_row(i, 1)
    for j in range(k + 2, n + 1):
        ratio_row(k + 1, j)
        ratio_row(j, k + 1)
    sep = [0] * ncols
    sep[0] = 1
    sep[k] = -1
    sep[slack_col[(1, k + 1)]] = -weights[(1, k + 1)]
    rows.append(sep)
    return QMatrix.from_rows(rows)


def hl_shape(n: int) -> tuple[int, int]:
    """Shape of the constructed matrix: (2n-2) x (3n-3)."""
    return 2 * n - 2, 3 * n - 3


def hl_conventional_shape(n: int) -> tuple[int, int]:
    """The 2n x (3n-1) count that presentations quoting the construction
    use; it pads the built matrix with redundant rows and slack columns."""
    return 2 * n, 3 * n - 1


def _fast_path_blocks(k: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Predicted certificate: the first class's variable columns, their
    ratio slacks, and the separation slack sum to zero; everything else is
    one further block (0-based columns)."""
    ncols = 3 * n - 3
    d1 = list(range(k)) + list(range(n, n + 2 * (k - 1))) + [ncols - 1]
    d2 = [c for c in range(ncols) if c not in set(d1)]
    return tuple(d1), tuple(d2)


def verify_hl_choice(coeffs: Sequence[int], k: int, N: int) -> Optional[ColumnsCertificate]:
    """Build the augmented matrix with the standard weight choice and return
    a columns-condition certificate.

    The predicted two-block structure is checked first; the exhaustive
    search runs only if that fast path fails.
    """
    n = len(coeffs)
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    prefix_sum = sum(coeffs[:k])
    if prefix_sum != 0:
        raise ValueError(f"prefix of length {k} sums to {prefix_sum}, not zero")
    matrix = hl_matrix(coeffs, k, N, default_hl_weights(k, n, N))
    d1, d2 = _fast_path_blocks(k, n)
    cols = matrix.columns()

    def block_sum(block):
        return tuple(
            sum((cols[c][r] for c in block), Fraction(0)) for r in range(matrix.rows)
        )

    if all(x == 0 for x in block_sum(d1)):
        basis = _Basis(matrix.rows)
        for c in d1:
            basis.add(cols[c])
        if not d2:
            return ColumnsCertificate((d1,))
        if basis.contains(block_sum(d2)):
            return ColumnsCertificate((d1, d2))
    return columns_condition(matrix)
