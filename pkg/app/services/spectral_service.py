"""
Spectral service: density validation, von Neumann entropies and fixed-basis discord
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import numpy as np

from app.core.config import settings
from app.core.exceptions import DimensionError, GraphInputError
from app.models.decomposition import DensityMatrix
from app.models.report import DensityCheck, DensityDefect, EntropyReport

logger = logging.getLogger(__name__)

MatrixLike = Union[DensityMatrix, np.ndarray, Sequence[Sequence[Union[int, float, Fraction]]]]

# Eigenvalue clusters closer than this are treated as one degenerate eigenspace
EIGEN_GAP = 1e-8


def _rows(rho: MatrixLike) -> List[list]:
    if isinstance(rho, DensityMatrix):
        return [list(row) for row in rho.entries]
    return [list(row) for row in rho]


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _close(x, y, tolerance: float) -> bool:
    if _is_exact(x) and _is_exact(y):
        return x == y
    return abs(float(x) - float(y)) <= tolerance


def as_float_array(rho: MatrixLike) -> np.ndarray:
    """Floating copy of a density matrix"""
    if isinstance(rho, DensityMatrix):
        return np.array(rho.numerators, dtype=float) / rho.denominator
    return np.array([[float(x) for x in row] for row in _rows(rho)], dtype=float)


def _split_blocks(rho: np.ndarray, m: int, n: int) -> List[List[np.ndarray]]:
    if rho.shape != (m * n, m * n):
        raise DimensionError(f"density matrix of order {rho.shape[0]} does not split as m*n = {m}*{n}")
    return [
        [rho[mu * n:(mu + 1) * n, nu * n:(nu + 1) * n] for nu in range(m)]
        for mu in range(m)
    ]


class SpectralService:
    """Floating side of the oracle; exact inputs, numpy eigensolvers"""

    @staticmethod
    def validate_density(rho: MatrixLike, tolerance: float = None) -> DensityCheck:
        """Hermitian, unit trace and positive semidefinite.

        Exact entries (int, Fraction) are compared exactly; float entries
        within the tolerance.
        """
        tolerance = settings.PSD_TOLERANCE if tolerance is None else tolerance
        rows = _rows(rho)
        order = len(rows)
        if order == 0 or any(len(row) != order for row in rows):
            return DensityCheck(valid=False, reason=DensityDefect.NOT_SQUARE)
        for i in range(order):
            for j in range(i + 1, order):
                if not _close(rows[i][j], rows[j][i], tolerance):
                    return DensityCheck(valid=False, reason=DensityDefect.NOT_SYMMETRIC)
        trace = sum(rows[i][i] for i in range(order))
        if not _close(trace, 1, tolerance):
            return DensityCheck(valid=False, reason=DensityDefect.TRACE_NOT_ONE)
        min_eigenvalue = float(np.linalg.eigvalsh(as_float_array(rows)).min())
        if min_eigenvalue < -tolerance:
            return DensityCheck(valid=False, reason=DensityDefect.NEGATIVE_EIGENVALUE, min_eigenvalue=min_eigenvalue)
        return DensityCheck(valid=True, min_eigenvalue=min_eigenvalue)

    @staticmethod
    def von_neumann_entropy(matrix: np.ndarray, tolerance: float = None) -> float:
        """-sum lambda log2 lambda over the spectrum, with 0 log 0 = 0"""
        tolerance = settings.ENTROPY_TOLERANCE if tolerance is None else tolerance
        values = np.linalg.eigvalsh(matrix)
        values = values[values > tolerance]
        return float(-(values * np.log2(values)).sum())

    @staticmethod
    def pointer_basis(rho: MatrixLike, m: int, n: int) -> np.ndarray:
        """Orthonormal basis of C^n (as columns) diagonalizing every block rho_{mu nu}.

        Refines the standard basis through the eigenspaces of the Hermitian
        parts rho_{mu nu} + rho_{mu nu}^t and of i(rho_{mu nu} - rho_{mu nu}^t).
        When the blocks are normal and commute the result diagonalizes all of
        them; otherwise it is only the refinement reached.
        """
        blocks = _split_blocks(as_float_array(rho), m, n)
        generators = []
        for mu in range(m):
            for nu in range(m):
                block = blocks[mu][nu]
                generators.append((block + block.T).astype(complex))
                if mu != nu:
                    generators.append(1j * (block - block.T))
        groups = [np.eye(n, dtype=complex)]
        for generator in generators:
            refined = []
            for group in groups:
                if group.shape[1] == 1:
                    refined.append(group)
                    continue
                values, vectors = np.linalg.eigh(group.conj().T @ generator @ group)
                rotated = group @ vectors
                start = 0
                for k in range(1, len(values) + 1):
                    if k == len(values) or values[k] - values[k - 1] > EIGEN_GAP:
                        refined.append(rotated[:, start:k])
                        start = k
            groups = refined
        basis = np.hstack(groups)
        logger.debug(f"Pointer basis for m={m}, n={n} split into {len(groups)} eigenspaces")
        return basis

    @staticmethod
    def fixed_basis_discord(
        rho: MatrixLike,
        m: int,
        n: int,
        basis: Optional[np.ndarray] = None
    ) -> EntropyReport:
        """Discord of rho measured on B in a fixed basis (computational by default).

        Position (mu-1)*n + i holds |mu>_A |i>_B. basis holds the measurement
        vectors |k_B> as columns.
        """
        check = SpectralService.validate_density(rho)
        if not check:
            raise GraphInputError(f"not a density matrix: {check.reason.value}")
        array = as_float_array(rho)
        blocks = _split_blocks(array, m, n)
        if basis is None:
            basis = np.eye(n)
        basis = np.asarray(basis)
        if basis.shape != (n, n):
            raise DimensionError(f"measurement basis must be {n} x {n}, got {basis.shape}")
        # <k_B| rho_{mu nu} |k_B> for every k
        diagonals = [
            [np.einsum("ik,ij,jk->k", basis.conj(), blocks[mu][nu], basis) for nu in range(m)]
            for mu in range(m)
        ]
        probabilities = np.real(sum(diagonals[mu][mu] for mu in range(m)))
        conditional = 0.0
        for k in range(n):
            p_k = probabilities[k]
            if p_k <= settings.ENTROPY_TOLERANCE:
                continue
            rho_k = np.array([[diagonals[mu][nu][k] for nu in range(m)] for mu in range(m)]) / p_k
            conditional += p_k * SpectralService.von_neumann_entropy(rho_k)
        s_rho = SpectralService.von_neumann_entropy(array)
        s_rho_b = SpectralService.von_neumann_entropy(sum(blocks[mu][mu] for mu in range(m)))
        discord = conditional - (s_rho - s_rho_b)
        report = EntropyReport(
            s_rho=s_rho,
            s_rho_b=s_rho_b,
            conditional=conditional,
            discord_fixed_basis=discord,
            probabilities=tuple(float(p) for p in probabilities),
        )
        logger.debug(f"Fixed-basis discord {discord:.6g} (S(rho)={s_rho:.6g}, S(rho_B)={s_rho_b:.6g})")
        return report

    @staticmethod
    def pointer_discord(rho: MatrixLike, m: int, n: int) -> EntropyReport:
        """fixed_basis_discord measured in the pointer basis"""
        return SpectralService.fixed_basis_discord(rho, m, n, SpectralService.pointer_basis(rho, m, n))
