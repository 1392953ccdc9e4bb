#!/usr/bin/env python3
"""
정확 유리수 단체법(simplex) 실행 가능성 판정 모듈

제약식은 모두 coeffs · x <= rhs, x >= 0 형태입니다.
Phase I 단체법을 Fraction 으로 수행하고 Bland 규칙으로 순환을 막습니다.

    - 실행 가능: 기저 해(basic solution) x 반환
    - 실행 불가능: Farkas 승수 λ >= 0 (λ·G >= 0, λ·h = -1) 반환

Phase I 최적에서 여유변수(slack) 열의 축소 비용이 곧 λ 이므로
인공변수 열은 저장하지 않습니다.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearRow:
    """coeffs · x <= rhs"""

    coeffs: Tuple[Fraction, ...]
    rhs: Fraction
    label: str = ""


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    solution: Optional[Tuple[Fraction, ...]] = None
    certificate: Optional[Tuple[Fraction, ...]] = None
    pivots: int = 0


class PhaseOneTableau:
    """
    Phase I 단체표

    행 i: σ_i (G_i x + s_i) + [σ_i < 0] a_i = σ_i h_i  (σ_i = rhs 부호)
    rhs >= 0 인 행은 여유변수를, 음수인 행은 인공변수를 초기 기저로 둡니다.
    열 0..n-1 은 x, n..n+m-1 은 여유변수, 인공변수 id 는 n+m+i (저장하지 않음).
    """

    def __init__(self, rows: Sequence[LinearRow], num_vars: int):
        self.m = len(rows)
        self.n = num_vars
        self.width = num_vars + self.m
        self.A: List[List[Fraction]] = []
        self.b: List[Fraction] = []
        self.basis: List[int] = []
        self.pivots = 0

        for i, row in enumerate(rows):
            if len(row.coeffs) != num_vars:
                raise ValueError(f"행 {i} 계수 개수 {len(row.coeffs)} != 변수 개수 {num_vars}")
            sigma = 1 if row.rhs >= 0 else -1
            line = [Fraction(sigma) * Fraction(c) for c in row.coeffs] + [Fraction(0)] * self.m
            line[num_vars + i] = Fraction(sigma)
            self.A.append(line)
            self.b.append(Fraction(sigma) * Fraction(row.rhs))
            self.basis.append(num_vars + i if sigma > 0 else self.width + i)

        # 축소 비용: 인공변수 기저 행들의 합의 음수
        self.d = [Fraction(0)] * self.width
        for i in range(self.m):
            if self.is_artificial(self.basis[i]):
                for j, value in enumerate(self.A[i]):
                    if value:
                        self.d[j] -= value

    def is_artificial(self, var: int) -> bool:
        return var >= self.width

    def pivot(self, i: int, j: int):
        row = self.A[i]
        piv = row[j]
        nonzero = [l for l in range(self.width) if row[l]]
        for l in nonzero:
            row[l] /= piv
        self.b[i] /= piv

        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if not f:
                continue
            target = self.A[k]
            for l in nonzero:
                target[l] -= f * row[l]
            self.b[k] -= f * self.b[i]

        f = self.d[j]
        if f:
            for l in nonzero:
                self.d[l] -= f * row[l]

        self.basis[i] = j
        self.pivots += 1

    def bland_step(self) -> str:
        entering = next((j for j in range(self.width) if self.d[j] < 0), None)
        if entering is None:
            return 'optimal'
        candidates = [
            (self.b[i] / self.A[i][entering], self.basis[i], i)
            for i in range(self.m)
            if self.A[i][entering] > 0
        ]
        # Phase I 목적함수는 0 이상으로 유계이므로 후보가 비는 일은 없음
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return 'go_on'

    def run(self):
        while self.bland_step() != 'optimal':
            pass

    def objective(self) -> Fraction:
        return sum((self.b[i] for i in range(self.m) if self.is_artificial(self.basis[i])), Fraction(0))

    def solution(self) -> Tuple[Fraction, ...]:
        x = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                x[var] = self.b[i]
        return tuple(x)

    def farkas_multipliers(self) -> Tuple[Fraction, ...]:
        z = self.objective()
        return tuple(self.d[self.n + i] / z for i in range(self.m))


def solve_feasibility(rows: Sequence[LinearRow], num_vars: int) -> FeasibilityResult:
    """
    G x <= h, x >= 0 의 실행 가능성을 판정합니다.

    Args:
        rows: 제약식 목록
        num_vars: 변수 개수

    Returns:
        FeasibilityResult: 실행 가능하면 solution, 아니면 Farkas certificate
    """
    tableau = PhaseOneTableau(rows, num_vars)
    tableau.run()

    if tableau.objective() == 0:
        logger.debug(f"LP 실행 가능 (행 {len(rows)}개, 변수 {num_vars}개, 피벗 {tableau.pivots}회)")
        return FeasibilityResult(True, solution=tableau.solution(), pivots=tableau.pivots)

    logger.debug(f"LP 실행 불가능 (행 {len(rows)}개, 변수 {num_vars}개, 피벗 {tableau.pivots}회)")
    return FeasibilityResult(False, certificate=tableau.farkas_multipliers(), pivots=tableau.pivots)


def satisfies(rows: Sequence[LinearRow], x: Sequence[Fraction]) -> bool:
    """x 가 모든 제약식과 비음 조건을 만족하는지"""
    if any(value < 0 for value in x):
        return False
    return all(
        sum((Fraction(c) * value for c, value in zip(row.coeffs, x)), Fraction(0)) <= row.rhs
        for row in rows
    )


def verify_infeasibility_certificate(rows: Sequence[LinearRow], certificate: Sequence[Fraction]) -> bool:
    """
    Farkas 승수를 대입해 0 <= (음수) 모순이 유도되는지 확인합니다.

    λ >= 0, 모든 변수 j 에 대해 Σ λ_i G_ij >= 0, Σ λ_i h_i < 0 이면
    x >= 0 인 어떤 해도 λ·(G x) <= λ·h 를 만족할 수 없습니다.
    """
    if len(certificate) != len(rows):
        return False
    if any(value < 0 for value in certificate):
        return False
    num_vars = len(rows[0].coeffs) if rows else 0
    for j in range(num_vars):
        if sum((lam * Fraction(row.coeffs[j]) for lam, row in zip(certificate, rows)), Fraction(0)) < 0:
            return False
    return sum((lam * Fraction(row.rhs) for lam, row in zip(certificate, rows)), Fraction(0)) < 0
