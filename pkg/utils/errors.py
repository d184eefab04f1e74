"""
예외 계층 정의
- 모든 툴킷 예외의 공통 부모 클래스
- 입력 검증 오류는 ValueError 도 함께 상속
- 내부 자기검증 실패는 별도 클래스로 구분
"""
from typing import Optional


class LatticeToolkitError(Exception):
    """툴킷 전체 예외의 기본 클래스"""
    pass


# =============================================================================
# 정확 산술 / 그래프
# =============================================================================

class ExactArithmeticError(LatticeToolkitError, ValueError):
    """행렬 모양 불일치, 비정사각, 특이 행렬"""
    pass


class NotPositiveDefiniteError(ExactArithmeticError):
    """양의 정부호가 아닌 Gram 행렬"""
    pass


class GraphError(LatticeToolkitError, ValueError):
    """그래프 파라미터 범위 오류 또는 연결성 조건 위반"""
    pass


class SearchBudgetExceeded(LatticeToolkitError):
    """백트래킹/열거 탐색 예산 소진 (반증과 구분됨)"""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


# =============================================================================
# 스펙트럼 / 격자 / 식별
# =============================================================================

class SpectralError(LatticeToolkitError, ValueError):
    """고유값이 아닌 λ 에 대한 사영 요청"""
    pass


class LatticeError(LatticeToolkitError, ValueError):
    """격자 구성 또는 격자 연산 입력 오류"""
    pass


class CatalogError(LatticeToolkitError, ValueError):
    """카탈로그 이름/파라미터 오류"""
    pass


# =============================================================================
# 프레임 / 설계 / CLI
# =============================================================================

class FrameError(LatticeToolkitError, ValueError):
    """프레임 입력 또는 분석 오류"""
    pass


class NumericReconstructionError(FrameError):
    """수치 입력에서 유리수 복원 실패"""
    pass


class DesignError(LatticeToolkitError, ValueError):
    """Steiner 삼중계 합동 조건 또는 Hadamard 차수 오류"""
    pass


class DSLParseError(LatticeToolkitError, ValueError):
    """그래프 생성자 DSL 파싱 오류"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ReportError(LatticeToolkitError, ValueError):
    """Gram/프레임 파일 형식 또는 테이블 범위 오류"""
    pass


class InternalConsistencyError(LatticeToolkitError):
    """내부 자기검증 실패 - 버그 신호"""
    pass
