"""
domishold 예외 계층

라이브러리 함수는 아래 예외만 발생시키며, CLI(main)에서 종료 코드로 변환합니다.
  - 입력/형식 오류 → 2
  - 예산/상한 초과 → 3
"""


class DomisholdError(Exception):
    """domishold 최상위 예외"""

    exit_code = 2


class GraphInputError(DomisholdError, ValueError):
    """잘못된 그래프 입력 (self-loop, 범위 밖 정점, 중복 간선 등)"""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class DisconnectedGraphError(DomisholdError, ValueError):
    """연결 그래프가 필요한 연산에 비연결 그래프가 입력됨"""


class PatternTooLargeError(DomisholdError, ValueError):
    """유도 부분그래프 탐색 패턴이 상한을 초과함"""


class HypergraphInputError(DomisholdError, ValueError):
    """잘못된 하이퍼그래프 입력 (범위 밖 정점, 허용되지 않는 빈 하이퍼엣지 등)"""


class StructureError(DomisholdError, ValueError):
    """가중치 구조(weighted structure) 불변식 위반"""


class SeparatorBudgetExceeded(DomisholdError):
    """최소 분리집합 열거 예산 초과"""

    exit_code = 3

    def __init__(self, budget, reached):
        super().__init__(f"최소 분리집합 개수가 예산({budget})을 초과했습니다 (현재 {reached}개)")
        self.budget = budget
        self.reached = reached


class CapExceededError(DomisholdError):
    """summability 탐색 / 전수 LP 상한 초과"""

    exit_code = 3

    def __init__(self, what, cap, actual):
        super().__init__(f"{what}: 필수 정점 수 {actual}개가 상한({cap})을 초과했습니다")
        self.cap = cap
        self.actual = actual


class FormatError(DomisholdError):
    """입력 파일 형식 오류"""

    def __init__(self, path, line_no, token, reason):
        super().__init__(f"{path}:{line_no}: '{token}' - {reason}")
        self.path = path
        self.line_no = line_no
        self.token = token
