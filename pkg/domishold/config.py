#!/usr/bin/env python3
"""
환경 설정 관리 모듈
.env 파일에서 환경변수를 로드하고 관리합니다.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# 프로젝트 루트 디렉토리
PROJECT_ROOT = Path(__file__).parent.parent

# .env 파일 로드
load_dotenv(PROJECT_ROOT / '.env')


class Config:
    """환경 설정 클래스"""

    # 분리집합(separator) 열거 예산
    SEPARATOR_BUDGET = int(os.getenv('SEPARATOR_BUDGET', '1000000'))

    # 유도 부분그래프 탐색 시 패턴 정점 수 상한
    FIND_INDUCED_CAP = int(os.getenv('FIND_INDUCED_CAP', '12'))

    # summability 탐색 시 필수 정점(essential vertex) 수 상한
    SUMMABILITY_CAP_2 = int(os.getenv('SUMMABILITY_CAP_2', '20'))
    SUMMABILITY_CAP_3 = int(os.getenv('SUMMABILITY_CAP_3', '12'))

    # 전수 LP(oracle) 필수 정점 수 상한
    BRUTE_FORCE_CAP = int(os.getenv('BRUTE_FORCE_CAP', '14'))

    # 로깅 설정
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')

    # 시나리오 결과 저장 디렉토리
    SCENARIO_OUTPUT_DIR = os.getenv('SCENARIO_OUTPUT_DIR', 'scenario_results')

    @classmethod
    def get_summability_cap(cls, k):
        """k 값에 해당하는 summability 상한 반환"""
        return cls.SUMMABILITY_CAP_2 if k == 2 else cls.SUMMABILITY_CAP_3

    @classmethod
    def get_scenario_output_path(cls, file_name):
        """시나리오 결과 파일 전체 경로 반환"""
        return Path(cls.SCENARIO_OUTPUT_DIR) / file_name

    @classmethod
    def validate(cls):
        """수치 설정값 검증 (모두 양의 정수여야 함)"""
        numeric = {
            'SEPARATOR_BUDGET': cls.SEPARATOR_BUDGET,
            'FIND_INDUCED_CAP': cls.FIND_INDUCED_CAP,
            'SUMMABILITY_CAP_2': cls.SUMMABILITY_CAP_2,
            'SUMMABILITY_CAP_3': cls.SUMMABILITY_CAP_3,
            'BRUTE_FORCE_CAP': cls.BRUTE_FORCE_CAP,
        }

        invalid = [key for key, value in numeric.items() if value <= 0]

        if invalid:
            raise ValueError(f"양의 정수가 아닌 설정값이 있습니다: {', '.join(invalid)}")

        return True


# 설정 인스턴스 (싱글톤)
config = Config()


if __name__ == "__main__":
    # 설정 테스트
    print("=== 환경 설정 ===")
    print(f"Separator Budget: {config.SEPARATOR_BUDGET}")
    print(f"Find Induced Cap: {config.FIND_INDUCED_CAP}")
    print(f"Summability Cap (k=2/k=3): {config.SUMMABILITY_CAP_2}/{config.SUMMABILITY_CAP_3}")
    print(f"Brute Force Cap: {config.BRUTE_FORCE_CAP}")
    print(f"Log Level: {config.LOG_LEVEL}")
    print(f"\n시나리오 요약 경로 (예시): {config.get_scenario_output_path('scenario_summary.csv')}")

    try:
        config.validate()
        print("\n✓ 설정값이 모두 유효합니다.")
    except ValueError as e:
        print(f"\n✗ {e}")
