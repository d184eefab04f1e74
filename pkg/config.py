"""
설정 관리 모듈 - 격자 툴킷
- 환경 변수 로드
- 열거/식별 탐색 예산 설정
- 프레임 수치 복원 및 궤도 상한 설정
- 압축 센싱 실험 기본값
- 실행 로그 DB 설정
"""
import os
from dotenv import load_dotenv
from typing import Dict, Any

# 환경 변수 로드
load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


class Config:
    """툴킷 설정 관리"""

    # =============================================================================
    # 데이터베이스 / 로깅
    # =============================================================================
    DB_FILE = os.getenv("LATTICE_DB_FILE", "lattice_runs.db")
    LOG_TO_DB = _env_bool("LATTICE_LOG_TO_DB", "true")

    # =============================================================================
    # 격자 열거
    # =============================================================================
    ENUM_SETTINGS = {
        "max_rank": int(os.getenv("ENUM_MAX_RANK", "14")),
        "node_limit": int(os.getenv("ENUM_NODE_LIMIT", "20000000")),
    }

    # =============================================================================
    # 식별 (카탈로그 / 등거리 탐색)
    # =============================================================================
    IDENTIFY_SETTINGS = {
        "catalog_max_rank": int(os.getenv("CATALOG_MAX_RANK", "10")),
        "isometry_max_kissing": int(os.getenv("ISOMETRY_MAX_KISSING", "256")),
        "isometry_node_limit": int(os.getenv("ISOMETRY_NODE_LIMIT", "2000000")),
        "histogram_levels": int(os.getenv("HISTOGRAM_LEVELS", "3")),
        "histogram_radius": int(os.getenv("HISTOGRAM_RADIUS", "2")),  # 최소 노름의 배수
    }

    # 정점 추이성 백트래킹 예산
    TRANSITIVITY_BUDGET = int(os.getenv("TRANSITIVITY_BUDGET", "500000"))

    # =============================================================================
    # 프레임
    # =============================================================================
    FRAME_SETTINGS = {
        "orbit_size_cap": int(os.getenv("ORBIT_SIZE_CAP", "10000")),
        "numeric_max_denominator": int(os.getenv("NUMERIC_MAX_DENOMINATOR", "10000")),
        "numeric_tolerance": float(os.getenv("NUMERIC_TOLERANCE", "1e-9")),
        "discreteness_iterations": int(os.getenv("DISCRETENESS_ITERATIONS", "20")),
        "discreteness_shrink": float(os.getenv("DISCRETENESS_SHRINK", "1e-3")),
    }

    # =============================================================================
    # 압축 센싱 실험
    # =============================================================================
    CS_SETTINGS = {
        "trials": int(os.getenv("CS_TRIALS", "500")),
        "noise": float(os.getenv("CS_NOISE", "0.1")),
        "seed": int(os.getenv("CS_SEED", "2019")),
        "max_amp": int(os.getenv("CS_MAX_AMP", "5")),
        "max_sparsity": int(os.getenv("CS_MAX_SPARSITY", "6")),
        "output_dir": os.getenv("CS_OUTPUT_DIR", "cs_results"),
    }
    STEINER_TOLERANCE = float(os.getenv("STEINER_TOLERANCE", "1e-10"))

    # =============================================================================
    # 파이프라인
    # =============================================================================
    PIPELINE_WORKERS = int(os.getenv("PIPELINE_WORKERS", "4"))
    TABLE2_MAX_N = int(os.getenv("TABLE2_MAX_N", "10"))

    # =============================================================================
    # 검증 및 유틸리티 메서드
    # =============================================================================

    @classmethod
    def validate_config(cls) -> None:
        """설정값 검증"""
        errors = []

        if cls.ENUM_SETTINGS["max_rank"] < 1:
            errors.append("ENUM_MAX_RANK must be at least 1")
        if cls.ENUM_SETTINGS["node_limit"] <= 0:
            errors.append("ENUM_NODE_LIMIT must be positive")

        ident = cls.IDENTIFY_SETTINGS
        if ident["catalog_max_rank"] < 1:
            errors.append("CATALOG_MAX_RANK must be at least 1")
        if ident["isometry_max_kissing"] < 2:
            errors.append("ISOMETRY_MAX_KISSING must be at least 2")
        if ident["histogram_levels"] < 1 or ident["histogram_radius"] < 1:
            errors.append("HISTOGRAM_LEVELS and HISTOGRAM_RADIUS must be at least 1")

        if cls.TRANSITIVITY_BUDGET <= 0:
            errors.append("TRANSITIVITY_BUDGET must be positive")

        frame = cls.FRAME_SETTINGS
        if frame["orbit_size_cap"] < 1:
            errors.append("ORBIT_SIZE_CAP must be at least 1")
        if not (0 < frame["numeric_tolerance"] < 1):
            errors.append("NUMERIC_TOLERANCE must be between 0 and 1")
        if not (0 < frame["discreteness_shrink"] < 1):
            errors.append("DISCRETENESS_SHRINK must be between 0 and 1")

        cs = cls.CS_SETTINGS
        if cs["trials"] < 1:
            errors.append("CS_TRIALS must be at least 1")
        if cs["noise"] < 0:
            errors.append("CS_NOISE must be non-negative")
        if cs["max_amp"] < 1:
            errors.append("CS_MAX_AMP must be at least 1")

        if cls.PIPELINE_WORKERS < 1:
            errors.append("PIPELINE_WORKERS must be at least 1")
        if not (4 <= cls.TABLE2_MAX_N <= 10):
            errors.append("TABLE2_MAX_N must be between 4 and 10")

        if errors:
            raise ValueError("Configuration errors:\n" + "\n".join(f"- {error}" for error in errors))

    @classmethod
    def get_db_file(cls) -> str:
        """실행 로그 DB 파일 경로 반환"""
        return os.getenv("LATTICE_DB_FILE", cls.DB_FILE)

    @classmethod
    def is_db_logging_enabled(cls) -> bool:
        """DB 로깅 활성화 여부"""
        return _env_bool("LATTICE_LOG_TO_DB", "true" if cls.LOG_TO_DB else "false")

    @classmethod
    def get_enum_setting(cls, key: str) -> int:
        return cls.ENUM_SETTINGS[key]

    @classmethod
    def get_identify_setting(cls, key: str) -> int:
        return cls.IDENTIFY_SETTINGS[key]

    @classmethod
    def get_frame_setting(cls, key: str) -> Any:
        return cls.FRAME_SETTINGS[key]

    @classmethod
    def get_cs_settings(cls) -> Dict[str, Any]:
        """압축 센싱 실험 기본값 사본 반환"""
        return dict(cls.CS_SETTINGS)

    @classmethod
    def print_config_summary(cls) -> None:
        """설정 요약 정보 출력"""
        print("\n" + "="*70)
        print("                🔷 LATTICE TOOLKIT CONFIG")
        print("="*70)

        db_status = "✅ Enabled" if cls.is_db_logging_enabled() else "❌ Disabled"
        print(f"Run log: {db_status} ({cls.get_db_file()})")

        print(f"\n🔎 Enumeration:")
        print(f"  Max rank: {cls.ENUM_SETTINGS['max_rank']}")
        print(f"  Node limit: {cls.ENUM_SETTINGS['node_limit']:,}")

        print(f"\n📚 Identification:")
        for key, value in cls.IDENTIFY_SETTINGS.items():
            print(f"  {key}: {value}")
        print(f"  transitivity_budget: {cls.TRANSITIVITY_BUDGET:,}")

        print(f"\n📐 Frames:")
        for key, value in cls.FRAME_SETTINGS.items():
            print(f"  {key}: {value}")

        print(f"\n📡 Compressed sensing:")
        for key, value in cls.CS_SETTINGS.items():
            print(f"  {key}: {value}")

        print("="*70 + "\n")

    @classmethod
    def get_env_template(cls) -> str:
        """.env 파일 템플릿 반환"""
        return """# Run log
LATTICE_DB_FILE=lattice_runs.db
LATTICE_LOG_TO_DB=true

# Enumeration
ENUM_MAX_RANK=14
ENUM_NODE_LIMIT=20000000

# Identification
CATALOG_MAX_RANK=10
ISOMETRY_MAX_KISSING=256
ISOMETRY_NODE_LIMIT=2000000
HISTOGRAM_LEVELS=3
HISTOGRAM_RADIUS=2
TRANSITIVITY_BUDGET=500000

# Frames
ORBIT_SIZE_CAP=10000
NUMERIC_MAX_DENOMINATOR=10000
NUMERIC_TOLERANCE=1e-9
DISCRETENESS_ITERATIONS=20
DISCRETENESS_SHRINK=1e-3

# Compressed sensing
CS_TRIALS=500
CS_NOISE=0.1
CS_SEED=2019
CS_MAX_AMP=5
CS_MAX_SPARSITY=6
CS_OUTPUT_DIR=cs_results
STEINER_TOLERANCE=1e-10

# Pipeline
PIPELINE_WORKERS=4
TABLE2_MAX_N=10
"""


# 설정 검증
try:
    Config.validate_config()
except ValueError as e:
    print(f"❌ Configuration Error: {e}")
    print("\nExample .env file:")
    print(Config.get_env_template())
