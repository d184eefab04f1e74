"""
공용 테스트 픽스처
- DB 로깅 비활성화 (LATTICE_LOG_TO_DB=false)
- DB 파일은 테스트별 임시 경로
"""
import random

import numpy as np
import pytest

from exactq.matrix import RationalMatrix


@pytest.fixture(autouse=True)
def _isolated_db(tmp_path, monkeypatch):
    monkeypatch.setenv("LATTICE_LOG_TO_DB", "false")
    monkeypatch.setenv("LATTICE_DB_FILE", str(tmp_path / "runs.db"))
    yield
    from utils.db import close_db_connections
    close_db_connections()


@pytest.fixture
def db_file(tmp_path, monkeypatch):
    """DB 기록을 켠 상태의 임시 DB 경로"""
    path = tmp_path / "enabled.db"
    monkeypatch.setenv("LATTICE_LOG_TO_DB", "true")
    monkeypatch.setenv("LATTICE_DB_FILE", str(path))
    return str(path)


@pytest.fixture
def rng():
    return random.Random(20190101)


@pytest.fixture
def np_rng():
    return np.random.default_rng(2019)


@pytest.fixture
def a2_gram():
    return RationalMatrix.from_rows([[2, 1], [1, 2]])


@pytest.fixture
def unimodular(rng):
    """rng 기반 n×n 유니모듈러 정수 행렬 생성기 (열 덧셈 + 열 교환)"""
    def make(n):
        u = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(2 * n):
            i, j = rng.sample(range(n), 2)
            k = rng.choice([-1, 1])
            for row in u:
                row[i] += k * row[j]
            if rng.random() < 0.3:
                for row in u:
                    row[i], row[j] = row[j], row[i]
        return RationalMatrix.from_rows(u)
    return make
