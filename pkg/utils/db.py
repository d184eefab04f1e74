"""
실행 기록 DB 헬퍼 - 연결 풀 기반
- SQLite 연결 풀링
- 컴포넌트별 이벤트 로그 (run_logs)
- 파이프라인 리포트 / 압축 센싱 실행 결과 저장
"""
import sqlite3
import json
import threading
import queue
from datetime import datetime
from typing import Dict, Any, List, Optional
from contextlib import contextmanager
from config import Config


class ConnectionPool:
    """SQLite 연결 풀 (기본 크기: 파이프라인 워커 수 + 메인 스레드)"""

    def __init__(self, db_file: str, max_connections: Optional[int] = None):
        self.db_file = db_file
        self.max_connections = max_connections or Config.PIPELINE_WORKERS + 1
        self.pool = queue.Queue(maxsize=self.max_connections)
        self.created_connections = 0
        self.lock = threading.Lock()

        conn = self._create_connection()
        self.pool.put(conn)

    def _create_connection(self) -> sqlite3.Connection:
        """새 연결 생성"""
        conn = sqlite3.connect(
            self.db_file,
            check_same_thread=False,  # 파이프라인 워커 스레드 공유
            timeout=30.0
        )
        conn.row_factory = sqlite3.Row
        conn.execute("PRAGMA journal_mode=WAL")
        conn.execute("PRAGMA synchronous=NORMAL")
        self.created_connections += 1
        return conn

    @contextmanager
    def get_connection(self):
        """연결 가져오기 (컨텍스트 매니저)"""
        conn = None
        try:
            try:
                conn = self.pool.get_nowait()
            except queue.Empty:
                with self.lock:
                    if self.created_connections < self.max_connections:
                        conn = self._create_connection()
                if conn is None:
                    conn = self.pool.get(timeout=5.0)

            yield conn

        except Exception:
            if conn:
                conn.rollback()
            raise
        finally:
            if conn:
                try:
                    self.pool.put_nowait(conn)
                except queue.Full:
                    conn.close()
                    self.created_connections -= 1

    def close_all(self):
        """모든 연결 종료"""
        while not self.pool.empty():
            try:
                conn = self.pool.get_nowait()
                conn.close()
                self.created_connections -= 1
            except queue.Empty:
                break


class RunDB:
    """실행 로그 및 결과 저장소"""

    def __init__(self, db_file: Optional[str] = None):
        """
        초기화

        Args:
            db_file: 데이터베이스 파일 경로 (None이면 config에서 가져옴)
        """
        self.db_file = db_file or Config.get_db_file()
        self.connection_pool = ConnectionPool(self.db_file)
        self._setup_tables()

    def get_connection(self):
        """연결 풀에서 연결 가져오기"""
        return self.connection_pool.get_connection()

    def _setup_tables(self) -> None:
        """테이블 생성"""
        with self.get_connection() as conn:
            cursor = conn.cursor()

            cursor.execute('''
            CREATE TABLE IF NOT EXISTS run_logs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                component TEXT NOT NULL,
                timestamp TEXT NOT NULL,
                log_level TEXT NOT NULL,
                message TEXT NOT NULL
            )
            ''')

            cursor.execute('''
            CREATE INDEX IF NOT EXISTS idx_run_logs_component_time
            ON run_logs(component, timestamp)
            ''')

            cursor.execute('''
            CREATE TABLE IF NOT EXISTS pipeline_reports (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                graph_label TEXT NOT NULL,
                timestamp TEXT NOT NULL,
                report_json TEXT NOT NULL,
                processing_time REAL
            )
            ''')

            cursor.execute('''
            CREATE INDEX IF NOT EXISTS idx_pipeline_reports_graph
            ON pipeline_reports(graph_label, timestamp)
            ''')

            cursor.execute('''
            CREATE TABLE IF NOT EXISTS cs_runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                timestamp TEXT NOT NULL,
                parameters TEXT NOT NULL,
                result_table TEXT NOT NULL
            )
            ''')

            conn.commit()

    # =============================================================================
    # 파이프라인 리포트
    # =============================================================================

    def save_pipeline_report(self, graph_label: str, report_json: str,
                             processing_time: float) -> int:
        """파이프라인 리포트 저장"""
        with self.get_connection() as conn:
            cursor = conn.cursor()
            cursor.execute('''
            INSERT INTO pipeline_reports (graph_label, timestamp, report_json, processing_time)
            VALUES (?, ?, ?, ?)
            ''', (graph_label, datetime.now().isoformat(), report_json, processing_time))
            conn.commit()
            return cursor.lastrowid

    def get_latest_pipeline_report(self, graph_label: str) -> Optional[Dict[str, Any]]:
        """그래프 라벨 기준 최신 리포트 조회"""
        with self.get_connection() as conn:
            cursor = conn.cursor()
            cursor.execute('''
            SELECT report_json, processing_time, timestamp
            FROM pipeline_reports
            WHERE graph_label = ?
            ORDER BY id DESC LIMIT 1
            ''', (graph_label,))

            row = cursor.fetchone()
            if row:
                return {
                    'report': json.loads(row['report_json']),
                    'processing_time': row['processing_time'],
                    'timestamp': row['timestamp']
                }
            return None

    # =============================================================================
    # 압축 센싱 실행
    # =============================================================================

    def save_cs_run(self, parameters: Dict[str, Any], records: List[Dict[str, Any]]) -> int:
        """실험 파라미터와 결과 테이블 저장"""
        with self.get_connection() as conn:
            cursor = conn.cursor()
            cursor.execute('''
            INSERT INTO cs_runs (timestamp, parameters, result_table)
            VALUES (?, ?, ?)
            ''', (datetime.now().isoformat(),
                  json.dumps(parameters, default=str),
                  json.dumps(records, default=str)))
            conn.commit()
            return cursor.lastrowid

    def get_recent_logs(self, component: Optional[str] = None, limit: int = 50) -> List[Dict[str, Any]]:
        """최근 로그 조회"""
        with self.get_connection() as conn:
            cursor = conn.cursor()
            if component:
                cursor.execute('''
                SELECT component, timestamp, log_level, message FROM run_logs
                WHERE component = ? ORDER BY id DESC LIMIT ?
                ''', (component, limit))
            else:
                cursor.execute('''
                SELECT component, timestamp, log_level, message FROM run_logs
                ORDER BY id DESC LIMIT ?
                ''', (limit,))
            return [dict(row) for row in cursor.fetchall()]

    def log_event(self, component: str, level: str, message: str) -> None:
        """컴포넌트 이벤트 로깅"""
        try:
            with self.get_connection() as conn:
                cursor = conn.cursor()
                cursor.execute('''
                INSERT INTO run_logs (component, timestamp, log_level, message)
                VALUES (?, ?, ?, ?)
                ''', (component, datetime.now().isoformat(), level, message))
                conn.commit()
        except Exception as e:
            print(f"Failed to log event: {e}")

    def close(self):
        """연결 풀 종료"""
        self.connection_pool.close_all()


# 전역 인스턴스 (싱글톤 패턴)
_run_db_instance = None
_instance_lock = threading.Lock()


def get_run_db() -> RunDB:
    """RunDB 싱글톤 인스턴스 반환"""
    global _run_db_instance
    with _instance_lock:
        if _run_db_instance is None:
            _run_db_instance = RunDB()
    return _run_db_instance


def log_event(component: str, level: str, message: str) -> None:
    """이벤트 로깅 편의 함수 (비활성화 시 무시)"""
    if not Config.is_db_logging_enabled():
        return
    try:
        get_run_db().log_event(component, level, message)
    except Exception as e:
        print(f"Failed to log event: {e}")


def close_db_connections():
    """DB 연결 정리 (프로그램 종료시 호출)"""
    global _run_db_instance
    if _run_db_instance:
        _run_db_instance.close()
        _run_db_instance = None
