"""
테이블 재현 결과 기록 모듈
- 테이블 실행별 행 결과 저장 (기대값 / 관측값 / 상태)
- 최근 실행 조회 및 요약 출력
"""
import sqlite3
from datetime import datetime
from typing import Any, Dict, List, Optional

from config import Config


class ReportRecorder:
    """테이블 재현 결과 관리"""

    def __init__(self, db_file: Optional[str] = None):
        """
        초기화

        Args:
            db_file: 데이터베이스 파일 경로 (None이면 config에서 가져옴)
        """
        self.db_file = db_file or Config.get_db_file()
        self.setup_database()

    def setup_database(self) -> None:
        """필요한 테이블 생성"""
        conn = sqlite3.connect(self.db_file)
        cursor = conn.cursor()

        cursor.execute('''
        CREATE TABLE IF NOT EXISTS table_runs (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            table_name TEXT NOT NULL,
            timestamp TEXT NOT NULL,
            total_rows INTEGER NOT NULL,
            failed_rows INTEGER NOT NULL,
            processing_time REAL
        )
        ''')

        cursor.execute('''
        CREATE TABLE IF NOT EXISTS table_rows (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            run_id INTEGER NOT NULL,
            row_key TEXT NOT NULL,
            expected TEXT NOT NULL,
            observed TEXT NOT NULL,
            status TEXT NOT NULL,
            FOREIGN KEY (run_id) REFERENCES table_runs (id)
        )
        ''')

        conn.commit()
        conn.close()

    def save_table_run(self, table_name: str, rows: List[Dict[str, Any]],
                       processing_time: float = 0.0) -> int:
        """
        테이블 실행 결과 저장

        Args:
            table_name: "table1" / "table2"
            rows: key, expected, observed, status 를 가진 행 목록
            processing_time: 전체 소요 시간(초)

        Returns:
            생성된 실행 기록의 ID
        """
        conn = sqlite3.connect(self.db_file)
        cursor = conn.cursor()

        failed = sum(1 for r in rows if r.get('status') == 'FAIL')
        cursor.execute('''
        INSERT INTO table_runs (table_name, timestamp, total_rows, failed_rows, processing_time)
        VALUES (?, ?, ?, ?, ?)
        ''', (table_name, datetime.now().isoformat(), len(rows), failed, processing_time))
        run_id = cursor.lastrowid

        cursor.executemany('''
        INSERT INTO table_rows (run_id, row_key, expected, observed, status)
        VALUES (?, ?, ?, ?, ?)
        ''', [(run_id, r.get('key', ''), r.get('expected', ''), r.get('observed', ''), r.get('status', ''))
              for r in rows])

        conn.commit()
        conn.close()
        return run_id

    def get_run_rows(self, run_id: int) -> List[Dict[str, Any]]:
        """실행 ID 의 행 결과 조회"""
        conn = sqlite3.connect(self.db_file)
        conn.row_factory = sqlite3.Row
        cursor = conn.cursor()
        cursor.execute('''
        SELECT row_key, expected, observed, status FROM table_rows
        WHERE run_id = ? ORDER BY id
        ''', (run_id,))
        rows = [dict(row) for row in cursor.fetchall()]
        conn.close()
        return rows

    def get_recent_runs(self, table_name: Optional[str] = None, limit: int = 5) -> List[Dict[str, Any]]:
        """최근 테이블 실행 목록"""
        conn = sqlite3.connect(self.db_file)
        conn.row_factory = sqlite3.Row
        cursor = conn.cursor()
        if table_name:
            cursor.execute('''
            SELECT * FROM table_runs WHERE table_name = ? ORDER BY id DESC LIMIT ?
            ''', (table_name, limit))
        else:
            cursor.execute('SELECT * FROM table_runs ORDER BY id DESC LIMIT ?', (limit,))
        runs = [dict(row) for row in cursor.fetchall()]
        conn.close()
        return runs

    def print_run_summary(self, table_name: Optional[str] = None, limit: int = 5) -> None:
        """최근 실행 요약 출력"""
        runs = self.get_recent_runs(table_name, limit)
        if not runs:
            print(f"No table runs recorded{f' for {table_name}' if table_name else ''}")
            return

        print(f"\n=== Recent Table Runs ===")
        for run in runs:
            status = "✅" if run['failed_rows'] == 0 else "❌"
            print(f"{status} #{run['id']} {run['table_name']} @ {run['timestamp'][:19]} | "
                  f"{run['total_rows'] - run['failed_rows']}/{run['total_rows']} rows | "
                  f"{run['processing_time'] or 0:.1f}s")
        print("=========================")
