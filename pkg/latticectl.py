"""
latticectl - 그래프 고유공간/타이트 프레임 격자 도구
- 하위 명령 실행 및 종료 코드 결정
- 툴킷 예외는 한 줄 메시지 + 종료 코드 2
- 종료 시 DB 연결 정리
"""
import sys
from typing import List, Optional

# 프로젝트 모듈 임포트
from cli.commands import parse_args
from utils.db import close_db_connections, log_event
from utils.errors import InternalConsistencyError, LatticeToolkitError


def main(argv: Optional[List[str]] = None) -> int:
    """메인 함수 (종료 코드 반환)"""
    args = parse_args(argv)
    try:
        return args.func(args)
    except KeyboardInterrupt:
        print("\n👋 중단됨", file=sys.stderr)
        return 130
    except InternalConsistencyError as e:
        log_event("cli", "CRITICAL", f"{args.command}: self-check failed: {e}")
        print(f"💥 internal consistency check failed: {e}", file=sys.stderr)
        return 2
    except LatticeToolkitError as e:
        log_event("cli", "ERROR", f"{args.command}: {type(e).__name__}: {e}")
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    finally:
        # 최종 정리
        try:
            close_db_connections()
        except Exception as e:
            print(f"⚠️  정리 작업 경고: {e}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
