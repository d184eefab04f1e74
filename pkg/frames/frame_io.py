"""
프레임 CSV 입출력 (pandas)
- 첫 줄 "# scale_sq: p/q", 이후 행 = 좌표, 열 = 프레임 벡터
- 정확 형식은 "p/q" 문자열, 수치 형식은 소수 (복원 정밀도 지정)
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd

from exactq.matrix import RationalMatrix
from frames.frame import Frame, frame_from_numeric
from utils.errors import FrameError

_SCALE_PREFIX = "# scale_sq:"


def write_frame_csv(f: Frame, path: Union[str, Path]) -> None:
    df = pd.DataFrame([[str(x) for x in row] for row in f.vectors])
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"{_SCALE_PREFIX} {f.scale_sq}\n")
        df.to_csv(fh, header=False, index=False)


def _read_scale(path: Path) -> Fraction:
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().strip()
    if not first.startswith(_SCALE_PREFIX):
        return Fraction(1)
    try:
        return Fraction(first[len(_SCALE_PREFIX):].strip())
    except (ValueError, ZeroDivisionError) as e:
        raise FrameError(f"{path}: invalid scale_sq line {first!r}") from e


def read_frame_csv(path: Union[str, Path], numeric: bool = False,
                   max_denominator: Optional[int] = None) -> Frame:
    """
    프레임 CSV 읽기

    Args:
        path: 파일 경로
        numeric: True 면 소수 행렬로 읽고 유리 복원 시도
        max_denominator: 수치 복원 분모 상한

    Raises:
        FrameError: 형식 오류 (NumericReconstructionError 포함)
    """
    path = Path(path)
    if not path.exists():
        raise FrameError(f"frame file not found: {path}")
    try:
        df = pd.read_csv(path, comment="#", header=None, dtype=str, skipinitialspace=True)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise FrameError(f"{path}: malformed frame CSV ({e})") from e
    if df.isnull().values.any():
        raise FrameError(f"{path}: missing entries")

    if numeric:
        try:
            values = df.astype(float).to_numpy()
        except ValueError as e:
            raise FrameError(f"{path}: non-numeric entry ({e})") from e
        return frame_from_numeric(values, max_denominator=max_denominator, label=path.stem)

    try:
        rows = [[Fraction(x.strip()) for x in row] for row in df.itertuples(index=False)]
    except (ValueError, ZeroDivisionError) as e:
        raise FrameError(f"{path}: invalid rational entry ({e})") from e
    return Frame(RationalMatrix.from_rows(rows), _read_scale(path), path.stem)


def write_numeric_frame_csv(f: Frame, path: Union[str, Path], digits: int = 12) -> None:
    """실제 프레임 벡터를 소수로 기록"""
    np.savetxt(path, f.to_numpy(), delimiter=",", fmt=f"%.{digits}f")
