"""
斐波那契模块 - 斐波那契数、下标识别、Zeckendorf 表示和斐波那契词
约定 F₁ = F₂ = 1，F₃ = 2
"""
import logging
import threading
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import config

logger = logging.getLogger(__name__)

# 斐波那契数缓存，_FIBS[m] = F_m（_FIBS[0] = F₀ = 0）
_FIBS: List[int] = [0, 1, 1]
_FIBS_LOCK = threading.Lock()

# 态射 μ: 0 ↦ 01, 1 ↦ 0
MORPHISM = {'0': '01', '1': '0'}
_MORPHISM_TABLE = str.maketrans(MORPHISM)


def _extend_fibs(m: int):
    with _FIBS_LOCK:
        while len(_FIBS) <= m:
            _FIBS.append(_FIBS[-1] + _FIBS[-2])


def fib(m: int) -> int:
    """
    第 m 个斐波那契数

    Args:
        m: 下标，m ≥ 1

    Returns:
        F_m
    """
    if m < 1:
        raise ValueError(f"斐波那契下标必须 ≥ 1: {m}")
    if m >= len(_FIBS):
        _extend_fibs(m)
    return _FIBS[m]


@dataclass(frozen=True)
class FibIndex:
    """斐波那契数及其下标"""
    value: int
    index: int

    @property
    def parity(self) -> str:
        return 'even' if self.index % 2 == 0 else 'odd'


def fib_index_of(x: int) -> Optional[FibIndex]:
    """
    判断 x 是否为斐波那契数

    Returns:
        FibIndex；x = 1 时下标取 2；不是斐波那契数时返回 None
    """
    if x < 1:
        raise ValueError(f"x 必须为正整数: {x}")
    m = 2
    while fib(m) < x:
        m += 1
    return FibIndex(value=x, index=m) if fib(m) == x else None


def fibs_up_to(limit: int) -> List[Tuple[int, int]]:
    """所有不超过 limit 的 (m, F_m)，m ≥ 2"""
    result = []
    m = 2
    while fib(m) <= limit:
        result.append((m, fib(m)))
        m += 1
    return result


def zeckendorf(n: int) -> List[int]:
    """
    Zeckendorf 表示（贪心）

    Returns:
        严格递减、两两不相邻的下标 m_i ≥ 2，Σ F_{m_i} = n；n = 0 时为空
    """
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    indices = []
    for m, f in reversed(fibs_up_to(n)):
        if f <= n:
            indices.append(m)
            n -= f
    return indices


def from_zeckendorf(indices: List[int]) -> int:
    """将 Zeckendorf 下标还原为整数"""
    return sum(fib(m) for m in indices)


@dataclass(frozen=True)
class BinaryWord:
    """{0,1} 上的有限词"""
    symbols: str

    def __post_init__(self):
        if self.symbols.strip('01'):
            raise ValueError("BinaryWord 只能包含 0 和 1")

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols

    def count(self, symbol: str) -> int:
        return self.symbols.count(symbol)

    def endswith(self, suffix: str) -> bool:
        return self.symbols.endswith(suffix)


def morphism_iterate(m: int) -> BinaryWord:
    """
    μ^m(0)

    Args:
        m: 迭代次数，0 ≤ m ≤ MORPHISM_MAX_ITER

    Returns:
        μ^m(0)，μ⁰(0) = "0"。在 F₁ = F₂ = 1 的约定下
        |μ^m(0)| = F_{m+2}，其中 0 有 F_{m+1} 个，1 有 F_m 个
    """
    if m < 0:
        raise ValueError(f"迭代次数必须非负: {m}")
    if m > config.MORPHISM_MAX_ITER:
        raise ValueError(f"迭代次数 {m} 超过上限 MORPHISM_MAX_ITER={config.MORPHISM_MAX_ITER}")
    word = '0'
    for _ in range(m):
        word = word.translate(_MORPHISM_TABLE)
    return BinaryWord(word)


def fibonacci_word() -> Iterator[str]:
    """
    无限斐波那契词 0100101001001...（μ 的不动点）逐个符号产出

    利用 w = μ(w)：先产出 μ(0) = 01，再从自身第二个符号起逐个展开。
    嵌套生成器深度随位置对数增长。
    """
    yield '0'
    yield '1'
    inner = fibonacci_word()
    next(inner)
    for symbol in inner:
        yield from MORPHISM[symbol]


def symbol_positions(symbol: str) -> Iterator[int]:
    """斐波那契词中 symbol 出现的位置（从 1 开始）"""
    for position, s in enumerate(fibonacci_word(), start=1):
        if s == symbol:
            yield position


def _position_of_mth(symbol: str, m: int) -> int:
    if m < 1:
        raise ValueError(f"m 必须 ≥ 1: {m}")
    for count, position in enumerate(symbol_positions(symbol), start=1):
        if count == m:
            return position
    raise AssertionError("unreachable")


def position_of_mth_zero(m: int) -> int:
    """第 m 个 0 在无限斐波那契词中的位置，等于 L(m)"""
    return _position_of_mth('0', m)


def position_of_mth_one(m: int) -> int:
    """第 m 个 1 在无限斐波那契词中的位置，等于 U(m)"""
    return _position_of_mth('1', m)


def wythoff_at_fib(k: int) -> Tuple[int, int, int, int]:
    """
    斐波那契数处的 Wythoff 值（闭式）

    Returns:
        (L(F₂ₖ), U(F₂ₖ), L(F₂ₖ₋₁), U(F₂ₖ₋₁))
        = (F₂ₖ₊₁ - 1, F₂ₖ₊₂ - 1, F₂ₖ, F₂ₖ₊₁)
    """
    if k < 1:
        raise ValueError(f"k 必须 ≥ 1: {k}")
    return fib(2 * k + 1) - 1, fib(2 * k + 2) - 1, fib(2 * k), fib(2 * k + 1)
