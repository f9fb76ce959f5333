"""
序列模块 - 慢 Beatty 序列与 Hofstadter 型序列的递推定义与闭式
递推序列使用从 0 开始连续的备忘表；闭式全部走 exactnum 的精确取整
"""
import enum
import logging
import threading
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from exactnum import (
    GOLDEN_GAMMA,
    HALF_SQRT2,
    PELL_LOWER_RATIO,
    PELL_UPPER_RATIO,
    PHI,
    PHI_SQUARED,
    QuadraticSurd,
    beatty_inverse,
    floor_scale,
    metallic_gamma,
    slow_beatty,
)

logger = logging.getLogger(__name__)


class SequenceInvariantError(RuntimeError):
    """内部不变量被破坏：递推参数越界、平均值不是整数等"""


# ==================== 序列目录 ====================

class SequenceName(str, enum.Enum):
    G_rec = 'G_rec'
    G_closed = 'G_closed'
    L = 'L'
    U = 'U'
    W_swap = 'W_swap'
    W_avg = 'W_avg'
    f_greedy = 'f_greedy'
    z_greedy = 'z_greedy'
    m_avg = 'm_avg'
    married_a = 'married_a'
    married_b = 'married_b'
    H_k = 'H_k'
    H_pell = 'H_pell'
    R_slow = 'R_slow'
    L_pell = 'L_pell'
    U_pell = 'U_pell'
    W_pell_swap = 'W_pell_swap'
    cloitre = 'cloitre'
    v_rec = 'v_rec'
    # 仅用于 A090908 / A090909 的重构比对
    G_flat = 'G_flat'
    G_distinct = 'G_distinct'


@dataclass(frozen=True)
class SequenceInfo:
    oeis: Optional[str]
    start: int
    aliases: Tuple[str, ...]
    description: str


CATALOG: Dict[SequenceName, SequenceInfo] = {
    SequenceName.G_rec: SequenceInfo('A005206', 0, ('G_rec',), 'Hofstadter G，递推 G(n)=n-G(G(n-1))'),
    SequenceName.G_closed: SequenceInfo('A005206', 0, ('G',), 'Hofstadter G，闭式 ⌊(n+1)γ⌋'),
    SequenceName.L: SequenceInfo('A000201', 1, ('L',), '下 Wythoff 序列 ⌊nφ⌋'),
    SequenceName.U: SequenceInfo('A001950', 1, ('U',), '上 Wythoff 序列 ⌊nφ²⌋'),
    SequenceName.W_swap: SequenceInfo('A002251', 0, ('W',), 'Wythoff 交换序列'),
    SequenceName.W_avg: SequenceInfo('A073869', 0, ('Wbar',), '交换序列的前缀平均'),
    SequenceName.f_greedy: SequenceInfo('A019444', 1, ('f',), 'Venkatachala 贪心序列'),
    SequenceName.z_greedy: SequenceInfo(None, 1, ('z',), 'Avdivpahić–Zejnulahi 贪心序列'),
    SequenceName.m_avg: SequenceInfo(None, 1, ('m',), 'm(n)=(z(2)+…+z(n))/(n+1)'),
    SequenceName.married_a: SequenceInfo('A005378', 0, ('a',), 'Hofstadter married a(n)=n-b(a(n-1))'),
    SequenceName.married_b: SequenceInfo('A005379', 0, ('b',), 'Hofstadter married b(n)=n-a(b(n-1))'),
    SequenceName.H_k: SequenceInfo(None, 0, ('Hk',), 'Celaya–Ruskey 递推（参数 k）'),
    SequenceName.H_pell: SequenceInfo('A097508', 0, ('Hpell',), 'Hofstadter–Pell 序列'),
    SequenceName.R_slow: SequenceInfo('A049472', 0, ('R',), '慢 Beatty 序列 ⌊n/√2⌋'),
    SequenceName.L_pell: SequenceInfo('A003151', 1, ('Lpell',), '⌊n(1+√2)⌋'),
    SequenceName.U_pell: SequenceInfo('A003152', 1, ('Upell',), '⌊n(1+½√2)⌋'),
    SequenceName.W_pell_swap: SequenceInfo('A109250', 1, ('Wpell',), 'Pell Beatty 对的交换序列'),
    SequenceName.cloitre: SequenceInfo('A138466', 1, ('cloitre',), 'a(n)=n-⌊a(a(n-1))/2⌋'),
    SequenceName.v_rec: SequenceInfo('A063882', 1, ('V',), 'V(n)=V(n-V(n-1))+V(n-V(n-4))'),
    SequenceName.G_flat: SequenceInfo('A090908', 1, ('Gflat',), 'G(k) 满足 G(k)=G(k+1) 的项（重构）'),
    SequenceName.G_distinct: SequenceInfo('A090909', 1, ('Gdistinct',), 'G(k-1),G(k),G(k+1) 互不相同时的 G(k)（重构）'),
}

# H_k 的 OEIS 编号随 k 变化
_H_K_OEIS = {1: 'A005206', 2: 'A097508'}


@dataclass(frozen=True)
class SequenceId:
    """序列标识：名称 + 参数 k（仅 H_k 需要）"""
    name: SequenceName
    k: Optional[int] = None

    def __post_init__(self):
        if self.name is SequenceName.H_k:
            if self.k is None or self.k < 1:
                raise ValueError("H_k 需要参数 k ≥ 1")
        elif self.k is not None:
            raise ValueError(f"{self.name.value} 不接受参数 k")

    @property
    def oeis(self) -> Optional[str]:
        if self.name is SequenceName.H_k:
            return _H_K_OEIS.get(self.k)
        return CATALOG[self.name].oeis

    @property
    def start(self) -> int:
        return CATALOG[self.name].start

    def __str__(self) -> str:
        if self.k is not None:
            return f"{self.name.value}(k={self.k})"
        return self.name.value


_ALIASES: Dict[str, SequenceName] = {}
for _name, _info in CATALOG.items():
    _ALIASES[_name.value] = _name
    for _alias in _info.aliases:
        _ALIASES[_alias] = _name


def parse_sequence_id(text: str, k: Optional[int] = None) -> SequenceId:
    """
    解析命令行里的序列名（支持别名 G、W、Hk 等）

    Raises:
        ValueError: 未知序列或参数 k 不匹配
    """
    name = _ALIASES.get(text.strip())
    if name is None:
        raise ValueError(f"未知序列: {text}")
    return SequenceId(name, k)


def known_sequence_names() -> List[str]:
    return sorted(_ALIASES)


# ==================== 备忘表与递推序列 ====================

class MemoTable:
    """从下标 0 开始连续的备忘表"""

    def __init__(self, initial: Iterable[int] = ()):
        self._values: List[int] = list(initial)

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, index: int) -> bool:
        return 0 <= index < len(self._values)

    def __getitem__(self, index: int) -> int:
        if index not in self:
            raise IndexError(f"备忘表中没有下标 {index}（当前长度 {len(self._values)}）")
        return self._values[index]

    def append(self, value: int):
        self._values.append(value)


class RecursiveSequence:
    """
    带备忘表的递推序列基类

    单个下标的查询会把备忘表填到该下标为止；实例内部加锁，
    共享同一实例的调用方得到一致的结果。
    """

    first_index = 0

    def __init__(self, initial: Iterable[int]):
        self.memo = MemoTable(initial)
        self._lock = threading.Lock()

    def _next(self, n: int) -> int:
        raise NotImplementedError

    def _at(self, i: int, n: int) -> int:
        """递推中读取 memo[i]，要求 first_index ≤ i < n"""
        if not self.first_index <= i < n:
            raise SequenceInvariantError(
                f"{type(self).__name__}: 计算第 {n} 项时引用了越界下标 {i}")
        return self.memo[i]

    def ensure(self, n: int):
        if n < len(self.memo):
            return
        with self._lock:
            for i in range(len(self.memo), n + 1):
                self.memo.append(self._next(i))

    def __getitem__(self, n: int) -> int:
        if n < self.first_index:
            raise ValueError(f"{type(self).__name__} 从下标 {self.first_index} 开始: {n}")
        self.ensure(n)
        return self.memo[n]

    def values(self, lo: int, hi: int) -> Iterator[Tuple[int, int]]:
        for n in range(max(lo, self.first_index), hi + 1):
            yield n, self[n]


class HofstadterG(RecursiveSequence):
    """G(0)=0, G(1)=1, G(n)=n-G(G(n-1))"""

    def __init__(self):
        super().__init__([0, 1])

    def _next(self, n: int) -> int:
        return n - self._at(self._at(n - 1, n), n)


class CelayaRuskeyH(RecursiveSequence):
    """
    H(n) = 0（n < k）；H(n) = n-k+1 - Σ_{i=1}^{k-1} H(n-i) - H(H(n-k))

    k = 1 即 Hofstadter G，k = 2 为 Hofstadter–Pell。
    """

    def __init__(self, k: int):
        if k < 1:
            raise ValueError(f"k 必须 ≥ 1: {k}")
        self.k = k
        super().__init__([0] * k)

    def _next(self, n: int) -> int:
        k = self.k
        window = sum(self.memo[n - i] for i in range(1, k))
        return n - k + 1 - window - self._at(self._at(n - k, n), n)


class CloitreSequence(RecursiveSequence):
    """a(1)=1, a(n)=n-⌊a(a(n-1))/2⌋（A138466）"""

    first_index = 1

    def __init__(self):
        # 下标 0 为占位
        super().__init__([0, 1])

    def _next(self, n: int) -> int:
        return n - self._at(self._at(n - 1, n), n) // 2


class HofstadterV(RecursiveSequence):
    """V(1..4)=1, V(n)=V(n-V(n-1))+V(n-V(n-4))（A063882）"""

    first_index = 1

    def __init__(self):
        super().__init__([0, 1, 1, 1, 1])

    def _next(self, n: int) -> int:
        return (self._at(n - self._at(n - 1, n), n)
                + self._at(n - self._at(n - 4, n), n))


class MarriedFunctions:
    """
    Hofstadter 的 married 函数
    a(0)=1, b(0)=0；a(n)=n-b(a(n-1))，b(n)=n-a(b(n-1))
    """

    def __init__(self):
        self.a_memo = MemoTable([1])
        self.b_memo = MemoTable([0])
        self._lock = threading.Lock()

    def _read(self, table: MemoTable, i: int, n: int) -> int:
        if i not in table:
            raise SequenceInvariantError(f"married: 计算第 {n} 项时引用了未计算的下标 {i}")
        return table[i]

    def ensure(self, n: int):
        if n < len(self.a_memo):
            return
        with self._lock:
            for i in range(len(self.a_memo), n + 1):
                # b(i) 只依赖 i-1 之前的值；a(i) 在 i = 1 时需要 b(1)
                b_i = i - self._read(self.a_memo, self._read(self.b_memo, i - 1, i), i)
                self.b_memo.append(b_i)
                a_i = i - self._read(self.b_memo, self._read(self.a_memo, i - 1, i), i)
                self.a_memo.append(a_i)

    def a(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"n 必须非负: {n}")
        self.ensure(n)
        return self.a_memo[n]

    def b(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"n 必须非负: {n}")
        self.ensure(n)
        return self.b_memo[n]


class GreedyPermutation:
    """
    贪心序列：第 n 项取最小的未用自然数 x，
    使前缀和 ≡ residue (mod n + modulus_shift)

    候选值为 r, r+模, r+2·模, ...，跳过已用值。
    """

    def __init__(self, modulus_shift: int, residue: int):
        self.modulus_shift = modulus_shift
        self.residue = residue
        self.terms: List[int] = [0]      # 下标 0 占位
        self.prefix: List[int] = [0]
        self.used = set()
        self._lock = threading.Lock()

    def ensure(self, n: int):
        if n < len(self.terms):
            return
        with self._lock:
            for i in range(len(self.terms), n + 1):
                modulus = i + self.modulus_shift
                r = (self.residue - self.prefix[-1]) % modulus
                candidate = r if r > 0 else modulus
                while candidate in self.used:
                    candidate += modulus
                self.used.add(candidate)
                self.terms.append(candidate)
                self.prefix.append(self.prefix[-1] + candidate)

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"贪心序列从下标 1 开始: {n}")
        self.ensure(n)
        return self.terms[n]

    def prefix_sum(self, n: int) -> int:
        self.ensure(n)
        return self.prefix[n]


class VenkatachalaF(GreedyPermutation):
    """f(1)+…+f(n) 被 n 整除"""

    def __init__(self):
        super().__init__(modulus_shift=0, residue=0)


class AvdivpahicZejnulahiZ(GreedyPermutation):
    """z(1)+…+z(n) ≡ 1 (mod n+1)，并给出 m(n)"""

    def __init__(self):
        super().__init__(modulus_shift=1, residue=1)

    def m(self, n: int) -> int:
        """m(n) = (z(2)+…+z(n))/(n+1)，m(1) = 0（空和）"""
        if n < 1:
            raise ValueError(f"m 从下标 1 开始: {n}")
        total = self.prefix_sum(n) - self.terms[1]
        quotient, remainder = divmod(total, n + 1)
        if remainder:
            raise SequenceInvariantError(f"m({n}) 不是整数: {total}/{n + 1}")
        return quotient


# 模块级共享实例（实例内部加锁）
_SHARED: Dict[object, object] = {}
_SHARED_LOCK = threading.Lock()


def _shared(key, factory: Callable[[], object]):
    with _SHARED_LOCK:
        instance = _SHARED.get(key)
        if instance is None:
            instance = _SHARED[key] = factory()
    return instance


# ==================== Hofstadter G 与 Wythoff ====================

def hof_g_rec(n: int) -> int:
    """G(n)，递推定义"""
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    return _shared('G', HofstadterG)[n]


def hof_g_closed(n: int) -> int:
    """G(n) = ⌊(n+1)γ⌋，γ = (√5-1)/2"""
    return slow_beatty(GOLDEN_GAMMA, n)


def wythoff_lower(n: int) -> int:
    """L(n) = ⌊nφ⌋"""
    if n < 1:
        raise ValueError(f"Wythoff 序列从 1 开始: {n}")
    return floor_scale(PHI, n)


def wythoff_upper(n: int) -> int:
    """U(n) = ⌊nφ²⌋ = L(n) + n"""
    if n < 1:
        raise ValueError(f"Wythoff 序列从 1 开始: {n}")
    return floor_scale(PHI_SQUARED, n)


def slow_beatty_swap(s: Callable[[int], int], alpha: QuadraticSurd, beta: QuadraticSurd, n: int) -> int:
    """
    由慢 Beatty 序列的增量求交换序列的值

    s(n) = s(n-1)+1 时 n = ⌊Mα⌋，M = s(n)，返回 ⌊Mβ⌋；
    s(n) = s(n-1) 时 n = ⌊Mβ⌋，M = n - s(n)，返回 ⌊Mα⌋。
    """
    current, previous = s(n), s(n - 1)
    if current == previous + 1:
        return floor_scale(beta, current)
    if current == previous:
        return floor_scale(alpha, n - current)
    raise SequenceInvariantError(f"慢 Beatty 序列在 {n} 处的增量不是 0 或 1: {previous} → {current}")


def beatty_swap(alpha: QuadraticSurd, beta: QuadraticSurd, n: int,
                alpha_inverse: Optional[QuadraticSurd] = None,
                beta_inverse: Optional[QuadraticSurd] = None) -> int:
    """在互补 Beatty 对中查找 n 的伙伴：n = ⌊Mα⌋ ↦ ⌊Mβ⌋，n = ⌊Mβ⌋ ↦ ⌊Mα⌋"""
    m = beatty_inverse(alpha, n, alpha_inverse)
    if m is not None:
        return floor_scale(beta, m)
    m = beatty_inverse(beta, n, beta_inverse)
    if m is not None:
        return floor_scale(alpha, m)
    raise SequenceInvariantError(f"{n} 不在 Beatty 对 ({alpha}, {beta}) 的任何一边")


_PHI_INVERSE = PHI.reciprocal()
_PHI_SQUARED_INVERSE = PHI_SQUARED.reciprocal()


def wythoff_swap(n: int) -> int:
    """
    W(n)（A002251，W(0)=0）

    G(n) = G(n-1) 时 W(n) = G(n)，否则 W(n) = G(n) + n。
    """
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    if n == 0:
        return 0
    g, previous = hof_g_closed(n), hof_g_closed(n - 1)
    if g == previous:
        return g
    if g == previous + 1:
        return g + n
    raise SequenceInvariantError(f"G 在 {n} 处的增量不是 0 或 1")


def wythoff_swap_by_partner(n: int) -> int:
    """W(n)，直接交换 L(M) 与 U(M)"""
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    if n == 0:
        return 0
    return beatty_swap(PHI, PHI_SQUARED, n, _PHI_INVERSE, _PHI_SQUARED_INVERSE)


def swap_averages(swap: Callable[[int], int], hi: int) -> Iterator[Tuple[int, int]]:
    """
    逐项产出 (n, W̄(n))，W̄(n) = Σ_{i=0}^{n} W(i)/(n+1)

    Raises:
        SequenceInvariantError: 前缀和不能被 n+1 整除
    """
    total = 0
    for n in range(hi + 1):
        total += swap(n)
        quotient, remainder = divmod(total, n + 1)
        if remainder:
            raise SequenceInvariantError(f"W 的前 {n + 1} 项之和 {total} 不能被 {n + 1} 整除")
        yield n, quotient


def wythoff_swap_avg(n: int) -> int:
    """W̄(n)（A073869）"""
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    value = 0
    for _, value in swap_averages(wythoff_swap, n):
        pass
    return value


# ==================== 贪心序列与 married 函数 ====================

def greedy_f(n: int) -> int:
    return _shared('f', VenkatachalaF)[n]


def greedy_z(n: int) -> int:
    return _shared('z', AvdivpahicZejnulahiZ)[n]


def az_m(n: int) -> int:
    return _shared('z', AvdivpahicZejnulahiZ).m(n)


def married_a(n: int) -> int:
    return _shared('married', MarriedFunctions).a(n)


def married_b(n: int) -> int:
    return _shared('married', MarriedFunctions).b(n)


# ==================== 推广：Celaya–Ruskey、Pell、Cloitre、V ====================

def celaya_ruskey_h(k: int, n: int) -> int:
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    return _shared(('H', k), lambda: CelayaRuskeyH(k))[n]


def celaya_ruskey_closed(k: int, n: int) -> int:
    """⌊(n+1)·γ_k⌋，γ_k = [0; k, k, ...]"""
    return slow_beatty(metallic_gamma(k), n)


def h_pell(n: int) -> int:
    """Hofstadter–Pell：H(n)=n-1-H(n-1)-H(H(n-2))"""
    return celaya_ruskey_h(2, n)


def slow_pell(n: int) -> int:
    """R(n) = ⌊n·√2/2⌋（A049472）"""
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    return floor_scale(HALF_SQRT2, n)


def pell_lower(n: int) -> int:
    """L^P(n) = ⌊n(1+√2)⌋"""
    if n < 1:
        raise ValueError(f"n 必须 ≥ 1: {n}")
    return floor_scale(PELL_LOWER_RATIO, n)


def pell_upper(n: int) -> int:
    """U^P(n) = ⌊n(1+½√2)⌋"""
    if n < 1:
        raise ValueError(f"n 必须 ≥ 1: {n}")
    return floor_scale(PELL_UPPER_RATIO, n)


_PELL_LOWER_INVERSE = PELL_LOWER_RATIO.reciprocal()
_PELL_UPPER_INVERSE = PELL_UPPER_RATIO.reciprocal()


def pell_swap(n: int) -> int:
    """交换 L^P 与 U^P（A109250）"""
    if n < 1:
        raise ValueError(f"n 必须 ≥ 1: {n}")
    return beatty_swap(PELL_LOWER_RATIO, PELL_UPPER_RATIO, n,
                       _PELL_LOWER_INVERSE, _PELL_UPPER_INVERSE)


def pell_swap_by_increment(n: int) -> int:
    """同一个交换序列，改由 Hofstadter–Pell 递推的增量判定"""
    if n < 1:
        raise ValueError(f"n 必须 ≥ 1: {n}")
    return slow_beatty_swap(h_pell, PELL_LOWER_RATIO, PELL_UPPER_RATIO, n)


class PellValues(NamedTuple):
    h: int
    r: int
    lower: Optional[int]
    upper: Optional[int]
    swap: Optional[int]


def pell_family(n: int) -> PellValues:
    """Pell 家族在 n 处的全部值；n = 0 时 L^P、U^P 和交换序列无定义"""
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    if n == 0:
        return PellValues(h_pell(0), slow_pell(0), None, None, None)
    return PellValues(h_pell(n), slow_pell(n), pell_lower(n), pell_upper(n), pell_swap(n))


def cloitre(n: int) -> int:
    return _shared('cloitre', CloitreSequence)[n]


def v_rec(n: int) -> int:
    return _shared('V', HofstadterV)[n]


# ==================== 按 SequenceId 求值与流式输出 ====================

def _g_flat_terms() -> Iterator[int]:
    k, g, g_next = 0, hof_g_closed(0), hof_g_closed(1)
    while True:
        if g == g_next:
            yield g
        k += 1
        g, g_next = g_next, hof_g_closed(k + 1)


def _g_distinct_terms() -> Iterator[int]:
    k = 1
    g_prev, g, g_next = hof_g_closed(0), hof_g_closed(1), hof_g_closed(2)
    while True:
        if g_prev != g and g != g_next and g_prev != g_next:
            yield g
        k += 1
        g_prev, g, g_next = g, g_next, hof_g_closed(k + 1)


def _indexed(lo: int, hi: int, terms: Iterator[int]) -> Iterator[Tuple[int, int]]:
    for n, value in enumerate(terms, start=1):
        if n > hi:
            return
        if n >= lo:
            yield n, value


def stream(seq_id: SequenceId, lo: int, hi: int) -> Iterator[Tuple[int, int]]:
    """
    逐项产出 (n, value)，lo ≤ n ≤ hi

    递推序列每次流式输出使用独立实例，输出确定。
    """
    if lo < seq_id.start:
        raise ValueError(f"{seq_id} 从下标 {seq_id.start} 开始，收到 {lo}")
    if hi < lo:
        return
    name = seq_id.name

    if name is SequenceName.G_rec:
        yield from HofstadterG().values(lo, hi)
    elif name is SequenceName.H_k:
        yield from CelayaRuskeyH(seq_id.k).values(lo, hi)
    elif name is SequenceName.H_pell:
        yield from CelayaRuskeyH(2).values(lo, hi)
    elif name is SequenceName.cloitre:
        yield from CloitreSequence().values(lo, hi)
    elif name is SequenceName.v_rec:
        yield from HofstadterV().values(lo, hi)
    elif name in (SequenceName.married_a, SequenceName.married_b):
        married = MarriedFunctions()
        getter = married.a if name is SequenceName.married_a else married.b
        for n in range(lo, hi + 1):
            yield n, getter(n)
    elif name is SequenceName.f_greedy:
        greedy = VenkatachalaF()
        for n in range(lo, hi + 1):
            yield n, greedy[n]
    elif name in (SequenceName.z_greedy, SequenceName.m_avg):
        greedy = AvdivpahicZejnulahiZ()
        for n in range(lo, hi + 1):
            yield n, greedy[n] if name is SequenceName.z_greedy else greedy.m(n)
    elif name is SequenceName.W_avg:
        for n, value in swap_averages(wythoff_swap, hi):
            if n >= lo:
                yield n, value
    elif name is SequenceName.G_flat:
        yield from _indexed(lo, hi, _g_flat_terms())
    elif name is SequenceName.G_distinct:
        yield from _indexed(lo, hi, _g_distinct_terms())
    else:
        evaluate = _CLOSED_FORMS[name]
        for n in range(lo, hi + 1):
            yield n, evaluate(n)


_CLOSED_FORMS: Dict[SequenceName, Callable[[int], int]] = {
    SequenceName.G_closed: hof_g_closed,
    SequenceName.L: wythoff_lower,
    SequenceName.U: wythoff_upper,
    SequenceName.W_swap: wythoff_swap,
    SequenceName.R_slow: slow_pell,
    SequenceName.L_pell: pell_lower,
    SequenceName.U_pell: pell_upper,
    SequenceName.W_pell_swap: pell_swap,
}


def value_at(seq_id: SequenceId, n: int) -> int:
    """单个下标求值"""
    for _, value in stream(seq_id, n, n):
        return value
    raise ValueError(f"{seq_id} 在 {n} 处无定义")


def domain_start(seq_id: SequenceId) -> int:
    """序列的第一个有定义的下标"""
    return seq_id.start
