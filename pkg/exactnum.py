"""
精确数模块 - 二次无理数 (a + b√d)/c 的精确算术
所有的 ⌊n·q⌋ 都在这里用整数运算完成，不经过浮点
"""
import logging
import math
import operator
from functools import total_ordering
from typing import Iterator, Optional, Tuple, Union

logger = logging.getLogger(__name__)

Number = Union[int, 'QuadraticSurd']


def isqrt(n: int) -> int:
    """
    整数平方根（向下取整）

    Args:
        n: 非负整数（任意精度）

    Returns:
        r，满足 r² ≤ n < (r+1)²
    """
    n = operator.index(n)
    if n < 0:
        raise ValueError(f"isqrt 不接受负数: {n}")
    return math.isqrt(n)


def _split_square(d: int) -> Tuple[int, int]:
    """把 d 拆成 f²·d0，d0 无平方因子"""
    f = 1
    p = 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            f *= p
        p += 1 if p == 2 else 2
    return f, d


def canonicalize(a: int, b: int, c: int, d: int) -> Tuple[int, int, int, int]:
    """
    规范化 (a + b√d)/c

    Returns:
        (a, b, c, d)：c > 0，d ≥ 2 且无平方因子，gcd(a, b, c) = 1
    """
    a, b, c, d = (operator.index(x) for x in (a, b, c, d))
    if c == 0:
        raise ZeroDivisionError("分母 c 不能为 0")
    if d < 2:
        raise ValueError(f"d 必须 ≥ 2: {d}")
    f, d = _split_square(d)
    if d == 1:
        raise ValueError("d 不能是完全平方数")
    b *= f
    if c < 0:
        a, b, c = -a, -b, -c
    g = math.gcd(a, b, c)
    return a // g, b // g, c // g, d


def _sign_of(x: int, y: int, d: int) -> int:
    """x + y√d 的符号（d 非完全平方）"""
    if y == 0:
        return (x > 0) - (x < 0)
    if x == 0:
        return (y > 0) - (y < 0)
    if (x > 0) == (y > 0):
        return (x > 0) - (x < 0)
    # 异号：比较 x² 与 y²d，二者不可能相等
    if x * x > y * y * d:
        return (x > 0) - (x < 0)
    return (y > 0) - (y < 0)


@total_ordering
class QuadraticSurd:
    """
    二次无理数 (a + b·√d)/c，不可变

    规范形式下 c > 0、d 无平方因子、gcd(a, b, c) = 1。
    b 可以为负（例如 1-γ = (3-√5)/2），b = 0 表示有理数。
    """

    __slots__ = ('_a', '_b', '_c', '_d')

    def __new__(cls, a: int, b: int, c: int, d: int, *, _normalize: bool = True):
        self = super().__new__(cls)
        if _normalize:
            a, b, c, d = canonicalize(a, b, c, d)
        self._a = a
        self._b = b
        self._c = c
        self._d = d
        return self

    @classmethod
    def _reduce(cls, a: int, b: int, c: int, d: int) -> 'QuadraticSurd':
        """d 已知无平方因子时的快速规范化"""
        if c == 0:
            raise ZeroDivisionError("分母 c 不能为 0")
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(a, b, c)
        return cls(a // g, b // g, c // g, d, _normalize=False)

    @classmethod
    def rational(cls, numerator: int, denominator: int, d: int) -> 'QuadraticSurd':
        """在 √d 所在的域里构造有理数"""
        return cls(numerator, 0, denominator, d)

    # 字段

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def c(self) -> int:
        return self._c

    @property
    def d(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def canonical(self) -> 'QuadraticSurd':
        """重新规范化（对已规范的值是恒等）"""
        return QuadraticSurd(self._a, self._b, self._c, self._d)

    def astuple(self) -> Tuple[int, int, int, int]:
        return self._a, self._b, self._c, self._d

    # 运算

    def _align(self, other) -> Optional['QuadraticSurd']:
        """把 other 转成与 self 同一个 √d 下的值"""
        if isinstance(other, int):
            return QuadraticSurd(other, 0, 1, self._d, _normalize=False)
        if not isinstance(other, QuadraticSurd):
            return None
        if other._d == self._d:
            return other
        if other._b == 0:
            return QuadraticSurd(other._a, 0, other._c, self._d, _normalize=False)
        if self._b == 0:
            # self 是有理数，调用方会交换角色
            return None
        raise ValueError(f"不同根号下的二次无理数不能混合运算: √{self._d} 与 √{other._d}")

    def _coerce_pair(self, other):
        y = self._align(other)
        if y is not None:
            return self, y
        if isinstance(other, QuadraticSurd):
            return other._align(self), other
        return None

    def __add__(self, other):
        pair = self._coerce_pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return QuadraticSurd._reduce(x._a * y._c + y._a * x._c,
                                     x._b * y._c + y._b * x._c,
                                     x._c * y._c, x._d)

    __radd__ = __add__

    def __neg__(self) -> 'QuadraticSurd':
        return QuadraticSurd(-self._a, -self._b, self._c, self._d, _normalize=False)

    def __sub__(self, other):
        if not isinstance(other, (int, QuadraticSurd)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce_pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        d = x._d
        return QuadraticSurd._reduce(x._a * y._a + x._b * y._b * d,
                                     x._a * y._b + x._b * y._a,
                                     x._c * y._c, d)

    __rmul__ = __mul__

    def reciprocal(self) -> 'QuadraticSurd':
        """1/q = c(a - b√d)/(a² - b²d)"""
        a, b, c, d = self._a, self._b, self._c, self._d
        if a == 0 and b == 0:
            raise ZeroDivisionError("0 没有倒数")
        return QuadraticSurd._reduce(c * a, -c * b, a * a - b * b * d, d)

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("除数不能为 0")
            return QuadraticSurd._reduce(self._a, self._b, self._c * other, self._d)
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return self.reciprocal() * other

    def conjugate(self) -> 'QuadraticSurd':
        return QuadraticSurd(self._a, -self._b, self._c, self._d, _normalize=False)

    # 比较

    def sign(self) -> int:
        return _sign_of(self._a, self._b, self._d)

    def is_unit_interval(self) -> bool:
        """0 < q < 1"""
        return (_sign_of(self._a, self._b, self._d) > 0
                and _sign_of(self._c - self._a, -self._b, self._d) > 0)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._b == 0 and self._c == 1 and self._a == other
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        if self._b == 0 and other._b == 0:
            return self._a == other._a and self._c == other._c
        return self.astuple() == other.astuple()

    def __hash__(self):
        # 与 int 相等的值必须与该 int 同哈希
        if self._b == 0 and self._c == 1:
            return hash(self._a)
        return hash((self._a, self._b, self._c, self._d if self._b else 0))

    def __lt__(self, other):
        if not isinstance(other, (int, QuadraticSurd)):
            return NotImplemented
        return (self - other).sign() < 0

    # 展示

    def __float__(self) -> float:
        return (self._a + self._b * math.sqrt(self._d)) / self._c

    def __repr__(self) -> str:
        return f"QuadraticSurd(a={self._a}, b={self._b}, c={self._c}, d={self._d})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a) if self._c == 1 else f"{self._a}/{self._c}"
        op = '+' if self._b > 0 else '-'
        body = f"{self._a}{op}{abs(self._b)}√{self._d}"
        return f"({body})" if self._c == 1 else f"({body})/{self._c}"

    def __reduce__(self):
        return self.__class__, (self._a, self._b, self._c, self._d)


def floor_scale(q: QuadraticSurd, n: int) -> int:
    """
    精确计算 ⌊n·q⌋

    b > 0 时为 ⌊(n·a + isqrt(n²b²d))/c⌋；n·b ≠ 0 时 √(n²b²d) 是无理数，
    它和自己的整数部分之间没有整数。b < 0 时整数部分再减一。

    Args:
        q: 二次无理数
        n: 非负整数

    Returns:
        ⌊n·q⌋
    """
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    a, b, c = q.a, q.b, q.c
    if b == 0 or n == 0:
        return (n * a) // c
    s = math.isqrt(n * n * b * b * q.d)
    if b > 0:
        return (n * a + s) // c
    return (n * a - s - 1) // c


def _require_unit(gamma: QuadraticSurd):
    if not isinstance(gamma, QuadraticSurd) or gamma.is_rational or not gamma.is_unit_interval():
        raise ValueError(f"γ 必须是 (0,1) 内的二次无理数: {gamma}")


def slow_beatty(gamma: QuadraticSurd, n: int) -> int:
    """
    慢 Beatty 序列 s(n) = ⌊(n+1)·γ⌋

    Args:
        gamma: (0,1) 内的二次无理数
        n: 非负整数
    """
    _require_unit(gamma)
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    return floor_scale(gamma, n + 1)


def metallic_gamma(k: int) -> QuadraticSurd:
    """γ = [0; k, k, k, ...] = (√(k²+4) - k)/2"""
    if k < 1:
        raise ValueError(f"k 必须 ≥ 1: {k}")
    return QuadraticSurd(-k, 1, 2, k * k + 4)


def complement_surd(gamma: QuadraticSurd) -> Tuple[QuadraticSurd, QuadraticSurd]:
    """
    互补 Beatty 对 (1/γ, 1/(1-γ))

    Returns:
        (α, β)，满足 1/α + 1/β = 1 且 α, β > 1
    """
    _require_unit(gamma)
    return gamma.reciprocal(), (1 - gamma).reciprocal()


def beatty_inverse(alpha: QuadraticSurd, n: int,
                   reciprocal: Optional[QuadraticSurd] = None) -> Optional[int]:
    """
    Beatty 序列反查：返回满足 ⌊m·α⌋ = n 的 m，不存在时返回 None

    α 为大于 1 的无理数时，候选只有 m = ⌊(n+1)/α⌋。

    Args:
        alpha: 大于 1 的二次无理数
        n: 待反查的值
        reciprocal: 预先算好的 1/α（循环调用时省去重复求倒数）
    """
    if n < 1:
        return None
    m = floor_scale(reciprocal if reciprocal is not None else alpha.reciprocal(), n + 1)
    if m >= 1 and floor_scale(alpha, m) == n:
        return m
    return None


# ==================== 连分数（取整预言机） ====================

def partial_quotients(q: QuadraticSurd) -> Iterator[int]:
    """
    连分数部分商 [t0; t1, t2, ...]

    二次无理数的展开是无穷的，有理数则有限。
    """
    if q.is_rational:
        p, r = q.a, q.c
        while r:
            t = p // r
            yield t
            p, r = r, p - t * r
        return

    # 写成 (P + √D)/Q，并放大使 Q | D - P²
    P, D, Q = q.a, q.b * q.b * q.d, q.c
    if q.b < 0:
        P, Q = -P, -Q
    m = abs(Q)
    P, D, Q = P * m, D * m * m, Q * m
    s = math.isqrt(D)
    while True:
        t = (P + s) // Q if Q > 0 else (P + s + 1) // Q
        yield t
        P = t * Q - P
        Q = (D - P * P) // Q


def convergents(q: QuadraticSurd) -> Iterator[Tuple[int, int]]:
    """渐近分数 p/r（r > 0）"""
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for t in partial_quotients(q):
        h_prev, h = h, t * h + h_prev
        k_prev, k = k, t * k + k_prev
        yield h, k


def floor_scale_oracle(q: QuadraticSurd, n: int, max_terms: int = 10_000) -> int:
    """
    用相邻渐近分数夹逼计算 ⌊n·q⌋，与 floor_scale 互相独立

    q 夹在相邻两个渐近分数之间，两端的 ⌊n·p/r⌋ 相同时即为答案。
    """
    if n < 0:
        raise ValueError(f"n 必须非负: {n}")
    if n == 0:
        return 0
    if q.is_rational:
        return (n * q.a) // q.c
    previous = None
    for i, (h, k) in enumerate(convergents(q)):
        if previous is not None:
            lo = (n * previous[0]) // previous[1]
            hi = (n * h) // k
            if lo == hi:
                return lo
        if i >= max_terms:
            break
        previous = (h, k)
    raise ArithmeticError(f"连分数夹逼未收敛: q={q}, n={n}")


# ==================== 常用常数 ====================

GOLDEN_GAMMA = metallic_gamma(1)                      # (√5-1)/2
PHI, PHI_SQUARED = complement_surd(GOLDEN_GAMMA)      # φ, φ²
SILVER_GAMMA = metallic_gamma(2)                      # √2-1
PELL_LOWER_RATIO, PELL_UPPER_RATIO = complement_surd(SILVER_GAMMA)  # 1+√2, 1+½√2
HALF_SQRT2 = QuadraticSurd(0, 1, 2, 2)                # γ/(1-γ) for √2-1
CLOITRE_GAMMA = QuadraticSurd(-1, 1, 1, 3)            # √3-1
