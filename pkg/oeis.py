"""
OEIS 模块 - b-file 的解析、获取（样本 / 缓存 / 网络）以及与计算序列的比对
"""
import asyncio
import enum
import logging
import os
import re
import tempfile
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import aiohttp

import config
from sequences import SequenceId, SequenceName, stream
from verify import CheckReport, Tally

logger = logging.getLogger(__name__)


class BFileFormatError(ValueError):
    """b-file 格式错误"""

    def __init__(self, message: str, lineno: Optional[int] = None):
        self.lineno = lineno
        super().__init__(f"第 {lineno} 行: {message}" if lineno is not None else message)


class FixtureMissingError(FileNotFoundError):
    """离线模式下找不到样本文件"""


class FetchError(RuntimeError):
    """网络获取失败且没有可用的本地文件"""


class DiffConfigError(ValueError):
    """比对配置错误（例如下标范围没有重叠）"""


# ==================== b-file ====================

@dataclass(frozen=True)
class BFile:
    """解析后的 b-file：A 编号和连续的 (下标, 值)"""
    id: str
    entries: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise BFileFormatError(f"{self.id or 'b-file'} 没有任何数据行")

    @property
    def offset(self) -> int:
        return self.entries[0][0]

    @property
    def last_index(self) -> int:
        return self.entries[-1][0]

    def __len__(self) -> int:
        return len(self.entries)

    def value_at(self, index: int) -> int:
        if not self.offset <= index <= self.last_index:
            raise IndexError(f"{self.id} 没有下标 {index}")
        return self.entries[index - self.offset][1]

    def values(self) -> List[int]:
        return [value for _, value in self.entries]


def parse_bfile(text: str, a_number: str = '') -> BFile:
    """
    解析 b-file 文本

    以 # 开头的行是注释，空行忽略，其余每行 "下标 值"，下标必须逐一递增。

    Raises:
        BFileFormatError: 格式错误或下标不连续（带行号）
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(f"应为两个整数，实际为 {raw!r}", lineno)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileFormatError(f"无法解析为整数: {raw!r}", lineno) from None
        if entries and index != entries[-1][0] + 1:
            raise BFileFormatError(f"下标不连续: {entries[-1][0]} 之后是 {index}", lineno)
        entries.append((index, value))
    return BFile(id=a_number, entries=tuple(entries))


def serialize_bfile(bfile: BFile, header: Optional[str] = None) -> str:
    """写回 b-file 文本，header 的每一行前加 '# '"""
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(f"{index} {value}" for index, value in bfile.entries)
    return '\n'.join(lines) + '\n'


_A_NUMBER_RE = re.compile(r'^[Aa]?(\d{1,6})$')


def normalize_a_number(text: str) -> str:
    """'a2251' / '002251' / 'A002251' → 'A002251'"""
    match = _A_NUMBER_RE.match(text.strip())
    if not match:
        raise ValueError(f"无效的 A 编号: {text}")
    return f"A{int(match.group(1)):06d}"


def _digits(a_number: str) -> str:
    return normalize_a_number(a_number)[1:]


def bfile_url(a_number: str) -> str:
    digits = _digits(a_number)
    return f"{config.OEIS_BASE_URL}/A{digits}/b{digits}.txt"


def _decode(raw: bytes, a_number: str, where: str) -> str:
    try:
        return raw.decode('utf-8')
    except UnicodeDecodeError as e:
        raise BFileFormatError(f"{a_number} 不是有效的 UTF-8 文本（{where}，字节 {e.start}）") from e


# ==================== 获取 ====================

class FetchMode(str, enum.Enum):
    OFFLINE = 'offline'
    ONLINE = 'online'


class BFileRepository:
    """
    b-file 仓库：样本目录 → 缓存目录 → 网络

    离线模式只读本地文件；在线模式缓存命中时不访问网络，
    下载的内容原样写入缓存。同一个 A 编号的在线获取串行执行。
    """

    def __init__(self, fixture_dir: Optional[str] = None, cache_dir: Optional[str] = None, db=None):
        self.fixture_dir = fixture_dir or config.HOFLAB_FIXTURE_DIR
        self.cache_dir = cache_dir or config.HOFLAB_CACHE_DIR
        self.db = db
        self._locks: Dict[str, asyncio.Lock] = {}

    def fixture_path(self, a_number: str) -> str:
        return os.path.join(self.fixture_dir, f"b{_digits(a_number)}.txt")

    def cache_path(self, a_number: str) -> str:
        return os.path.join(self.cache_dir, f"b{_digits(a_number)}.txt")

    def _lock_for(self, a_number: str) -> asyncio.Lock:
        lock = self._locks.get(a_number)
        if lock is None:
            lock = self._locks[a_number] = asyncio.Lock()
        return lock

    async def _log(self, a_number: str, source: str):
        if self.db is not None:
            await self.db.log_fetch(a_number, source)

    async def _read_local(self, a_number: str, path: str, source: str) -> BFile:
        with open(path, 'rb') as f:
            text = _decode(f.read(), a_number, path)
        logger.info(f"📄 {a_number} 来自{'样本' if source == 'fixture' else '缓存'}: {path}")
        await self._log(a_number, source)
        return parse_bfile(text, a_number)

    async def fetch(self, a_number: str, mode: FetchMode = FetchMode.OFFLINE) -> BFile:
        """
        获取 b-file

        Raises:
            FixtureMissingError: 离线模式下样本和缓存都不存在
            FetchError: 在线模式下载失败且没有本地文件
            BFileFormatError: 文件内容格式错误
        """
        a_number = normalize_a_number(a_number)
        mode = FetchMode(mode)
        fixture, cache = self.fixture_path(a_number), self.cache_path(a_number)

        if mode is FetchMode.OFFLINE:
            for source, path in (('fixture', fixture), ('cache', cache)):
                if os.path.exists(path):
                    return await self._read_local(a_number, path, source)
            raise FixtureMissingError(f"离线模式下找不到 {a_number} 的样本: {fixture}")

        async with self._lock_for(a_number):
            if os.path.exists(cache):
                return await self._read_local(a_number, cache, 'cache')
            try:
                raw = await self._download(a_number)
            except FetchError:
                if os.path.exists(fixture):
                    logger.warning(f"⚠️ {a_number} 下载失败，改用样本文件")
                    return await self._read_local(a_number, fixture, 'fixture')
                raise
            bfile = parse_bfile(_decode(raw, a_number, bfile_url(a_number)), a_number)
            self._write_cache(cache, raw)
            await self._log(a_number, 'network')
            return bfile

    def _write_cache(self, path: str, raw: bytes):
        """原样写入缓存（先写临时文件再替换）"""
        os.makedirs(os.path.dirname(path), exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix='.part')
        try:
            with os.fdopen(fd, 'wb') as f:
                f.write(raw)
            os.replace(tmp, path)
        except OSError:
            if os.path.exists(tmp):
                os.remove(tmp)
            raise
        logger.info(f"💾 已缓存: {path}")

    async def _download(self, a_number: str) -> bytes:
        """从 OEIS 下载 b-file 原始字节，失败重试 FETCH_RETRIES 次"""
        url = bfile_url(a_number)
        timeout = aiohttp.ClientTimeout(total=config.FETCH_TIMEOUT)
        last_error = None
        for attempt in range(1, config.FETCH_RETRIES + 1):
            try:
                async with aiohttp.ClientSession(timeout=timeout) as session:
                    async with session.get(url) as response:
                        if response.status == 200:
                            logger.info(f"🌐 已下载 {a_number}: {url}")
                            return await response.read()
                        if response.status == 404:
                            raise FetchError(f"OEIS 没有 {a_number} 的 b-file: {url}")
                        last_error = f"HTTP {response.status}"
                        logger.warning(f"OEIS 返回状态码 {response.status}: {url}（第 {attempt} 次）")
            except asyncio.TimeoutError:
                last_error = '超时'
                logger.warning(f"OEIS 请求超时: {url}（第 {attempt} 次）")
            except aiohttp.ClientError as e:
                last_error = str(e)
                logger.warning(f"OEIS 请求失败: {url}（第 {attempt} 次）: {e}")
            if attempt < config.FETCH_RETRIES:
                await asyncio.sleep(attempt)
        raise FetchError(f"下载 {a_number} 失败: {last_error}")


async def fetch_bfile(a_number: str, mode: FetchMode = FetchMode.OFFLINE,
                      repository: Optional[BFileRepository] = None) -> BFile:
    return await (repository or BFileRepository()).fetch(a_number, mode)


# ==================== 比对 ====================

@dataclass(frozen=True)
class OffsetMap:
    """计算序列下标 n 对应 b-file 下标 n + shift"""
    shift: int = 0

    def to_bfile(self, n: int) -> int:
        return n + self.shift

    def to_sequence(self, index: int) -> int:
        return index - self.shift


@dataclass(frozen=True)
class DiffTarget:
    seq_id: SequenceId
    a_number: str
    offset_map: OffsetMap = OffsetMap()
    note: str = ''
    reconstruction: bool = False


def _sid(name: SequenceName, k: Optional[int] = None) -> SequenceId:
    return SequenceId(name, k)


DIFF_TARGETS: Tuple[DiffTarget, ...] = (
    DiffTarget(_sid(SequenceName.G_closed), 'A005206'),
    DiffTarget(_sid(SequenceName.G_rec), 'A005206'),
    DiffTarget(_sid(SequenceName.L), 'A000201'),
    DiffTarget(_sid(SequenceName.U), 'A001950'),
    DiffTarget(_sid(SequenceName.W_swap), 'A002251', note='offset 0，W(0)=0'),
    DiffTarget(_sid(SequenceName.W_avg), 'A073869', note='A019444 前 n 项的平均值为 W̄(n-1) + 1'),
    DiffTarget(_sid(SequenceName.f_greedy), 'A019444'),
    DiffTarget(_sid(SequenceName.married_a), 'A005378'),
    DiffTarget(_sid(SequenceName.married_b), 'A005379'),
    DiffTarget(_sid(SequenceName.H_pell), 'A097508', note='按 offset 0 存放，H(n) = ⌊(n+1)(√2-1)⌋'),
    DiffTarget(_sid(SequenceName.H_k, 1), 'A005206'),
    DiffTarget(_sid(SequenceName.H_k, 2), 'A097508'),
    DiffTarget(_sid(SequenceName.R_slow), 'A049472'),
    DiffTarget(_sid(SequenceName.L_pell), 'A003151'),
    DiffTarget(_sid(SequenceName.U_pell), 'A003152'),
    DiffTarget(_sid(SequenceName.W_pell_swap), 'A109250'),
    DiffTarget(_sid(SequenceName.cloitre), 'A138466'),
    DiffTarget(_sid(SequenceName.v_rec), 'A063882'),
    DiffTarget(_sid(SequenceName.G_flat), 'A090908', note='重构：G(k) = G(k+1) 时的 G(k)', reconstruction=True),
    DiffTarget(_sid(SequenceName.G_distinct), 'A090909',
               note='重构：G(k-1), G(k), G(k+1) 互不相同时的 G(k)', reconstruction=True),
)


def target_for(seq_id: SequenceId) -> Optional[DiffTarget]:
    for target in DIFF_TARGETS:
        if target.seq_id == seq_id:
            return target
    return None


def diff(seq_id: SequenceId, bfile: BFile, offset_map: OffsetMap = OffsetMap(),
         limit: Optional[int] = None) -> CheckReport:
    """
    逐项比对计算序列与 b-file

    Args:
        seq_id: 计算序列
        bfile: 已解析的 b-file
        offset_map: 下标平移
        limit: 最多比对的项数；超过重叠部分时截断并警告

    Returns:
        CheckReport，范围为计算序列的下标

    Raises:
        DiffConfigError: 没有重叠或 limit 非正
    """
    if limit is not None and limit < 1:
        raise DiffConfigError(f"limit 必须为正: {limit}")
    lo = max(seq_id.start, offset_map.to_sequence(bfile.offset))
    hi = offset_map.to_sequence(bfile.last_index)
    if lo > hi:
        raise DiffConfigError(
            f"{seq_id} 与 {bfile.id} 没有重叠（shift={offset_map.shift}，"
            f"b-file 下标 [{bfile.offset}, {bfile.last_index}]）")
    if limit is not None:
        if lo + limit - 1 > hi:
            logger.warning(f"⚠️ {bfile.id} 只有 {hi - lo + 1} 项可比对，limit={limit} 被截断")
        else:
            hi = lo + limit - 1

    tally = Tally(f"diff:{seq_id}:{bfile.id}", lo, hi, note=f"shift={offset_map.shift}")
    for n, value in stream(seq_id, lo, hi):
        tally.expect(n, bfile.value_at(offset_map.to_bfile(n)), value)
    return tally.finish()
