"""
OEIS 模块测试
b-file 解析、离线样本、在线缓存（下载用替身函数代替）以及与计算序列的比对
"""
import asyncio
import logging
import os

import pytest

import config
from oeis import (
    DIFF_TARGETS,
    BFile,
    BFileFormatError,
    BFileRepository,
    DiffConfigError,
    FetchError,
    FetchMode,
    FixtureMissingError,
    OffsetMap,
    bfile_url,
    diff,
    normalize_a_number,
    parse_bfile,
    serialize_bfile,
    target_for,
)
from sequences import SequenceId, SequenceName, parse_sequence_id

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')


def _offline(tmp_path) -> BFileRepository:
    return BFileRepository(fixture_dir=FIXTURE_DIR, cache_dir=str(tmp_path / 'cache'))


# OEIS 条目 DATA 段的前若干项（官方 offset, 数值），与样本文件和计算结果都独立
OEIS_DATA = {
    'A005206': (0, (0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11, 12, 12, 13, 14, 14, 15, 16,
                    16, 17, 17, 18)),
    'A000201': (1, (1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19, 21, 22, 24, 25, 27, 29, 30, 32, 33, 35, 37,
                    38, 40, 42, 43, 45, 46, 48)),
    'A001950': (1, (2, 5, 7, 10, 13, 15, 18, 20, 23, 26, 28, 31, 34, 36, 39, 41, 44, 47, 49, 52, 54, 57, 60,
                    62, 65, 68, 70, 73, 75, 78)),
    'A002251': (0, (0, 2, 1, 5, 7, 3, 10, 4, 13, 15, 6, 18, 20, 8, 23, 9, 26, 28, 11, 31, 12, 34, 36, 14,
                    39, 41, 16, 44, 17, 47)),
    'A073869': (0, (0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11)),
    'A019444': (1, (1, 3, 2, 6, 8, 4, 11, 5, 14, 16, 7, 19, 21, 9, 24, 10, 27, 29, 12, 32, 13, 35, 37, 15,
                    40, 42, 17, 45, 18, 48)),
    'A005378': (0, (1, 1, 2, 2, 3, 3, 4, 5, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11, 12, 13, 13, 14, 14, 15, 16,
                    16, 17, 17, 18)),
    'A005379': (0, (0, 0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 7, 8, 9, 9, 10, 11, 11, 12, 12, 13, 14, 14, 15, 16,
                    16, 17, 17, 18)),
    'A097508': (0, (0, 0, 1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 9, 10, 10)),
    'A049472': (0, (0, 0, 1, 2, 2, 3, 4, 4, 5, 6, 7, 7, 8, 9, 9, 10, 11, 12, 12, 13, 14, 14, 15, 16, 16,
                    17, 18, 19, 19, 20)),
    'A003151': (1, (2, 4, 7, 9, 12, 14, 16, 19, 21, 24, 26, 28, 31, 33, 36, 38, 41, 43, 45, 48, 50, 53, 55,
                    57, 60, 62, 65, 67, 70, 72)),
    'A003152': (1, (1, 3, 5, 6, 8, 10, 11, 13, 15, 17, 18, 20, 22, 23, 25, 27, 29, 30, 32, 34, 35, 37, 39,
                    40, 42, 44, 46, 47, 49, 51)),
    'A109250': (1, (2, 1, 4, 3, 7, 9, 5, 12, 6, 14, 16, 8, 19, 10, 21, 11, 24, 26)),
    'A138466': (1, (1, 2, 2, 3, 4, 5, 5, 6, 7, 8)),
    'A063882': (1, (1, 1, 1, 1, 2, 3, 4, 5, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11, 11, 12)),
}


def _published(a_number: str) -> BFile:
    offset, values = OEIS_DATA[a_number]
    return BFile(a_number, tuple(enumerate(values, start=offset)))


# ==================== 解析 ====================

def test_parse_bfile():
    bfile = parse_bfile("0 0\n1 2\n2 1\n", 'A002251')
    assert bfile.entries == ((0, 0), (1, 2), (2, 1))
    assert (bfile.offset, bfile.last_index, len(bfile)) == (0, 2, 3)
    assert bfile.value_at(1) == 2
    with pytest.raises(IndexError):
        bfile.value_at(3)


def test_parse_bfile_skips_comments():
    bfile = parse_bfile("# A000201\n\n1 1\n2 3\n   \n3 4\n")
    assert bfile.offset == 1
    assert bfile.values() == [1, 3, 4]


def test_parse_bfile_errors():
    with pytest.raises(BFileFormatError) as info:
        parse_bfile("0 0\n2 1\n")
    assert info.value.lineno == 2
    with pytest.raises(BFileFormatError) as info:
        parse_bfile("0 0\n1\n")
    assert info.value.lineno == 2
    with pytest.raises(BFileFormatError) as info:
        parse_bfile("# header\n0 x\n")
    assert info.value.lineno == 2
    with pytest.raises(BFileFormatError):
        parse_bfile("# 只有注释\n")


def test_serialize_then_parse():
    bfile = BFile('A005206', ((0, 0), (1, 1), (2, 1), (3, 2)))
    text = serialize_bfile(bfile, header='A005206\nHofstadter G')
    assert text.startswith('# A005206\n# Hofstadter G\n0 0\n')
    assert parse_bfile(text, 'A005206') == bfile


def test_a_numbers(monkeypatch):
    assert normalize_a_number('a2251') == 'A002251'
    assert normalize_a_number('002251') == 'A002251'
    assert normalize_a_number(' A005206 ') == 'A005206'
    for bad in ('A1234567', 'B12', '', 'A'):
        with pytest.raises(ValueError):
            normalize_a_number(bad)
    monkeypatch.setattr(config, 'OEIS_BASE_URL', 'https://oeis.org')
    assert bfile_url('A2251') == 'https://oeis.org/A002251/b002251.txt'


# ==================== 获取 ====================

def test_offline_fixture(tmp_path):
    bfile = asyncio.run(_offline(tmp_path).fetch('A005206'))
    assert bfile.id == 'A005206'
    assert bfile.offset == 0
    assert len(bfile) == 1000
    assert bfile.values()[:8] == [0, 1, 1, 2, 3, 3, 4, 4]


def test_offline_missing_fixture(tmp_path):
    with pytest.raises(FixtureMissingError):
        asyncio.run(_offline(tmp_path).fetch('A000000'))


def test_offline_reads_cache(tmp_path):
    repo = BFileRepository(fixture_dir=str(tmp_path / 'empty'), cache_dir=str(tmp_path / 'cache'))
    os.makedirs(repo.cache_dir)
    with open(repo.cache_path('A000045'), 'w', encoding='utf-8') as f:
        f.write("0 0\n1 1\n2 1\n3 2\n")
    bfile = asyncio.run(repo.fetch('A45', FetchMode.OFFLINE))
    assert bfile.values() == [0, 1, 1, 2]


def test_online_cache_hit_skips_network(tmp_path, monkeypatch):
    repo = _offline(tmp_path)
    os.makedirs(repo.cache_dir)
    with open(repo.cache_path('A002251'), 'w', encoding='utf-8') as f:
        f.write("0 0\n1 2\n")

    async def no_network(self, a_number):
        raise AssertionError('不应访问网络')

    monkeypatch.setattr(BFileRepository, '_download', no_network)
    bfile = asyncio.run(repo.fetch('A002251', FetchMode.ONLINE))
    assert bfile.values() == [0, 2]


def test_online_download_is_cached_verbatim(tmp_path, monkeypatch):
    raw = b"# A002251\r\n# downloaded\r\n0 0\r\n1 2\r\n2 1\r\n"
    calls = []

    async def fake_download(self, a_number):
        calls.append(a_number)
        return raw

    monkeypatch.setattr(BFileRepository, '_download', fake_download)
    repo = _offline(tmp_path)

    async def fetch_twice():
        first = await repo.fetch('A002251', 'online')
        second = await repo.fetch('A002251', 'online')
        return first, second

    first, second = asyncio.run(fetch_twice())
    assert first == second
    assert first.values() == [0, 2, 1]
    assert calls == ['A002251']
    with open(repo.cache_path('A002251'), 'rb') as f:
        assert f.read() == raw


def test_concurrent_online_fetches_download_once(tmp_path, monkeypatch):
    calls = []

    async def slow_download(self, a_number):
        calls.append(a_number)
        await asyncio.sleep(0.01)
        return b"0 0\n1 1\n"

    monkeypatch.setattr(BFileRepository, '_download', slow_download)
    repo = _offline(tmp_path)

    async def fetch_many():
        return await asyncio.gather(*(repo.fetch('A000001', FetchMode.ONLINE) for _ in range(4)))

    results = asyncio.run(fetch_many())
    assert len(set(results)) == 1
    assert calls == ['A000001']


def test_online_failure_falls_back_to_fixture(tmp_path, monkeypatch):
    async def broken(self, a_number):
        raise FetchError('网络不可用')

    monkeypatch.setattr(BFileRepository, '_download', broken)
    bfile = asyncio.run(_offline(tmp_path).fetch('A000201', FetchMode.ONLINE))
    assert bfile.values()[:5] == [1, 3, 4, 6, 8]

    repo = BFileRepository(fixture_dir=str(tmp_path / 'empty'), cache_dir=str(tmp_path / 'cache'))
    with pytest.raises(FetchError):
        asyncio.run(repo.fetch('A000201', FetchMode.ONLINE))


def test_invalid_utf8_is_a_format_error(tmp_path, monkeypatch):
    garbage = b"0 0\n1 \xff\n"
    repo = BFileRepository(fixture_dir=str(tmp_path / 'fixtures'), cache_dir=str(tmp_path / 'cache'))
    os.makedirs(repo.fixture_dir)
    with open(repo.fixture_path('A000001'), 'wb') as f:
        f.write(garbage)
    with pytest.raises(BFileFormatError, match='UTF-8'):
        asyncio.run(repo.fetch('A000001', FetchMode.OFFLINE))

    async def fake_download(self, a_number):
        return garbage

    monkeypatch.setattr(BFileRepository, '_download', fake_download)
    with pytest.raises(BFileFormatError, match='UTF-8'):
        asyncio.run(repo.fetch('A000002', FetchMode.ONLINE))
    # 解码失败的下载不写入缓存
    assert not os.path.exists(repo.cache_path('A000002'))


# ==================== 比对 ====================

@pytest.mark.parametrize('target', [t for t in DIFF_TARGETS if not t.reconstruction],
                         ids=lambda t: f"{t.seq_id}-{t.a_number}")
def test_fixture_diffs_are_clean(tmp_path, target):
    bfile = asyncio.run(_offline(tmp_path).fetch(target.a_number))
    small = diff(target.seq_id, bfile, target.offset_map, limit=19)
    assert small.ok, small.to_line()
    report = diff(target.seq_id, bfile, target.offset_map)
    assert report.ok, report.to_line()
    assert report.passed == report.size
    assert report.hi == bfile.last_index
    assert report.check_name == f"diff:{target.seq_id}:{target.a_number}"


@pytest.mark.parametrize('target', [t for t in DIFF_TARGETS if not t.reconstruction],
                         ids=lambda t: f"{t.seq_id}-{t.a_number}")
def test_computed_sequences_match_published_data(target):
    published = _published(target.a_number)
    report = diff(target.seq_id, published, target.offset_map)
    assert report.ok, report.to_line()
    assert (report.lo, report.hi) == (published.offset, published.last_index)


@pytest.mark.parametrize('a_number', sorted(OEIS_DATA))
def test_fixture_agrees_with_published_data(tmp_path, a_number):
    fixture = asyncio.run(_offline(tmp_path).fetch(a_number))
    published = _published(a_number)
    assert fixture.offset == published.offset
    assert fixture.values()[:len(published)] == published.values()


def test_published_offsets():
    # married 函数从 a(0)=1、b(0)=0 开始，Cloitre 序列从 a(1)=1 开始
    assert _published('A005378').entries[0] == (0, 1)
    assert _published('A005379').entries[0] == (0, 0)
    assert _published('A138466').entries[0] == (1, 1)
    assert _published('A097508').offset == 0
    assert {t.a_number for t in DIFF_TARGETS if not t.reconstruction} == set(OEIS_DATA)


def test_diff_reports_single_corruption():
    good = parse_bfile("\n".join(f"{n} {v}" for n, v in enumerate(
        [0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9])), 'A005206')
    entries = list(good.entries)
    entries[10] = (10, 7)
    bad = BFile('A005206', tuple(entries))
    report = diff(parse_sequence_id('G'), bad)
    assert report.failed == 1
    assert report.passed == 14
    assert tuple(report.first_counterexample) == (10, 7, 6)


def test_diff_offsets_and_limits(caplog):
    # 从 1 开始的 b-file 与从 0 开始的序列：只比对重叠部分
    bfile = parse_bfile("1 1\n2 1\n3 2\n4 3\n")
    report = diff(parse_sequence_id('G'), bfile)
    assert (report.lo, report.hi) == (1, 4)
    assert report.ok

    # shift=1：b-file 下标 n+1 对应 G(n)
    shifted = parse_bfile("1 0\n2 1\n3 1\n4 2\n")
    report = diff(parse_sequence_id('G'), shifted, OffsetMap(1))
    assert (report.lo, report.hi) == (0, 3)
    assert report.ok

    with caplog.at_level(logging.WARNING, logger='oeis'):
        report = diff(parse_sequence_id('G'), bfile, limit=100)
    assert report.hi == 4
    assert '截断' in caplog.text

    assert diff(parse_sequence_id('G'), bfile, limit=2).hi == 2


def test_diff_config_errors():
    bfile = parse_bfile("0 0\n1 1\n2 1\n")
    with pytest.raises(DiffConfigError):
        diff(parse_sequence_id('G'), bfile, OffsetMap(5000))
    with pytest.raises(DiffConfigError):
        diff(parse_sequence_id('G'), bfile, limit=0)


def test_target_for():
    assert target_for(SequenceId(SequenceName.H_k, 2)).a_number == 'A097508'
    assert target_for(parse_sequence_id('Gflat')).reconstruction
    assert target_for(SequenceId(SequenceName.H_k, 4)) is None


if __name__ == '__main__':
    import sys
    sys.exit(pytest.main([__file__, '-v']))
