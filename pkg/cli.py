"""
命令行入口 - 生成序列、运行验证、输出散点数据、与 OEIS 比对、查看验证历史

退出码：0 成功，1 验证/比对失败或 I/O 错误，2 用法错误
"""
import argparse
import asyncio
import contextlib
import csv
import json
import logging
import sys
from typing import Iterator, List, Optional, TextIO

import config
from database import Database
from exactnum import GOLDEN_GAMMA, PHI, floor_scale
from oeis import (
    BFileFormatError,
    BFileRepository,
    DiffConfigError,
    FetchError,
    FetchMode,
    FixtureMissingError,
    OffsetMap,
    diff,
    target_for,
)
from sequences import known_sequence_names, parse_sequence_id, stream, wythoff_swap
from verify import CHECK_NAMES, CheckReport, VerifyConfig, build_plan, run_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """参数组合不合法"""


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if not path:
        yield sys.stdout
        return
    with open(path, 'w', encoding='utf-8', newline='') as f:
        yield f


def _sequence(args):
    try:
        return parse_sequence_id(args.sequence, args.k)
    except ValueError as e:
        raise UsageError(f"{e}（可选: {', '.join(known_sequence_names())}）") from None


# ==================== gen ====================

async def cmd_gen(args) -> int:
    seq_id = _sequence(args)
    lo = seq_id.start if args.from_ is None else args.from_
    hi = config.VERIFY_DEFAULT_TO if args.to is None else args.to
    if lo < seq_id.start:
        raise UsageError(f"{seq_id} 从下标 {seq_id.start} 开始，--from={lo}")
    if lo > hi:
        raise UsageError(f"--from ({lo}) 不能大于 --to ({hi})")

    with _output(args.out) as out:
        if args.format == 'csv':
            writer = csv.writer(out, lineterminator='\n')
            writer.writerow(('n', 'value'))
            for n, value in stream(seq_id, lo, hi):
                writer.writerow((n, value))
        else:
            for _, value in stream(seq_id, lo, hi):
                out.write(f"{value}\n")
    return EXIT_OK


# ==================== verify ====================

def _write_reports(reports: List[CheckReport], fmt: str, out: TextIO):
    if fmt == 'json':
        json.dump([r.to_record() for r in reports], out, indent=2, ensure_ascii=False)
        out.write('\n')
    elif fmt == 'csv':
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(('name', 'lo', 'hi', 'passed', 'failed', 'counterexample', 'elapsed_ms'))
        for record in (r.to_record() for r in reports):
            cx = record['counterexample']
            writer.writerow((record['name'], record['lo'], record['hi'], record['passed'],
                             record['failed'], json.dumps(cx) if cx else '', record['elapsed_ms']))
    else:
        for report in reports:
            out.write(report.to_line() + '\n')


async def cmd_verify(args) -> int:
    cfg = VerifyConfig(
        to=config.VERIFY_DEFAULT_TO if args.to is None else args.to,
        fib_k=args.fib_k if args.fib_k is not None else config.VERIFY_FIB_K,
        k_max=args.k_max if args.k_max is not None else config.VERIFY_K_MAX,
        workers=args.workers if args.workers is not None else config.VERIFY_WORKERS,
        oracle_samples=(args.oracle_samples if args.oracle_samples is not None
                        else config.FLOOR_ORACLE_SAMPLES),
        checks=args.check or None,
    )
    if min(cfg.workers, cfg.fib_k, cfg.k_max, cfg.oracle_samples) < 1:
        raise UsageError("--workers、--fib-k、--k-max、--oracle-samples 必须为正整数")
    try:
        build_plan(cfg)
    except ValueError as e:
        raise UsageError(str(e)) from None

    reports = run_all(cfg)
    with _output(args.out) as out:
        _write_reports(reports, args.format, out)

    if args.record:
        async with Database() as db:
            await db.save_run(reports, cfg.to_dict())

    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


# ==================== scatter ====================

async def cmd_scatter(args) -> int:
    """(n, W(n)) 以及两条预测直线 ⌊γn⌋、⌊φn⌋+1"""
    to = 68 if args.to is None else args.to
    with _output(args.out) as out:
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(('n', 'W', 'lower_line', 'upper_line'))
        for n in range(1, to + 1):
            writer.writerow((n, wythoff_swap(n), floor_scale(GOLDEN_GAMMA, n), floor_scale(PHI, n) + 1))
    return EXIT_OK


# ==================== oeis-diff ====================

async def cmd_oeis_diff(args) -> int:
    seq_id = _sequence(args)
    target = target_for(seq_id)
    a_number = args.a_number or (target.a_number if target else None)
    if a_number is None:
        raise UsageError(f"{seq_id} 没有默认的 OEIS 编号，请用 --a-number 指定")
    shift = args.shift if args.shift is not None else (target.offset_map.shift if target else 0)
    mode = FetchMode.ONLINE if args.online else FetchMode.OFFLINE
    if target is not None and target.reconstruction:
        logger.info(f"{seq_id} 是重构序列: {target.note}")

    db = None
    if args.record:
        db = Database()
        await db.connect()
    try:
        try:
            bfile = await BFileRepository(db=db).fetch(a_number, mode)
        except ValueError as e:
            if isinstance(e, BFileFormatError):
                raise
            raise UsageError(str(e)) from None
        try:
            report = diff(seq_id, bfile, OffsetMap(shift), args.limit)
        except DiffConfigError as e:
            raise UsageError(str(e)) from None
        print(report.to_line())
        if db is not None:
            await db.save_run([report], {'sequence': str(seq_id), 'a_number': a_number,
                                         'shift': shift, 'limit': args.limit, 'mode': mode.value})
    finally:
        if db is not None:
            await db.close()
    return EXIT_OK if report.ok else EXIT_FAILED


# ==================== history ====================

async def cmd_history(args) -> int:
    async with Database() as db:
        if args.run is not None:
            records = await db.get_run_reports(args.run)
            if not records:
                print(f"没有 run #{args.run} 的记录", file=sys.stderr)
                return EXIT_FAILED
            for record in records:
                status = 'PASS' if record['failed'] == 0 else 'FAIL'
                print(f"{status} {record['name']} [{record['lo']},{record['hi']}] "
                      f"passed={record['passed']} failed={record['failed']}")
            return EXIT_OK

        for run in await db.get_recent_runs(args.limit):
            status = 'PASS' if run['failed'] == 0 else 'FAIL'
            print(f"#{run['id']} {run['started_at']} {status} checks={run['total']} failed={run['failed']}")
        stats = await db.get_fetch_stats()
        if stats.get('total'):
            print(f"b-file: fixture={stats['fixture']} cache={stats['cache']} network={stats['network']}")
    return EXIT_OK


# ==================== 参数解析 ====================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='hoflab', description='慢 Beatty 序列与 Hofstadter 型递推的精确计算与验证')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', help='生成序列')
    gen.add_argument('sequence', help='序列名，如 G、W、Wbar、Hk、Wpell')
    gen.add_argument('--from', dest='from_', type=int, default=None, help='起始下标（默认为序列起点）')
    gen.add_argument('--to', type=int, default=None, help=f'结束下标（默认 {config.VERIFY_DEFAULT_TO}）')
    gen.add_argument('--k', type=int, default=None, help='Hk 的参数 k')
    gen.add_argument('--format', choices=('plain', 'csv'), default='plain')
    gen.add_argument('--out', default=None, help='输出文件（默认标准输出）')
    gen.set_defaults(handler=cmd_gen)

    ver = sub.add_parser('verify', help='运行定理验证')
    ver.add_argument('--to', type=int, default=None, help=f'下标上限（默认 {config.VERIFY_DEFAULT_TO}）')
    ver.add_argument('--check', action='append', default=[],
                     help=f"只运行指定检查，可重复（{', '.join(CHECK_NAMES)}）")
    ver.add_argument('--fib-k', type=int, default=None, help='斐波那契下标 k 的上限')
    ver.add_argument('--k-max', type=int, default=None, help='Celaya–Ruskey 参数 k 的上限')
    ver.add_argument('--workers', type=int, default=None, help='并行进程数')
    ver.add_argument('--oracle-samples', type=int, default=None,
                     help=f'精确取整对拍的样本数（默认 {config.FLOOR_ORACLE_SAMPLES}）')
    ver.add_argument('--format', choices=('text', 'json', 'csv'), default='text')
    ver.add_argument('--record', action='store_true', help='把结果写入验证历史数据库')
    ver.add_argument('--out', default=None)
    ver.set_defaults(handler=cmd_verify)

    sca = sub.add_parser('scatter', help='输出 (n, W(n)) 散点数据')
    sca.add_argument('--to', type=int, default=None, help='点数（默认 68）')
    sca.add_argument('--out', default=None)
    sca.set_defaults(handler=cmd_scatter)

    odf = sub.add_parser('oeis-diff', help='与 OEIS b-file 比对')
    odf.add_argument('sequence')
    odf.add_argument('--k', type=int, default=None)
    odf.add_argument('--a-number', default=None, help='A 编号（默认取目录中的对应编号）')
    odf.add_argument('--shift', type=int, default=None, help='b-file 下标 = 序列下标 + shift')
    odf.add_argument('--limit', type=int, default=None, help='最多比对的项数')
    mode = odf.add_mutually_exclusive_group()
    mode.add_argument('--offline', action='store_true', default=True, help='只用本地样本和缓存（默认）')
    mode.add_argument('--online', action='store_true', help='允许从 OEIS 下载')
    odf.add_argument('--record', action='store_true', help='记录获取日志和比对结果')
    odf.set_defaults(handler=cmd_oeis_diff)

    his = sub.add_parser('history', help='查看验证历史')
    his.add_argument('--limit', type=int, default=10)
    his.add_argument('--run', type=int, default=None, help='查看某次运行的明细')
    his.set_defaults(handler=cmd_history)
    return parser


def setup_logging():
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=getattr(logging, config.LOG_LEVEL, logging.INFO),
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """解析参数并执行子命令，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging()
    try:
        return asyncio.run(args.handler(args))
    except UsageError as e:
        print(f"hoflab {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (FixtureMissingError, FetchError, BFileFormatError) as e:
        print(f"hoflab {args.command}: {e}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as e:
        logger.error(f"I/O 错误: {e}", exc_info=True)
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
