"""
配置文件 - 用于管理 hoflab 的运行参数
所有参数均可通过 .env 文件或环境变量覆盖
"""
import os
from dotenv import load_dotenv

# 加载环境变量
load_dotenv()

BASE_DIR = os.path.dirname(os.path.abspath(__file__))


def _default_cache_dir() -> str:
    """平台默认缓存目录"""
    if os.name == 'nt':
        root = os.getenv('LOCALAPPDATA') or os.path.expanduser('~')
        return os.path.join(root, 'hoflab')
    root = os.getenv('XDG_CACHE_HOME') or os.path.join(os.path.expanduser('~'), '.cache')
    return os.path.join(root, 'hoflab')


def _int_env(name: str, default: int) -> int:
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return default


# ==================== OEIS b-file 配置 ====================

# b-file 缓存目录（在线下载的文件原样保存在这里）
HOFLAB_CACHE_DIR = os.getenv('HOFLAB_CACHE_DIR', '').strip() or _default_cache_dir()

# 离线样本目录（仓库自带前1000项）
HOFLAB_FIXTURE_DIR = os.getenv('HOFLAB_FIXTURE_DIR', '').strip() or os.path.join(BASE_DIR, 'fixtures')

# OEIS 地址
OEIS_BASE_URL = os.getenv('OEIS_BASE_URL', 'https://oeis.org').strip().rstrip('/')

# 网络请求配置
FETCH_TIMEOUT = _int_env('FETCH_TIMEOUT', 30)
FETCH_RETRIES = _int_env('FETCH_RETRIES', 3)

# ==================== 数据库配置 ====================

# 验证历史数据库
HOFLAB_DB_PATH = os.getenv('HOFLAB_DB_PATH', 'hoflab_runs.db').strip()

# ==================== 计算配置 ====================

# 斐波那契词迭代上限（|μ^m(0)| = F_{m+2}，m=35 约两千四百万字符）
MORPHISM_MAX_ITER = _int_env('MORPHISM_MAX_ITER', 35)

# ==================== 验证配置 ====================

# 默认验证范围（0..18 的小表，便于快速冒烟）
VERIFY_DEFAULT_TO = _int_env('VERIFY_DEFAULT_TO', 18)
VERIFY_FIB_K = _int_env('VERIFY_FIB_K', 40)
VERIFY_K_MAX = _int_env('VERIFY_K_MAX', 5)
VERIFY_WORKERS = _int_env('VERIFY_WORKERS', 1)

# 精确取整与连分数预言机对拍
FLOOR_ORACLE_SAMPLES = _int_env('FLOOR_ORACLE_SAMPLES', 10000)
FLOOR_ORACLE_N_MAX = _int_env('FLOOR_ORACLE_N_MAX', 10 ** 12)
FLOOR_ORACLE_SEED = _int_env('FLOOR_ORACLE_SEED', 20240101)

# 日志级别
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').strip().upper() or 'INFO'

# 验证配置
if FETCH_TIMEOUT <= 0 or FETCH_RETRIES < 1:
    raise ValueError("请在 .env 文件中设置正确的 FETCH_TIMEOUT（>0）和 FETCH_RETRIES（>=1）")

if MORPHISM_MAX_ITER < 1:
    raise ValueError("MORPHISM_MAX_ITER 必须为正整数")

if FLOOR_ORACLE_SAMPLES < 1:
    raise ValueError("FLOOR_ORACLE_SAMPLES 必须为正整数")

if VERIFY_WORKERS < 1:
    raise ValueError("VERIFY_WORKERS 必须为正整数")

if LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
    raise ValueError(f"无效的 LOG_LEVEL: {LOG_LEVEL}")
