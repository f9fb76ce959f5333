"""
数据库模块 - 使用 aiosqlite 异步保存验证历史和 b-file 获取日志
"""
import aiosqlite
import json
import logging
from typing import Optional, Dict, Any, List, Iterable
import config

logger = logging.getLogger(__name__)


class Database:
    """异步数据库操作类"""

    def __init__(self, db_path: Optional[str] = None):
        self.db_path = db_path or config.HOFLAB_DB_PATH
        self.db = None

    async def connect(self):
        """连接数据库并初始化表"""
        self.db = await aiosqlite.connect(self.db_path)
        # 启用WAL模式提高并发性能
        await self.db.execute("PRAGMA journal_mode=WAL")
        await self.db.execute("PRAGMA foreign_keys=ON")
        await self._create_tables()
        logger.info(f"数据库已连接: {self.db_path}")

    async def close(self):
        """关闭数据库连接"""
        if self.db:
            await self.db.close()
            self.db = None
            logger.info("数据库已关闭")

    async def __aenter__(self) -> 'Database':
        await self.connect()
        return self

    async def __aexit__(self, exc_type, exc, tb):
        await self.close()

    async def _create_tables(self):
        """创建数据库表"""

        # 验证运行记录
        await self.db.execute("""
            CREATE TABLE IF NOT EXISTS verify_runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                started_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                total INTEGER NOT NULL,
                failed INTEGER NOT NULL,
                config_json TEXT
            )
        """)

        # 每项检查的结果
        await self.db.execute("""
            CREATE TABLE IF NOT EXISTS check_reports (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                run_id INTEGER NOT NULL,
                name TEXT NOT NULL,
                lo INTEGER,
                hi INTEGER,
                passed INTEGER,
                failed INTEGER,
                counterexample_json TEXT,
                elapsed_ms REAL,
                FOREIGN KEY (run_id) REFERENCES verify_runs(id) ON DELETE CASCADE
            )
        """)

        # b-file 获取日志（样本 / 缓存 / 网络）
        await self.db.execute("""
            CREATE TABLE IF NOT EXISTS bfile_fetch_logs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                a_number TEXT NOT NULL,
                source TEXT NOT NULL,
                fetched_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            )
        """)

        await self.db.execute("""
            CREATE INDEX IF NOT EXISTS idx_check_reports_run
            ON check_reports(run_id)
        """)

        await self.db.commit()

    async def save_run(self, reports: Iterable, run_config: Optional[Dict[str, Any]] = None) -> Optional[int]:
        """
        保存一次验证运行

        Args:
            reports: CheckReport 列表
            run_config: 运行参数（存为 JSON）

        Returns:
            运行 ID，失败返回 None
        """
        records = [r.to_record() for r in reports]
        try:
            cursor = await self.db.execute("""
                INSERT INTO verify_runs (total, failed, config_json)
                VALUES (?, ?, ?)
            """, (len(records), sum(1 for r in records if r['failed']),
                  json.dumps(run_config or {}, ensure_ascii=False)))
            run_id = cursor.lastrowid
            await cursor.close()

            await self.db.executemany("""
                INSERT INTO check_reports
                    (run_id, name, lo, hi, passed, failed, counterexample_json, elapsed_ms)
                VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            """, [
                (run_id, r['name'], r['lo'], r['hi'], r['passed'], r['failed'],
                 json.dumps(r['counterexample']) if r['counterexample'] is not None else None,
                 r['elapsed_ms'])
                for r in records
            ])
            await self.db.commit()
            logger.info(f"验证记录已保存: run #{run_id}，{len(records)} 项检查")
            return run_id
        except Exception as e:
            logger.error(f"保存验证记录失败: {e}")
            return None

    async def get_recent_runs(self, limit: int = 10) -> List[Dict[str, Any]]:
        """最近的验证运行，按 ID 倒序"""
        try:
            cursor = await self.db.execute("""
                SELECT id, started_at, total, failed, config_json
                FROM verify_runs
                ORDER BY id DESC
                LIMIT ?
            """, (limit,))
            rows = await cursor.fetchall()
            await cursor.close()
            return [
                {
                    'id': row[0],
                    'started_at': row[1],
                    'total': row[2],
                    'failed': row[3],
                    'config': json.loads(row[4]) if row[4] else {},
                }
                for row in rows
            ]
        except Exception as e:
            logger.error(f"查询验证记录失败: {e}")
            return []

    async def get_run_reports(self, run_id: int) -> List[Dict[str, Any]]:
        """某次运行的全部检查结果（与 CheckReport.to_record 同形）"""
        try:
            cursor = await self.db.execute("""
                SELECT name, lo, hi, passed, failed, counterexample_json, elapsed_ms
                FROM check_reports
                WHERE run_id = ?
                ORDER BY id
            """, (run_id,))
            rows = await cursor.fetchall()
            await cursor.close()
            return [
                {
                    'name': row[0],
                    'lo': row[1],
                    'hi': row[2],
                    'passed': row[3],
                    'failed': row[4],
                    'counterexample': json.loads(row[5]) if row[5] else None,
                    'elapsed_ms': row[6],
                }
                for row in rows
            ]
        except Exception as e:
            logger.error(f"查询检查结果失败: {e}")
            return []

    async def log_fetch(self, a_number: str, source: str):
        """
        记录 b-file 获取日志

        Args:
            a_number: A 编号
            source: 'fixture'、'cache' 或 'network'
        """
        try:
            await self.db.execute("""
                INSERT INTO bfile_fetch_logs (a_number, source)
                VALUES (?, ?)
            """, (a_number, source))
            await self.db.commit()
        except Exception as e:
            logger.error(f"记录获取日志失败: {e}")

    async def get_fetch_stats(self) -> Dict[str, int]:
        """各来源的获取次数"""
        try:
            cursor = await self.db.execute("""
                SELECT source, COUNT(*) FROM bfile_fetch_logs GROUP BY source
            """)
            rows = await cursor.fetchall()
            await cursor.close()
            stats = {'fixture': 0, 'cache': 0, 'network': 0}
            stats.update({row[0]: row[1] for row in rows})
            stats['total'] = sum(row[1] for row in rows)
            return stats
        except Exception as e:
            logger.error(f"获取统计信息失败: {e}")
            return {}
