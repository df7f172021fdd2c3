"""SQLite store for suite runs and the counterexamples they turned up."""

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import TYPE_CHECKING

from sqlalchemy import (
    Boolean,
    Column,
    DateTime,
    Integer,
    String,
    Text,
    UniqueConstraint,
    create_engine,
)
from sqlalchemy.orm import declarative_base, sessionmaker

from .config import data_dir

if TYPE_CHECKING:
    from .verifier import SuiteResult

Base = declarative_base()


def default_db_path() -> Path:
    return data_dir() / "findings.db"


class SuiteRun(Base):
    __tablename__ = "suite_runs"

    id = Column(Integer, primary_key=True, autoincrement=True)
    suite = Column(String, nullable=False, index=True)
    tier = Column(String, nullable=False)
    n_max = Column(Integer, nullable=False)
    filter = Column(String, nullable=False)
    graphs_tested = Column(Integer, nullable=False)
    counterexamples = Column(Integer, nullable=False)
    elapsed_ms = Column(Integer, default=0)
    started_at = Column(DateTime, nullable=False, default=lambda: datetime.now(timezone.utc))


class Finding(Base):
    __tablename__ = "findings"

    id = Column(Integer, primary_key=True, autoincrement=True)
    suite = Column(String, nullable=False, index=True)
    graph6 = Column(String, nullable=False)
    detail = Column(Text, default="{}")
    discovered_at = Column(DateTime, nullable=False, default=lambda: datetime.now(timezone.utc))
    reviewed = Column(Boolean, default=False)

    __table_args__ = (
        UniqueConstraint("suite", "graph6", name="uq_suite_graph"),
    )

    @property
    def detail_dict(self) -> dict:
        return json.loads(self.detail or "{}")


def _get_session(db_path: Path | None = None):
    path = db_path or default_db_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    engine = create_engine(f"sqlite:///{path}")
    Base.metadata.create_all(engine)
    return sessionmaker(bind=engine, expire_on_commit=False)()


def record_run(result: "SuiteResult", db_path: Path | None = None) -> list[Finding]:
    """Store a suite run and its counterexamples. Returns only the findings not seen before."""
    session = _get_session(db_path)
    new_findings = []
    try:
        session.add(
            SuiteRun(
                suite=result.suite_id,
                tier=result.tier,
                n_max=result.n_max,
                filter=result.filter,
                graphs_tested=result.graphs_tested,
                counterexamples=len(result.counterexamples),
                elapsed_ms=result.elapsed_ms,
            )
        )
        for example in result.counterexamples:
            exists = (
                session.query(Finding)
                .filter_by(suite=result.suite_id, graph6=example.graph6)
                .first()
            )
            if not exists:
                finding = Finding(
                    suite=result.suite_id,
                    graph6=example.graph6,
                    detail=json.dumps(example.detail, sort_keys=True),
                )
                session.add(finding)
                new_findings.append(finding)
        session.commit()
    finally:
        session.close()
    return new_findings


def get_findings(suite: str | None = None, db_path: Path | None = None) -> list[Finding]:
    """Stored counterexamples, optionally for one suite, newest first."""
    session = _get_session(db_path)
    try:
        q = session.query(Finding)
        if suite:
            q = q.filter_by(suite=suite)
        return q.order_by(Finding.discovered_at.desc(), Finding.id.desc()).all()
    finally:
        session.close()


def get_runs(suite: str | None = None, db_path: Path | None = None) -> list[SuiteRun]:
    """Recorded suite runs, newest first."""
    session = _get_session(db_path)
    try:
        q = session.query(SuiteRun)
        if suite:
            q = q.filter_by(suite=suite)
        return q.order_by(SuiteRun.started_at.desc(), SuiteRun.id.desc()).all()
    finally:
        session.close()


def finding_count(suite: str | None = None, db_path: Path | None = None) -> int:
    session = _get_session(db_path)
    try:
        q = session.query(Finding)
        if suite:
            q = q.filter_by(suite=suite)
        return q.count()
    finally:
        session.close()


def mark_reviewed(finding_ids: list[int], db_path: Path | None = None) -> None:
    """Mark findings as reviewed by their primary key IDs."""
    if not finding_ids:
        return
    session = _get_session(db_path)
    try:
        session.query(Finding).filter(Finding.id.in_(finding_ids)).update(
            {Finding.reviewed: True}, synchronize_session=False
        )
        session.commit()
    finally:
        session.close()
