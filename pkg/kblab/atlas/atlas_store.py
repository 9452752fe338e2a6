"""
SQLite Atlas Cache

Generated atlas levels are persisted in a SQLite database using SQLAlchemy
Core (not ORM) so that the minutes-long n = 8 generation runs once. The
schema is a single table:

    graphs(n, position, graph6, edges, twin_free)

with (n, position) as primary key, position being the generation order
within a level. Levels are written in one transaction and read back in
position order with pandas.
"""

from pathlib import Path
from typing import Iterable, Optional, Tuple, Union

import pandas as pd
from sqlalchemy import (
    Boolean,
    Column,
    Index,
    Integer,
    MetaData,
    Table,
    Text,
    create_engine,
    inspect,
    text,
)

from kblab.atlas.atlas_constants import (
    GRAPHS_EDGES,
    GRAPHS_GRAPH6,
    GRAPHS_N,
    GRAPHS_POSITION,
    GRAPHS_TWIN_FREE,
    SUMMARY_CONNECTED,
    SUMMARY_N,
    SUMMARY_TWIN_FREE,
    TABLE_GRAPHS,
)
from kblab.core.console import ok
from kblab.core.errors import VerificationError
from kblab.core.formats import parse_graph6, to_graph6
from kblab.core.graph import Graph
from kblab.structure.twins import is_twin_free


def atlas_engine(db_path: Union[str, Path], echo: bool = False):
    """
    Create the SQLite engine for an atlas file, creating parent directories.

    Args:
        db_path: Path to the SQLite database file
        echo: If True, print SQL statements (default: False)

    Returns:
        SQLAlchemy engine object
    """
    Path(db_path).parent.mkdir(parents=True, exist_ok=True)
    return create_engine(f"sqlite:///{db_path}", echo=echo)


def define_graphs_table(metadata: MetaData) -> Table:
    """
    Define the graphs table: one row per isomorphism class of connected graph.

    Primary Key: (n, position)

    Args:
        metadata: SQLAlchemy MetaData object

    Returns:
        Table object for graphs
    """
    graphs = Table(
        TABLE_GRAPHS,
        metadata,
        Column(GRAPHS_N, Integer, primary_key=True, comment="Vertex count"),
        Column(
            GRAPHS_POSITION,
            Integer,
            primary_key=True,
            comment="Generation order within the level (canonical graph6 order)",
        ),
        Column(GRAPHS_GRAPH6, Text, nullable=False, comment="graph6 record in canonical labeling"),
        Column(GRAPHS_EDGES, Integer, nullable=False, comment="Edge count"),
        Column(GRAPHS_TWIN_FREE, Boolean, nullable=False, comment="True when no two vertices share N(v)"),
        comment="Connected graphs up to isomorphism",
    )
    Index("ix_graphs_n_twin_free", graphs.c[GRAPHS_N], graphs.c[GRAPHS_TWIN_FREE])
    return graphs


def create_atlas_tables(db_path: Union[str, Path]):
    """Create the atlas schema if missing and return the engine."""
    engine = atlas_engine(db_path)
    metadata = MetaData()
    define_graphs_table(metadata)
    metadata.create_all(engine)
    return engine


def _has_graphs_table(engine) -> bool:
    return inspect(engine).has_table(TABLE_GRAPHS)


def store_level(db_path: Union[str, Path], n: int, graphs: Iterable[Graph], verbose: bool = False) -> int:
    """
    Replace the stored level n with the given graphs.

    Args:
        db_path: Atlas database path
        n: Level (vertex count)
        graphs: Graphs of the level, in generation order

    Returns:
        Number of rows stored

    Raises:
        VerificationError: if the stored row count differs from the input
    """
    graphs = list(graphs)
    engine = create_atlas_tables(db_path)
    rows = pd.DataFrame({
        GRAPHS_N: [n] * len(graphs),
        GRAPHS_POSITION: list(range(len(graphs))),
        GRAPHS_GRAPH6: [to_graph6(g) for g in graphs],
        GRAPHS_EDGES: [g.m for g in graphs],
        GRAPHS_TWIN_FREE: [is_twin_free(g) for g in graphs],
    })

    with engine.begin() as conn:
        conn.execute(text(f"DELETE FROM {TABLE_GRAPHS} WHERE {GRAPHS_N} = :n"), {"n": n})
        rows.to_sql(TABLE_GRAPHS, conn, if_exists="append", index=False)

    stored = count_level(db_path, n)
    engine.dispose()
    if stored != len(graphs):
        raise VerificationError(f"Atlas level {n}: stored {stored} rows, expected {len(graphs)}")
    ok(f"Stored {stored:,} graphs of order {n} in {db_path}", verbose)
    return stored


def load_level(db_path: Union[str, Path], n: int, twin_free_only: bool = False) -> Optional[Tuple[Graph, ...]]:
    """
    Read a stored level in generation order.

    Returns:
        The graphs, or None when the database or the level is missing
    """
    if not Path(db_path).exists():
        return None
    engine = atlas_engine(db_path)
    try:
        if not _has_graphs_table(engine):
            return None
        query = f"SELECT {GRAPHS_GRAPH6} FROM {TABLE_GRAPHS} WHERE {GRAPHS_N} = :n"
        if twin_free_only:
            query += f" AND {GRAPHS_TWIN_FREE} = 1"
        query += f" ORDER BY {GRAPHS_POSITION}"
        with engine.connect() as conn:
            df = pd.read_sql(text(query), conn, params={"n": n})
    finally:
        engine.dispose()
    if df.empty:
        return None
    return tuple(parse_graph6(record) for record in df[GRAPHS_GRAPH6])


def count_level(db_path: Union[str, Path], n: int, twin_free_only: bool = False) -> int:
    """Number of stored graphs of order n (0 when absent)."""
    if not Path(db_path).exists():
        return 0
    engine = atlas_engine(db_path)
    try:
        if not _has_graphs_table(engine):
            return 0
        query = f"SELECT COUNT(*) FROM {TABLE_GRAPHS} WHERE {GRAPHS_N} = :n"
        if twin_free_only:
            query += f" AND {GRAPHS_TWIN_FREE} = 1"
        with engine.connect() as conn:
            count = conn.execute(text(query), {"n": n}).scalar()
    finally:
        engine.dispose()
    return int(count) if count is not None else 0


def level_summary(db_path: Union[str, Path]) -> pd.DataFrame:
    """
    Per-level counts of connected and twin-free graphs.

    Returns:
        pandas DataFrame with columns: n, connected, twin_free
    """
    engine = atlas_engine(db_path)
    try:
        with engine.connect() as conn:
            df = pd.read_sql(text(f"""
                SELECT
                    {GRAPHS_N} AS {SUMMARY_N},
                    COUNT(*) AS {SUMMARY_CONNECTED},
                    SUM({GRAPHS_TWIN_FREE}) AS {SUMMARY_TWIN_FREE}
                FROM {TABLE_GRAPHS}
                GROUP BY {GRAPHS_N}
                ORDER BY {GRAPHS_N}
            """), conn)
    finally:
        engine.dispose()
    return df
