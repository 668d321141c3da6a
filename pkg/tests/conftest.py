import pytest

from imark import GameSpec, build_table


@pytest.fixture(scope="session")
def table_for():
    """Session cache of ground-truth tables, grown on demand.

    Returns a getter: ``table_for(spec, max_n)`` yields a table covering at
    least 0..max_n (possibly more, since larger cached tables are reused).
    """
    cache: dict[GameSpec, object] = {}

    def get(spec: GameSpec, max_n: int):
        have = cache.get(spec)
        if have is None or have.max_n < max_n:
            cache[spec] = build_table(spec, max_n)
            have = cache[spec]
        return have

    return get
