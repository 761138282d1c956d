import pytest

from helpers import FIXTURES, basket_text, make_db


@pytest.fixture
def db1():
    return make_db("db1")


@pytest.fixture
def db2():
    return make_db("db2")


@pytest.fixture
def db3():
    return make_db("db3")


@pytest.fixture
def db4():
    return make_db("db4")


@pytest.fixture
def db5():
    return make_db("db5")


@pytest.fixture
def db6():
    return make_db("db6")


@pytest.fixture
def db7():
    return make_db("db7")


@pytest.fixture
def basket_files(tmp_path):
    """Every fixture database written as <name>.basket under tmp_path."""
    paths = {}
    for name in FIXTURES:
        path = tmp_path / f"{name}.basket"
        path.write_text(basket_text(name), encoding="utf-8")
        paths[name] = str(path)
    return paths
