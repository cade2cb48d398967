import random
from fractions import Fraction

import pytest

from orecentral.basepoly import BasePoly, OreAlgebra
from orecentral.errors import ConfigError, ParseError
from orecentral.ore import OrePoly, format_operator, random_operator
from orecentral.parsing import (
    PRESETS,
    load_algebra,
    parse_base,
    parse_config,
    parse_operator,
)

y = BasePoly.gen()


def test_parse_base_examples():
    assert parse_base("y^2 + 1") == y**2 + 1
    assert parse_base("0") == BasePoly()
    assert parse_base("(1/2)*y - 3") == BasePoly([-3, Fraction(1, 2)])
    assert parse_base("-(y - 1)^2") == -(y**2) + 2 * y - 1


def test_parse_operator_examples(weyl, qpower):
    assert str(parse_operator("x*y", weyl)) == "y*x + 1"
    assert parse_operator("x^2 + y*x", weyl) == OrePoly(weyl, [0, y, 1])
    assert parse_operator("x*y*x", qpower) == OrePoly.x(qpower) * OrePoly.y(qpower) * OrePoly.x(qpower)
    assert str(parse_operator("x*y*x", qpower)) == "y^2*x^2"


@pytest.mark.parametrize(
    "text, offset",
    [("2y", 1), ("y +", 3), ("(y", 2), ("y^x", 2), ("y ^ -1", 4), ("z", 0), ("1/0", 2), ("y $ 1", 2), ("", 0)],
)
def test_syntax_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_base(text)
    assert info.value.offset == offset


def test_unexpected_x():
    with pytest.raises(ParseError, match="unexpected x"):
        parse_base("y + x")


@pytest.mark.parametrize("name", ["weyl", "qpower"])
def test_roundtrip(name):
    alg = load_algebra(name)
    rng = random.Random(5)
    for _ in range(200):
        P = random_operator(alg, rng, 4, 4)
        P = P.scale(Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 4)))
        assert parse_operator(format_operator(P), alg) == P


def test_config(tmp_path):
    cfg = parse_config("# comment\nfield = Q\nsigma_y = y^2  # q-power\ndelta_y=0\n")
    assert cfg.to_algebra() == OreAlgebra.qpower()
    path = tmp_path / "a.cfg"
    path.write_text(PRESETS["weyl"].dumps())
    assert load_algebra(str(path)) == OreAlgebra.weyl()


@pytest.mark.parametrize(
    "text",
    ["sigma_y=y\n", "sigma_y=y\ndelta_y=1\nfoo=2\n", "field=GF2\nsigma_y=y\ndelta_y=0\n", "sigma_y\n"],
)
def test_bad_config(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_bad_config_values():
    with pytest.raises(ConfigError):
        parse_config("sigma_y=0\ndelta_y=0\n").to_algebra()
    with pytest.raises(ConfigError):
        parse_config("sigma_y=y*x\ndelta_y=0\n").to_algebra()
    with pytest.raises(ConfigError):
        load_algebra("no-such-file.cfg")
