"""Group-spec parsing, output formats, and exit codes of the command line."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crg.cli import (
    ALIASES,
    Coxeter,
    Exceptional,
    Series,
    build_group,
    main,
    parse_group,
)

series_specs = st.builds(
    Series,
    m=st.integers(min_value=1, max_value=40).map(lambda e: e),
    p=st.just(0),
    r=st.integers(min_value=1, max_value=9),
).flatmap(
    lambda s: st.sampled_from([1, 2]).map(
        lambda q: Series(s.m * q, s.m, s.r)
    )
)

coxeter_specs = st.one_of(
    st.builds(Coxeter, kind=st.sampled_from("ABD"), rank=st.integers(1, 12)),
    st.builds(Coxeter, kind=st.just("I2"), rank=st.integers(2, 40)),
    st.sampled_from([Coxeter(k) for k in ("H3", "H4", "F4", "E6", "E7", "E8")]),
)

exceptional_specs = st.sampled_from(
    [Exceptional(k) for k in (12, 13, 22, 24)]
)

group_specs = st.one_of(series_specs, coxeter_specs, exceptional_specs)


@given(group_specs)
def test_parse_inverts_render(spec):
    assert parse_group(spec.render()) == spec


def test_parse_examples():
    assert parse_group("G(3,3,3)") == Series(3, 3, 3)
    assert parse_group("G(6,3,2)") == Series(6, 3, 2)
    assert parse_group(" B4 ") == Coxeter("B", 4)
    assert parse_group("I2(7)") == Coxeter("I2", 7)
    assert parse_group("E8") == Coxeter("E8")
    assert parse_group("G22") == Exceptional(22)
    for index, kind in ALIASES.items():
        assert parse_group(f"G{index}") == Coxeter(kind)


def test_parse_rejects_unsupported_series():
    with pytest.raises(ValueError, match="pseudo-reflection series unsupported"):
        parse_group("G(6,2,3)")
    with pytest.raises(ValueError, match="pseudo-reflection series unsupported"):
        parse_group("G(5,1,4)")


def test_parse_rejects_missing_data():
    with pytest.raises(ValueError, match="no generator data for G27"):
        parse_group("G27")
    with pytest.raises(ValueError, match="no generator data for G99"):
        parse_group("G99")


def test_parse_syntax_errors_carry_position():
    with pytest.raises(ValueError, match=r"syntax error at position 2"):
        parse_group("G(,3,3)")
    with pytest.raises(ValueError, match=r"syntax error at position 0"):
        parse_group("Q5")
    with pytest.raises(ValueError, match=r"syntax error at position 5"):
        parse_group("I2(7)x")


def test_build_group_dispatch():
    assert build_group(Series(3, 3, 3)).name == "G(3,3,3)"
    assert build_group(Coxeter("A", 3)).name == "A3"
    assert build_group(Coxeter("H3")).name == "H3"
    assert len(build_group(Exceptional(12)).reflections) == 12


def test_discriminants_json_is_byte_exact(capsys):
    code = main(["discriminants", "--group", "G(3,3,3)", "--format", "json"])
    assert code == 0
    out = capsys.readouterr().out
    assert out == '{"sign":-1,"factors":[[9,1],[0,8]],"remainder":[1]}\n'


def test_discriminants_json_is_deterministic(capsys):
    main(["discriminants", "--group", "B3", "--format", "json"])
    first = capsys.readouterr().out
    main(["discriminants", "--group", "B3", "--format", "json"])
    assert capsys.readouterr().out == first


def test_discriminants_text_and_csv(capsys):
    main(["discriminants", "--group", "A3", "--format", "text"])
    text = capsys.readouterr().out
    assert "(m-5)" in text
    main(["discriminants", "--group", "A3", "--format", "csv"])
    csv_out = capsys.readouterr().out.splitlines()
    assert csv_out[0] == "class,size,sign,factors,remainder"
    assert len(csv_out) == 2


def test_verify_core_passes(capsys):
    code = main(["verify", "--group", "A2", "--suite", "core"])
    out = capsys.readouterr().out
    assert code == 0
    assert "0 failed" in out
    assert "integrability" in out


def test_verify_all_suites_on_a2(capsys):
    code = main(["verify", "--group", "A2", "--suite", "all"])
    out = capsys.readouterr().out
    assert code == 0
    assert "dihedral-zero-point" in out
    assert "krammer-braid" in out


def test_verify_skips_tensor_on_large_class(capsys):
    code = main(["verify", "--group", "H3", "--suite", "tensor"])
    out = capsys.readouterr().out
    assert code == 0
    assert "SKIP" in out and "--force" in out


def test_tables_prop81(capsys):
    code = main(["tables", "--which", "prop81"])
    out = capsys.readouterr().out
    assert code == 0
    assert "0 group failures" in out


def test_tables_rejects_bogus_fixture(tmp_path, capsys):
    bad = [
        {
            "group": "A2",
            "class_size": 3,
            "sign": 1,
            "factors": [[5, 1], [0, 2]],
        }
    ]
    path = tmp_path / "tables.json"
    path.write_text(json.dumps(bad))
    code = main(["tables", "--which", "prop81", "--fixture", str(path)])
    assert code == 1
    assert "FAIL" in capsys.readouterr().out


def test_conjecture_output_is_stable(capsys):
    argv = ["conjecture", "--e-max", "5", "--r-max", "3"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    report = json.loads(first)
    assert report["all_match"] is True
    assert {(case["e"], case["r"]) for case in report["cases"]} == {
        (3, 3),
        (5, 3),
    }


def test_list_groups(capsys):
    assert main(["list-groups"]) == 0
    out = capsys.readouterr().out
    assert "G12" in out and "G24" in out
    assert "G23=H3" in out


def test_usage_errors_exit_2(capsys):
    assert main(["discriminants", "--group", "Q5"]) == 2
    assert "syntax error" in capsys.readouterr().err
    assert main(["verify", "--group", "G(6,2,3)"]) == 2
    assert "unsupported" in capsys.readouterr().err


def test_verify_failure_exits_1(capsys):
    code = main(["verify", "--group", "A2", "--suite", "spectral", "--m", "1"])
    assert code == 1
    assert "FAIL" in capsys.readouterr().out
