import pytest

import adc.cli
from utilities.config_utils import load_json_resource, read_env_int
from utilities.text_formatting_utils import format_table, pad_string


def test_resources_load_beside_their_anchor():
    strings = load_json_resource("strings.json", adc.cli.__file__)
    assert "negative_bound" in strings["errors"]


def test_resources_need_an_anchor():
    with pytest.raises(TypeError):
        load_json_resource("strings.json")


def test_env_integers(monkeypatch):
    monkeypatch.delenv("ADC_TEST_SETTING", raising=False)
    assert read_env_int("ADC_TEST_SETTING", 7) == 7
    monkeypatch.setenv("ADC_TEST_SETTING", " ")
    assert read_env_int("ADC_TEST_SETTING", 7) == 7
    monkeypatch.setenv("ADC_TEST_SETTING", "3")
    assert read_env_int("ADC_TEST_SETTING", 7, minimum=1) == 3
    monkeypatch.setenv("ADC_TEST_SETTING", "0")
    with pytest.raises(ValueError, match="at least 1"):
        read_env_int("ADC_TEST_SETTING", 7, minimum=1)
    monkeypatch.setenv("ADC_TEST_SETTING", "many")
    with pytest.raises(ValueError, match="ADC_TEST_SETTING must be an integer"):
        read_env_int("ADC_TEST_SETTING", 7)


def test_wide_characters_count_twice():
    assert pad_string("漢", 4, "left") == "漢  "
    assert pad_string("ab", 4) == "  ab"
    with pytest.raises(ValueError, match="Unknown alignment"):
        pad_string("ab", 4, "centre")


def test_table_layout():
    rows = [{"atom": "<01>", "n": "1"}, {"atom": "<012>", "n": "12"}]
    assert format_table(rows, ["atom", "n"], ["left", "right"]) == "atom   n\n<01>   1\n<012> 12"
