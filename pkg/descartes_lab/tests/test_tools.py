import pytest

from descartes_lab.tools.definitions import tool_definitions
from descartes_lab.tools.handlers import ToolExecutor
from descartes_lab.utils.guard import RequestGuard
from descartes_lab.utils.settings import LabSettings

TOOL_NAMES = {"classify_couple", "admissible_pairs", "build_witness", "search_witness", "verify_suite"}


def _executor(**overrides) -> ToolExecutor:
    return ToolExecutor(RequestGuard(LabSettings(threads=1, **overrides)))


def test_tool_definitions_include_required_tools():
    names = {tool["name"] for tool in tool_definitions()}
    assert TOOL_NAMES == names


def test_tool_schemas_are_closed_objects():
    for tool in tool_definitions():
        assert tool["input_schema"]["type"] == "object"
        assert tool["input_schema"]["additionalProperties"] is False
        assert tool["output_schema"]["type"] == "object"


def test_classify_couple_reports_nonrealizable_fact():
    result = _executor().execute("classify_couple", {"degree": 9, "pattern": "S(3,4,3)", "ap": [0, 7]})

    assert result["success"] is True
    assert result["classification"]["status"] == "NonRealizable"
    assert result["classification"]["reason"] == "Prop3-fact"


def test_classify_couple_with_witness():
    result = _executor().execute(
        "classify_couple",
        {"degree": 11, "pattern": "S(2,4,6)", "ap": [0, 9], "with_witness": True},
    )

    assert result["classification"]["status"] == "Realizable"
    assert result["classification"]["witness"]


def test_classify_couple_rejects_bad_requests():
    executor = _executor(max_couple_degree=8)

    too_big = executor.execute("classify_couple", {"degree": 9, "pattern": "S(3,4,3)", "ap": [0, 7]})
    short_ap = _executor().execute("classify_couple", {"degree": 2, "pattern": "+-+", "ap": [0]})
    inadmissible = _executor().execute("classify_couple", {"degree": 2, "pattern": "+-+", "ap": [1, 0]})
    garbage = _executor().execute("classify_couple", {"degree": 2, "pattern": "rm -rf", "ap": [0, 0]})

    assert too_big["success"] is False
    assert "exceeds" in too_big["error"]
    assert short_ap["success"] is False
    assert inadmissible["success"] is False
    assert garbage["success"] is False


def test_admissible_pairs_tool():
    result = _executor().execute("admissible_pairs", {"pattern": "+-+"})

    assert result["success"] is True
    assert result["changes"] == 2
    assert result["pairs"] == [[2, 0], [0, 0]]


def test_build_witness_tool():
    executor = _executor()

    built = executor.execute("build_witness", {"degree": 2, "pattern": "+-+", "ap": [0, 0]})
    missing = executor.execute("build_witness", {"degree": 9, "pattern": "S(3,4,3)", "ap": [0, 7]})

    assert built["success"] is True
    assert built["witness"]["coeffs"] == "2/1,-2/1,1/1"
    assert missing["success"] is False


def test_search_witness_tool():
    executor = _executor(max_search_budget=5000)

    found = executor.execute(
        "search_witness", {"degree": 3, "pattern": "+--+", "ap": [0, 1], "method": "grid", "budget": 2000}
    )
    refused = executor.execute(
        "search_witness", {"degree": 3, "pattern": "+--+", "ap": [0, 1], "budget": 10**6}
    )

    assert found["success"] is True
    assert found["found"] is True
    assert found["witness"]["construction"] == "search"
    assert refused["success"] is False


def test_verify_suite_tool():
    executor = _executor()

    report = executor.execute("verify_suite", {"suite": "lemmas"})
    unknown = executor.execute("verify_suite", {"suite": "everything"})

    assert report["success"] is True
    assert report["report"]["passed"] is True
    assert unknown["success"] is False


def test_unsupported_tool_raises():
    with pytest.raises(ValueError):
        _executor().execute("launch_app", {})
