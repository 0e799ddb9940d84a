"""Tests for MCP tool registration, schemas and calls."""

import json

import pytest

from cantor_sort.server import mcp

EXPECTED_TOOLS = [
    "cantor_sort_strings",
    "cantor_cached_sort",
    "cantor_suffix_array",
    "cantor_analyze_precision",
    "cantor_run_benchmark",
]


def _tool(name: str):
    tool = mcp._tool_manager._tools.get(name)
    assert tool is not None, f"Tool '{name}' not found"
    return tool


class TestToolRegistration:
    """Tests for tool registration."""

    def test_all_tools_registered(self):
        """All expected tools should be registered."""
        registered_tools = list(mcp._tool_manager._tools.keys())
        for tool_name in EXPECTED_TOOLS:
            assert tool_name in registered_tools, f"Tool '{tool_name}' not registered"

    def test_tool_count(self):
        assert len(mcp._tool_manager._tools) == len(EXPECTED_TOOLS)


class TestToolSchemas:
    """Tests for tool parameter schemas."""

    def test_schemas_have_flat_parameters(self):
        """Tools take individual parameters, never a nested 'params' object."""
        for tool_name, tool in mcp._tool_manager._tools.items():
            properties = tool.parameters.get("properties", {})
            assert "params" not in properties, f"Tool '{tool_name}' has nested 'params'"
            assert "ctx" not in tool.parameters.get("required", []), (
                f"Tool '{tool_name}' has 'ctx' in required fields"
            )

    def test_sort_strings_schema(self):
        schema = _tool("cantor_sort_strings").parameters
        assert "strings" in schema["properties"]
        assert schema.get("required", []) == ["strings"]

    def test_suffix_array_schema(self):
        schema = _tool("cantor_suffix_array").parameters
        assert "text" in schema.get("required", [])

    def test_analysis_and_bench_need_nothing(self):
        for name in ("cantor_analyze_precision", "cantor_run_benchmark"):
            assert _tool(name).parameters.get("required", []) == []


class TestToolAnnotations:
    """Tests for tool annotations."""

    def test_all_tools_read_only(self):
        for tool_name, tool in mcp._tool_manager._tools.items():
            annotations = tool.annotations
            assert annotations is not None, f"Tool '{tool_name}' has no annotations"
            assert annotations.readOnlyHint is True
            assert annotations.destructiveHint is False
            assert annotations.idempotentHint is True
            assert annotations.openWorldHint is False


class TestSortingTools:
    """Calls into the sorting tools."""

    async def test_sort_strings(self):
        result = json.loads(await _tool("cantor_sort_strings").fn(strings=["b", "ab", "aa"]))
        assert result["sorted"] == ["aa", "ab", "b"]
        assert result["permutation"] == [2, 1, 0]

    @pytest.mark.parametrize("algorithm", ["cantor", "splitwise", "baseline", "cached"])
    async def test_sort_strings_verified(self, random_words, algorithm):
        words = random_words(300)
        result = json.loads(
            await _tool("cantor_sort_strings").fn(strings=words, algorithm=algorithm, verify=True)
        )
        assert result["sorted"] == sorted(words)
        assert result["verified"] is True

    async def test_sort_strings_csv(self):
        result = await _tool("cantor_sort_strings").fn(strings=["b", "a"], format="csv")
        assert result.splitlines() == ["position,index,string", "0,1,a", "1,0,b"]

    async def test_sort_strings_custom_alphabet(self):
        result = json.loads(
            await _tool("cantor_sort_strings").fn(strings=["a", "b"], alphabet="ba")
        )
        assert result["sorted"] == ["b", "a"]

    async def test_encoding_error(self):
        result = json.loads(await _tool("cantor_sort_strings").fn(strings=["a", "B"]))
        assert result["code"] == "encoding_error"
        assert "string 1" in result["error"]

    async def test_monotonicity_error(self):
        result = json.loads(await _tool("cantor_sort_strings").fn(strings=["a"], epsilon=1))
        assert result["code"] == "monotonicity_error"

    async def test_unknown_algorithm(self):
        result = json.loads(
            await _tool("cantor_sort_strings").fn(strings=["a"], algorithm="bogo")
        )
        assert result["code"] == "configuration_error"

    async def test_cached_sort(self):
        strings = ["there", "then", "the", "a"]
        result = json.loads(
            await _tool("cantor_cached_sort").fn(strings=strings, prefixes=["th", "the"])
        )
        assert result["sorted"] == ["a", "the", "then", "there"]
        assert result["table_size"] == 2
        assert result["preprocess_symbols"] == 1 + 0 + 1 + 2

    async def test_suffix_array(self):
        result = json.loads(await _tool("cantor_suffix_array").fn(text="banana", verify=True))
        assert result["order"] == [5, 3, 1, 0, 4, 2]
        assert result["verified"] is True


class TestAnalysisTools:
    """Calls into the precision analysis tool."""

    async def test_default_report(self):
        result = json.loads(await _tool("cantor_analyze_precision").fn())
        assert result["x"] == 30
        assert result["max_chunk_len"] == 8
        assert result["min_gaps"][7]["min_gap"] == pytest.approx(4.730145e-12, rel=1e-6)

    async def test_csv_gap_table(self):
        result = await _tool("cantor_analyze_precision").fn(format="csv")
        lines = result.splitlines()
        assert lines[0] == "position,min_gap"
        assert len(lines) == 9

    async def test_non_finite_mantissa(self):
        result = json.loads(
            await _tool("cantor_analyze_precision").fn(mantissa_bits=float("inf"))
        )
        assert result["code"] == "configuration_error"

    async def test_probe_limit(self):
        result = json.loads(await _tool("cantor_analyze_precision").fn(probe_samples=-1))
        assert result["code"] == "configuration_error"


class TestBenchTools:
    """Calls into the benchmark tool."""

    async def test_default_run(self):
        result = json.loads(await _tool("cantor_run_benchmark").fn(n=100))
        assert [r["algorithm"] for r in result["records"]] == ["cantor", "baseline"]

    async def test_csv(self):
        result = await _tool("cantor_run_benchmark").fn(n=20, format="csv")
        assert result.startswith("kind,seed,chunk_len,x,algorithm")

    async def test_unknown_kind(self):
        result = json.loads(await _tool("cantor_run_benchmark").fn(kind="sorted"))
        assert result["code"] == "configuration_error"

    async def test_invalid_spec(self):
        result = json.loads(await _tool("cantor_run_benchmark").fn(len_min=5, len_max=1))
        assert result["code"] == "configuration_error"
