from __future__ import annotations

from typing import Any, Literal

from fastmcp import FastMCP
from fastmcp.server.http import create_sse_app
from starlette.requests import Request
from starlette.responses import JSONResponse
from starlette.routing import Route

from descartes_lab import __version__
from descartes_lab.tools.definitions import tool_definitions
from descartes_lab.tools.handlers import ToolExecutor
from descartes_lab.utils.guard import RequestGuard
from descartes_lab.utils.logging import configure_logging
from descartes_lab.utils.settings import get_settings

settings = get_settings()
logger = configure_logging(settings.log_level)

_tool_metadata = {tool["name"]: tool for tool in tool_definitions()}
tool_executor = ToolExecutor(RequestGuard(settings))


def _tool_info(name: str) -> dict[str, Any]:
    """Return the stored metadata for the given tool name."""

    return _tool_metadata[name]


server = FastMCP(
    name="descartes-lab",
    version=__version__,
    instructions="Exact realizability classification of sign patterns and admissible pairs.",
)


@server.tool(
    name="classify_couple",
    description=_tool_info("classify_couple")["description"],
    output_schema=_tool_info("classify_couple")["output_schema"],
)
def classify_couple(
    degree: int,
    pattern: str,
    ap: list[int],
    with_witness: bool = False,
    search: Literal["none", "grid", "random"] = "none",
    budget: int = 20000,
) -> dict[str, Any]:
    """Classify a (sign pattern, admissible pair) couple."""

    return tool_executor.execute(
        "classify_couple",
        {
            "degree": degree,
            "pattern": pattern,
            "ap": ap,
            "with_witness": with_witness,
            "search": search,
            "budget": budget,
        },
    )


@server.tool(
    name="admissible_pairs",
    description=_tool_info("admissible_pairs")["description"],
    output_schema=_tool_info("admissible_pairs")["output_schema"],
)
def admissible_pairs(pattern: str) -> dict[str, Any]:
    """List the admissible pairs of a sign pattern."""

    return tool_executor.execute("admissible_pairs", {"pattern": pattern})


@server.tool(
    name="build_witness",
    description=_tool_info("build_witness")["description"],
    output_schema=_tool_info("build_witness")["output_schema"],
)
def build_witness(degree: int, pattern: str, ap: list[int]) -> dict[str, Any]:
    """Construct a certified witness polynomial."""

    return tool_executor.execute("build_witness", {"degree": degree, "pattern": pattern, "ap": ap})


@server.tool(
    name="search_witness",
    description=_tool_info("search_witness")["description"],
    output_schema=_tool_info("search_witness")["output_schema"],
)
def search_witness(
    degree: int,
    pattern: str,
    ap: list[int],
    method: Literal["grid", "random"] = "random",
    seed: int = 0,
    budget: int = 20000,
) -> dict[str, Any]:
    """Search for a witness by root placement."""

    return tool_executor.execute(
        "search_witness",
        {"degree": degree, "pattern": pattern, "ap": ap, "method": method, "seed": seed, "budget": budget},
    )


@server.tool(
    name="verify_suite",
    description=_tool_info("verify_suite")["description"],
    output_schema=_tool_info("verify_suite")["output_schema"],
)
def verify_suite(
    suite: Literal["prop3", "lemmas", "thm2-sweep", "inequalities"],
    max_degree: int = 30,
    seed: int = 0,
    trials: int = 10000,
) -> dict[str, Any]:
    """Run a named verification battery."""

    return tool_executor.execute(
        "verify_suite",
        {"suite": suite, "max_degree": max_degree, "seed": seed, "trials": trials},
    )


async def health(_: Request) -> JSONResponse:  # pragma: no cover - trivial
    """Lightweight health endpoint for container orchestrators."""

    return JSONResponse({"status": "ok"})


app = create_sse_app(
    server,
    message_path="/messages",
    sse_path="/sse",
    routes=[Route("/health", health)],
)
