from __future__ import annotations

from typing import Any, List

_COUPLE_INPUT = {
    "degree": {
        "type": "integer",
        "description": "Degree d of the polynomial; the pattern must have d + 1 signs",
    },
    "pattern": {
        "type": "string",
        "description": "Sign pattern as a '+'/'-' string starting with '+', or the shorthand 'S(m,n,q)'",
    },
    "ap": {
        "type": "array",
        "items": {"type": "integer"},
        "minItems": 2,
        "maxItems": 2,
        "description": "Admissible pair [pos, neg] of distinct positive and negative root counts",
    },
}

_WITNESS_OUTPUT = {
    "type": "object",
    "properties": {
        "schema": {"type": "string"},
        "pattern": {"type": "string"},
        "ap": {"type": "array", "items": {"type": "integer"}},
        "coeffs": {"type": "string", "description": "Ascending exact coefficients 'num/den,...'"},
        "construction": {"type": "string"},
        "parameters": {"type": "object"},
    },
}


def tool_definitions() -> List[dict[str, Any]]:
    return [
        {
            "name": "classify_couple",
            "description": """Classify one (sign pattern, admissible pair) couple for realizability.

WHEN TO USE:
- To learn whether a polynomial with a given coefficient sign pattern can have
  exactly the requested numbers of distinct positive and negative roots
- To see which criterion decides a couple and the quantities behind it
- Before asking for a witness, to check that one can exist

HOW IT WORKS:
- Checks the pair against Descartes' rule and its parity refinements
- Applies the known realizability and nonrealizability criteria
  (concatenation chains, the quadratic-factor construction, the kappa bound,
  the degree 9 and 10 case analyses, duality and downward closure)
- For three-block patterns S(m,n,q) returns the criterion trace with exact
  values and rational enclosures
- Optionally falls back to a bounded witness search for couples no
  criterion decides; an empty search never makes a couple NonRealizable

INPUT:
- degree: Polynomial degree
- pattern: "+--+" style string or "S(m,n,q)"
- ap: [pos, neg]
- with_witness: Attach a certified witness for Realizable couples (default false)
- search: "none", "grid" or "random" fallback for undecided couples (default "none")
- budget: Candidate budget of the fallback search (default 20000)

OUTPUT:
- classification: status (Realizable, NonRealizable, Unknown), reason,
  pattern, ap, optional blocks, trace, witness and detail

BEST PRACTICES:
- Use 'admissible_pairs' first if unsure which pairs are legal
- Keep 'search' off when a quick answer is enough; it can be slow
- An Unknown status with reason 'Not-covered' means no criterion applies

EXAMPLE:
classify_couple(degree=9, pattern="S(3,4,3)", ap=[0, 7])
# -> status NonRealizable, reason Prop3-fact""",
            "input_schema": {
                "type": "object",
                "properties": {
                    **_COUPLE_INPUT,
                    "with_witness": {"type": "boolean", "description": "Attach a certified witness"},
                    "search": {
                        "type": "string",
                        "enum": ["none", "grid", "random"],
                        "description": "Fallback witness search for undecided couples",
                    },
                    "budget": {"type": "integer", "description": "Candidate budget of the fallback search"},
                },
                "required": ["degree", "pattern", "ap"],
                "additionalProperties": False,
            },
            "output_schema": {
                "type": "object",
                "properties": {
                    "classification": {
                        "type": "object",
                        "properties": {
                            "schema": {"type": "string"},
                            "degree": {"type": "integer"},
                            "pattern": {"type": "string"},
                            "ap": {"type": "array", "items": {"type": "integer"}},
                            "status": {"type": "string", "enum": ["Realizable", "NonRealizable", "Unknown"]},
                            "reason": {"type": "string"},
                            "blocks": {"type": "string"},
                            "trace": {"type": "object"},
                            "witness": {"type": "string"},
                            "construction": {"type": "string"},
                            "detail": {"type": "string"},
                        },
                    },
                },
                "required": ["classification"],
            },
        },
        {
            "name": "admissible_pairs",
            "description": """List the admissible pairs of a sign pattern.

WHEN TO USE:
- To find out which (pos, neg) root counts Descartes' rule allows
- Before classifying couples of an unfamiliar pattern

HOW IT WORKS:
- Counts sign changes c and sign preservations p
- Returns every (pos, neg) with pos <= c, neg <= p, matching parities
  and (-1)^pos equal to the sign of the constant term

INPUT:
- pattern: "+--+" style string or "S(m,n,q)"

OUTPUT:
- pattern: Normalized '+'/'-' string
- changes: c
- preservations: p
- pairs: Array of [pos, neg], largest counts first

EXAMPLE:
admissible_pairs(pattern="+-+")
# -> changes 2, preservations 0, pairs [[2, 0], [0, 0]]""",
            "input_schema": {
                "type": "object",
                "properties": {"pattern": _COUPLE_INPUT["pattern"]},
                "required": ["pattern"],
                "additionalProperties": False,
            },
            "output_schema": {
                "type": "object",
                "properties": {
                    "pattern": {"type": "string"},
                    "changes": {"type": "integer"},
                    "preservations": {"type": "integer"},
                    "pairs": {
                        "type": "array",
                        "items": {"type": "array", "items": {"type": "integer"}},
                    },
                },
                "required": ["pattern", "pairs"],
            },
        },
        {
            "name": "build_witness",
            "description": """Construct a certified witness polynomial for a realizable couple.

WHEN TO USE:
- To obtain an explicit polynomial realizing a couple
- To reproduce the constructions behind a Realizable classification

HOW IT WORKS:
- Picks the construction that applies: concatenation chains, the
  three-block closure from small seeds, the quadratic-factor scheme
  (x+1)^(d-2)(x^2 - z x + y), shifts that trade negative roots for complex
  ones, or duality through P(-x)
- Every result is certified exactly: coefficient signs are compared to the
  pattern and distinct roots are counted with Sturm sequences

INPUT:
- degree, pattern, ap: The couple

OUTPUT:
- witness: schema, pattern, ap, coeffs (ascending exact rationals),
  construction name and the parameters used

BEST PRACTICES:
- Couples no construction covers fail with an explanatory error; try
  'search_witness' for those

EXAMPLE:
build_witness(degree=11, pattern="S(2,4,6)", ap=[0, 9])""",
            "input_schema": {
                "type": "object",
                "properties": dict(_COUPLE_INPUT),
                "required": ["degree", "pattern", "ap"],
                "additionalProperties": False,
            },
            "output_schema": {
                "type": "object",
                "properties": {"witness": _WITNESS_OUTPUT},
                "required": ["witness"],
            },
        },
        {
            "name": "search_witness",
            "description": """Search for a witness by placing roots on a grid or at random.

WHEN TO USE:
- For couples that no criterion decides
- To cross-check a construction independently

HOW IT WORKS:
- Enumerates root placements (negative roots, positive roots and quadratic
  factors x^2 - z x + y) in a fixed order
- Expands each candidate exactly and keeps the first whose sign pattern
  and Sturm-certified root counts match
- The same seed and budget always give the same outcome

INPUT:
- degree, pattern, ap: The couple
- method: "grid" or "random" (default "random")
- seed: Seed of the random search (default 0)
- budget: Number of candidates to try (default 20000)

OUTPUT:
- found: Whether a witness was found
- witness: The witness when found

BEST PRACTICES:
- A failed search says nothing about realizability
- Large budgets at high degree are slow; raise them gradually

EXAMPLE:
search_witness(degree=3, pattern="+-+-", ap=[1, 0], method="grid", budget=500)""",
            "input_schema": {
                "type": "object",
                "properties": {
                    **_COUPLE_INPUT,
                    "method": {"type": "string", "enum": ["grid", "random"]},
                    "seed": {"type": "integer"},
                    "budget": {"type": "integer"},
                },
                "required": ["degree", "pattern", "ap"],
                "additionalProperties": False,
            },
            "output_schema": {
                "type": "object",
                "properties": {
                    "found": {"type": "boolean"},
                    "witness": _WITNESS_OUTPUT,
                },
                "required": ["found"],
            },
        },
        {
            "name": "verify_suite",
            "description": """Run one of the named verification batteries.

WHEN TO USE:
- To re-check the computational content behind the nonrealizability facts
- To sweep the quadratic-factor construction over many degrees
- To exercise the symmetric-function inequalities on random inputs

HOW IT WORKS:
- prop3: every case of the degree 9 and 10 analyses; leading coefficients,
  shifted resultant certificates and root ordering at a sample point
- lemmas: the two-block lemma cases with exact resultants and the
  all-ones cases
- thm2-sweep: constructs and certifies every (d, m, n) with L > 0 up to
  max_degree, then shifts to (0, d-4)
- inequalities: randomized exact battery with a fixed seed

INPUT:
- suite: "prop3", "lemmas", "thm2-sweep" or "inequalities"
- max_degree: Upper degree of the sweep (default 30)
- seed: Seed of the randomized battery (default 0)
- trials: Number of randomized trials (default 10000)

OUTPUT:
- report: suite, passed, total, failures and per-case results

EXAMPLE:
verify_suite(suite="lemmas")""",
            "input_schema": {
                "type": "object",
                "properties": {
                    "suite": {"type": "string", "enum": ["prop3", "lemmas", "thm2-sweep", "inequalities"]},
                    "max_degree": {"type": "integer"},
                    "seed": {"type": "integer"},
                    "trials": {"type": "integer"},
                },
                "required": ["suite"],
                "additionalProperties": False,
            },
            "output_schema": {
                "type": "object",
                "properties": {
                    "report": {
                        "type": "object",
                        "properties": {
                            "suite": {"type": "string"},
                            "passed": {"type": "boolean"},
                            "total": {"type": "integer"},
                            "failures": {"type": "array", "items": {"type": "string"}},
                            "results": {"type": "array", "items": {"type": "object"}},
                        },
                    },
                },
                "required": ["report"],
            },
        },
    ]
