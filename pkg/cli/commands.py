"""
Subcommand handlers
Each handler takes the job options and the loaded inputs and returns a
JobOutput: a human-readable text block plus ordered key=value fields.
"""

from dataclasses import dataclass, field
from itertools import combinations
from random import Random
from typing import Callable, Dict, List, Sequence, Tuple, Union

from core.codecs import gauss_code_inline, serialize_gauss_code, serialize_matched_graph
from core.errors import SizeLimitError, UsageError
from core.models import CycleOrientation, GaussCode, MatchedGraph
from core.surfaces import (boundary_components, complement_cycles, euler_characteristic, genus,
                           graph_isomorphic, is_even_matching, normalize_solid, orientation_keys,
                           underlying_graph)
from embed.colorings import bicolored_multicycles, dkh_rank, multicycle_bijection, two_colorings
from embed.strong import embedding_text, strong_embedding
from functor.kmap import forget_direction, k_inverse, k_map
from functor.roundtrip import round_trip_check
from homology.khovanov import (baldridge_homology, bigraded_text, check_shift_iso,
                               graded_euler_characteristic, khovanov_z2)
from invariants.brackets import (binary_bracket, jones, kauffman_bracket, normalized_binary,
                                 penrose_number, two_factor_bracket, writhe)
from invariants.colorings import (enumerate_perfect_matchings, natural_cycle_orientation,
                                  sum_jones_at_one, tait_count_bruteforce, tait_count_expansion)
from invariants.groups import abelianization_rank, fox_colorings, wirtinger_presentation
from rewrite.graphene import replay_graph_trace
from rewrite.reidemeister import MoveStep, canonical_code, iter_moves
from rewrite.search import MoveTrace, SearchBudget, equivalent_within, random_walk, replay_trace

Diagram = Union[MatchedGraph, GaussCode]
Fields = List[Tuple[str, str]]


@dataclass
class JobOutput:
    text: str
    fields: Fields = field(default_factory=list)


def _yes(flag: bool) -> str:
    return "true" if flag else "false"


def _graph(x: Diagram, command: str) -> MatchedGraph:
    if not isinstance(x, MatchedGraph):
        raise UsageError(f"{command} expects a matched graph")
    return x


def _code(x: Diagram, command: str) -> GaussCode:
    if not isinstance(x, GaussCode):
        raise UsageError(f"{command} expects a Gauss code")
    return x


def _orientations(g: MatchedGraph, choice: str) -> List[CycleOrientation]:
    """auto: default senses; natural: all crossings positive; enumerate: every choice; else keys to reverse."""
    keys = orientation_keys(g)
    if choice == "auto":
        return [CycleOrientation()]
    if choice == "natural":
        return [natural_cycle_orientation(g)]
    if choice == "enumerate":
        return [CycleOrientation.from_keys(subset)
                for size in range(len(keys) + 1) for subset in combinations(keys, size)]
    wanted = [k for k in choice.split(",") if k]
    unknown = [k for k in wanted if k not in keys]
    if unknown:
        raise UsageError(f"unknown cycle keys {unknown}; available: {', '.join(keys)}")
    return [CycleOrientation.from_keys(wanted)]


def _orientation_label(o: CycleOrientation) -> str:
    return ",".join(sorted(o.reversed_keys)) or "-"


def _guard(spec, x: Diagram, what: str) -> None:
    """--limit on commands without their own size guard: crossings, or matched edges."""
    size = x.n_crossings if isinstance(x, GaussCode) else len(x.matched_edges)
    if spec.limit is not None and size > spec.limit:
        raise SizeLimitError(what, size, spec.limit)


def cmd_validate(spec, inputs: Sequence[Diagram]) -> JobOutput:
    x = inputs[0]
    _guard(spec, x, "validate")
    if isinstance(x, GaussCode):
        return JobOutput(f"ok: gauss code, {x.n_components} components, {x.n_crossings} crossings",
                         [("kind", "gauss-code"), ("components", str(x.n_components)),
                          ("crossings", str(x.n_crossings))])
    return JobOutput(f"ok: matched graph, {len(x.vertices)} vertices, {len(x.matched_edges)} matched edges, "
                     f"{len(x.free_loops)} loops",
                     [("kind", "matched-graph"), ("vertices", str(len(x.vertices))),
                      ("matched", str(len(x.matched_edges))), ("loops", str(len(x.free_loops)))])


def cmd_k(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "k")
    _guard(spec, g, "k")
    orientations = _orientations(g, spec.orientation)
    if len(orientations) == 1:
        code = k_map(g, orientations[0])
        return JobOutput(serialize_gauss_code(code).rstrip("\n"), [("code", gauss_code_inline(code))])
    blocks, fields = [], []
    for o in orientations:
        code = k_map(g, o)
        blocks.append(f"# reversed: {_orientation_label(o)}\n{serialize_gauss_code(code).rstrip()}")
        fields.append((f"code[{_orientation_label(o)}]", gauss_code_inline(code)))
    return JobOutput("\n".join(blocks), fields)


def cmd_kinv(spec, inputs: Sequence[Diagram]) -> JobOutput:
    d = _code(inputs[0], "kinv")
    _guard(spec, d, "kinv")
    g = k_inverse(d)
    return JobOutput(serialize_matched_graph(g).rstrip("\n"),
                     [("vertices", str(len(g.vertices))), ("even", _yes(is_even_matching(g)))])


def _budget(spec) -> SearchBudget:
    kwargs = {}
    if spec.depth is not None:
        kwargs["max_depth"] = spec.depth
    if spec.budget is not None:
        kwargs["max_nodes"] = spec.budget
    return SearchBudget(**kwargs)


def cmd_roundtrip(spec, inputs: Sequence[Diagram]) -> JobOutput:
    _guard(spec, inputs[0], "round trip")
    ok = round_trip_check(inputs[0], _budget(spec))
    return JobOutput(_yes(ok), [("roundtrip", _yes(ok))])


def _parse_steps(raw: Sequence[str]) -> MoveTrace:
    try:
        return MoveTrace(tuple(MoveStep.parse(s) for s in raw))
    except ValueError as exc:
        raise UsageError(f"unreadable move: {exc}")


def _render(x: Diagram) -> str:
    if isinstance(x, GaussCode):
        return serialize_gauss_code(x).rstrip("\n")
    return serialize_matched_graph(x).rstrip("\n")


def cmd_moves(spec, inputs: Sequence[Diagram]) -> JobOutput:
    action = spec.action
    x = inputs[0]
    _guard(spec, x, "moves")
    if action == "apply":
        if not spec.steps:
            raise UsageError("moves apply needs at least one --step")
        trace = _parse_steps(spec.steps)
        out = replay_trace(x, trace) if isinstance(x, GaussCode) else replay_graph_trace(x, trace)
        return JobOutput(_render(out), [("steps", str(len(trace)))])
    if action == "replay":
        if len(inputs) < 2 or not isinstance(inputs[1], MoveTrace):
            raise UsageError("moves replay needs a diagram and a trace file")
        trace = inputs[1]
        out = replay_trace(x, trace) if isinstance(x, GaussCode) else replay_graph_trace(x, trace)
        return JobOutput(_render(out), [("steps", str(len(trace)))])
    if action == "neighbors":
        d = _code(x, "moves neighbors")
        lines = [f"{step}\t{gauss_code_inline(code)}" for code, step in iter_moves(d)]
        return JobOutput("\n".join(lines), [("count", str(len(lines)))])
    if action == "walk":
        d = _code(x, "moves walk")
        end, trace = random_walk(d, spec.walk_steps, Random(spec.seed))
        return JobOutput(trace.to_text() + serialize_gauss_code(end).rstrip("\n"),
                         [("steps", str(len(trace))), ("code", gauss_code_inline(end))])
    if action == "search":
        if len(inputs) != 2:
            raise UsageError("moves search needs exactly two inputs")
        d1, d2 = (k_map(y) if isinstance(y, MatchedGraph) else y for y in inputs)
        outcome = equivalent_within(_code(d1, "moves search"), _code(d2, "moves search"), _budget(spec))
        fields = [("found", _yes(outcome.found)), ("nodes", str(outcome.nodes)),
                  ("max_crossings", str(outcome.max_crossings))]
        if outcome.found:
            fields.append(("length", str(len(outcome.trace))))
            return JobOutput(outcome.trace.to_text().rstrip("\n") or "# identical", fields)
        fields.append(("reason", outcome.reason))
        return JobOutput(outcome.summary(), fields)
    raise UsageError(f"unknown moves action '{action}'")


def cmd_bracket(spec, inputs: Sequence[Diagram]) -> JobOutput:
    p = kauffman_bracket(_code(inputs[0], "bracket"), spec.limit)
    return JobOutput(str(p), [("bracket", str(p))])


def cmd_jones(spec, inputs: Sequence[Diagram]) -> JobOutput:
    d = _code(inputs[0], "jones")
    p = jones(d, spec.limit)
    return JobOutput(str(p), [("jones", str(p)), ("writhe", str(writhe(d)))])


def cmd_two_factor(spec, inputs: Sequence[Diagram]) -> JobOutput:
    p = two_factor_bracket(_graph(inputs[0], "two-factor"), spec.limit)
    return JobOutput(str(p), [("two_factor", str(p))])


def cmd_penrose(spec, inputs: Sequence[Diagram]) -> JobOutput:
    n = penrose_number(_graph(inputs[0], "penrose"), spec.limit)
    return JobOutput(str(n), [("penrose", str(n))])


def cmd_tait(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "tait")
    if spec.method == "expansion":
        n = tait_count_expansion(g, spec.limit)
    else:
        n = tait_count_bruteforce(underlying_graph(g), spec.limit)
    return JobOutput(str(n), [("method", spec.method), ("tait", str(n))])


def cmd_matchings(spec, inputs: Sequence[Diagram]) -> JobOutput:
    matchings = enumerate_perfect_matchings(underlying_graph(_graph(inputs[0], "matchings")), spec.limit)
    lines = [",".join(sorted(m)) for m in matchings]
    return JobOutput("\n".join(lines), [("count", str(len(matchings)))])


def cmd_sum_jones(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "sum-jones")
    total = sum_jones_at_one(g, spec.limit)
    tait = tait_count_bruteforce(underlying_graph(g), spec.limit)
    return JobOutput(str(total), [("sum_jones_at_one", str(total)), ("tait", str(tait))])


def cmd_binary(spec, inputs: Sequence[Diagram]) -> JobOutput:
    d = _code(inputs[0], "binary")
    raw = binary_bracket(d, spec.limit)
    normalized = normalized_binary(d, spec.limit)
    return JobOutput(f"{raw}\nnormalized: {normalized}",
                     [("binary", str(raw)), ("normalized", str(normalized)),
                      ("value_at_one", str(normalized.evaluate(1)))])


def cmd_wirtinger(spec, inputs: Sequence[Diagram]) -> JobOutput:
    d = _code(inputs[0], "wirtinger")
    _guard(spec, d, "wirtinger")
    presentation = wirtinger_presentation(d)
    rank = abelianization_rank(presentation)
    return JobOutput(presentation.text(),
                     [("generators", str(len(presentation.generators))),
                      ("relators", str(len(presentation.relators))), ("abelian_rank", str(rank))])


def cmd_fox(spec, inputs: Sequence[Diagram]) -> JobOutput:
    d = _code(inputs[0], "fox")
    _guard(spec, d, "fox")
    n = fox_colorings(d, spec.prime)
    return JobOutput(str(n), [("prime", str(spec.prime)), ("colorings", str(n))])


def _dims_output(dims, extra: Fields) -> JobOutput:
    fields = [(f"rank[{row.i},{row.j}]", str(row.rank)) for row in dims.rows()]
    fields.append(("euler", str(graded_euler_characteristic(dims))))
    fields.extend(extra)
    return JobOutput(bigraded_text(dims), fields)


def cmd_khovanov(spec, inputs: Sequence[Diagram]) -> JobOutput:
    dims = khovanov_z2(_code(inputs[0], "khovanov"), spec.limit)
    return _dims_output(dims, [("chain_dim", str(dims.metadata["chain_dim"]))])


def cmd_baldridge(spec, inputs: Sequence[Diagram]) -> JobOutput:
    dims = baldridge_homology(_graph(inputs[0], "baldridge"), spec.limit)
    return _dims_output(dims, [("quantum_offset", str(dims.metadata["quantum_offset"])),
                               ("chain_dim", str(dims.metadata["chain_dim"]))])


def cmd_shift_check(spec, inputs: Sequence[Diagram]) -> JobOutput:
    ok = check_shift_iso(_graph(inputs[0], "shift-check"), spec.limit)
    return JobOutput(_yes(ok), [("shift_iso", _yes(ok))])


def cmd_two_colorings(spec, inputs: Sequence[Diagram]) -> JobOutput:
    colorings = two_colorings(_code(inputs[0], "two-colorings"), spec.limit)
    return JobOutput("\n".join(c.text() for c in colorings), [("count", str(len(colorings)))])


def cmd_multicycles(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "multicycles")
    multicycles = bicolored_multicycles(g, spec.limit)
    lines = [f"{c.text()}\t-> {multicycle_bijection(g, c).text()}" for c in multicycles]
    return JobOutput("\n".join(lines), [("count", str(len(multicycles)))])


def cmd_strong_embed(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "strong-embed")
    multicycles = bicolored_multicycles(g, spec.limit)
    if not multicycles:
        raise UsageError("the matching is not even: no bicolored multicycle exists")
    chosen = range(len(multicycles)) if spec.index is None else [spec.index]
    blocks, fields = [], []
    for k in chosen:
        if not 0 <= k < len(multicycles):
            raise UsageError(f"multicycle index {k} out of range 0..{len(multicycles) - 1}")
        for o in _orientations(g, spec.orientation):
            emb = strong_embedding(g, multicycles[k], o)
            label = f"{k}:{_orientation_label(o)}"
            blocks.append(f"# multicycle {k} reversed {_orientation_label(o)}\n{embedding_text(emb)}")
            fields.append((f"genus[{label}]", str(emb.genus)))
            fields.append((f"orientable[{label}]", _yes(emb.orientable)))
    return JobOutput("\n".join(blocks), fields)


def cmd_dkh_rank(spec, inputs: Sequence[Diagram]) -> JobOutput:
    x = inputs[0]
    d = k_map(x) if isinstance(x, MatchedGraph) else x
    rank = dkh_rank(d, spec.limit)
    return JobOutput(str(rank), [("dkh_rank", str(rank))])


def cmd_genus(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "genus")
    _guard(spec, g, "genus")
    value = genus(g)
    return JobOutput(str(value), [("genus", str(value)), ("euler", str(euler_characteristic(g))),
                                  ("faces", str(len(boundary_components(g))))])


def cmd_isomorphic(spec, inputs: Sequence[Diagram]) -> JobOutput:
    if len(inputs) != 2:
        raise UsageError("isomorphic needs exactly two inputs")
    g1, g2 = (_graph(x, "isomorphic") for x in inputs)
    ok = graph_isomorphic(underlying_graph(g1), underlying_graph(g2), spec.limit)
    return JobOutput(_yes(ok), [("isomorphic", _yes(ok))])


def cmd_faces(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "faces")
    _guard(spec, g, "faces")
    faces = boundary_components(g)
    lines = [f"face {k}: {' '.join(str(end) for end in face)}" for k, face in enumerate(faces)]
    return JobOutput("\n".join(lines), [("faces", str(len(faces)))])


def cmd_normalize(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "normalize")
    _guard(spec, g, "normalize")
    return JobOutput(serialize_matched_graph(normalize_solid(g)).rstrip("\n"))


def cmd_forget_direction(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "forget-direction")
    _guard(spec, g, "forget-direction")
    g = forget_direction(g)
    return JobOutput(serialize_matched_graph(g).rstrip("\n"))


def cmd_cycles(spec, inputs: Sequence[Diagram]) -> JobOutput:
    g = _graph(inputs[0], "cycles")
    _guard(spec, g, "cycles")
    cycles = complement_cycles(g)
    lines = [f"cycle {c.key}: {' '.join(c.vertices)} (length {len(c)})" for c in cycles]
    lines.extend(f"loop {lid}" for lid in g.free_loops)
    return JobOutput("\n".join(lines), [("cycles", str(len(cycles))), ("loops", str(len(g.free_loops))),
                                        ("even", _yes(is_even_matching(g)))])


def cmd_canonical(spec, inputs: Sequence[Diagram]) -> JobOutput:
    d = _code(inputs[0], "canonical")
    _guard(spec, d, "canonical")
    key = canonical_code(d)
    return JobOutput(key, [("canonical", key)])


Handler = Callable[..., JobOutput]

COMMANDS: Dict[str, Handler] = {
    "validate": cmd_validate,
    "k": cmd_k,
    "kinv": cmd_kinv,
    "roundtrip": cmd_roundtrip,
    "moves": cmd_moves,
    "bracket": cmd_bracket,
    "jones": cmd_jones,
    "two-factor": cmd_two_factor,
    "penrose": cmd_penrose,
    "tait": cmd_tait,
    "matchings": cmd_matchings,
    "sum-jones": cmd_sum_jones,
    "binary": cmd_binary,
    "wirtinger": cmd_wirtinger,
    "fox": cmd_fox,
    "khovanov": cmd_khovanov,
    "baldridge": cmd_baldridge,
    "shift-check": cmd_shift_check,
    "two-colorings": cmd_two_colorings,
    "multicycles": cmd_multicycles,
    "strong-embed": cmd_strong_embed,
    "dkh-rank": cmd_dkh_rank,
    "genus": cmd_genus,
    "isomorphic": cmd_isomorphic,
    "faces": cmd_faces,
    "normalize": cmd_normalize,
    "forget-direction": cmd_forget_direction,
    "cycles": cmd_cycles,
    "canonical": cmd_canonical,
}

# Commands whose inputs form one job instead of one job per input
MULTI_INPUT = {"isomorphic"}
MULTI_INPUT_ACTIONS = {"search", "replay"}
