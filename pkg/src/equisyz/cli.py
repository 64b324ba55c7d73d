"""Batch front end.

Reads a JSON arrangement description, runs the pipeline (polymatroid ->
Hilbert series -> Betti table -> transpose -> regularity), optionally
verifies against the brute-force oracle, and writes a deterministic report
as JSON, Markdown or LaTeX.

Input schema::

    {"ambient_dim": m, "subspaces": [[vec, ...], ...]}

where each subspace is a list of spanning vectors (an empty list is the
zero subspace) and entries are integers or "p/q" strings.

Exit codes: 0 success, 1 validation failure, 2 input error, 3 size cap.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .arrangements import (
    Arrangement,
    hilbert_product,
    p_polynomial,
    polymatroid_of,
)
from .betti import (
    GenerationDegreeError,
    LinearityError,
    betti_from_series,
    regularity,
    transpose_table,
)
from .errors import SizeCapError
from .linalg import Subspace
from .oracle import (
    DEFAULT_CAPS,
    OracleCaps,
    character_to_schur,
    intersection_ideal_character,
    product_ideal_character,
    wedge_ideal_character,
)
from .schur import SchurSeries

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3

CAPS_ENV_VAR = "EQUISYZ_CAPS"


class InputError(Exception):
    """Malformed document, configuration or flag combination."""


def _parse_entry(value) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"entry {value!r} is not a rational number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"entry {value!r} is not a rational number") from exc
    raise InputError(
        f"entry {value!r} is not a rational number (use integers or 'p/q' strings)"
    )


def parse_arrangement(document) -> Arrangement:
    """Validate an arrangement document and build the Arrangement."""
    if not isinstance(document, dict):
        raise InputError("arrangement document must be a JSON object")
    try:
        m = document["ambient_dim"]
        raw_subspaces = document["subspaces"]
    except KeyError as exc:
        raise InputError(f"arrangement document is missing key {exc}") from exc
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InputError("ambient_dim must be a positive integer")
    if not isinstance(raw_subspaces, list):
        raise InputError("subspaces must be a list of vector lists")
    subspaces = []
    for idx, vectors in enumerate(raw_subspaces):
        if not isinstance(vectors, list):
            raise InputError(f"subspace {idx} must be a list of vectors")
        parsed = []
        for vec in vectors:
            if not isinstance(vec, list) or len(vec) != m:
                raise InputError(
                    f"subspace {idx}: vector {vec!r} does not have length {m}"
                )
            parsed.append([_parse_entry(x) for x in vec])
        subspaces.append(Subspace.from_vectors(parsed, m))
    return Arrangement(m, tuple(subspaces))


def caps_from_env(environ=None) -> OracleCaps:
    """Read size caps from EQUISYZ_CAPS, e.g. ``m=6,n=6,d=6,t=6``."""
    environ = os.environ if environ is None else environ
    raw = environ.get(CAPS_ENV_VAR)
    if not raw:
        return DEFAULT_CAPS
    fields = {"m": "ambient_dim", "n": "dim_v", "d": "degree", "t": "subspaces"}
    updates = {}
    for chunk in raw.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, _, value = chunk.partition("=")
        key = key.strip()
        if key not in fields or not value.strip().isdigit():
            raise InputError(
                f"cannot parse {CAPS_ENV_VAR}={raw!r}; expected entries like m=6,n=6,d=6,t=6"
            )
        updates[fields[key]] = int(value)
    return replace(DEFAULT_CAPS, **updates)


@dataclass
class JobConfig:
    arrangement: Arrangement
    max_degree: int
    ideal: str = "product"  # product | intersection
    side: str = "both"  # symmetric | exterior | both
    oracle_degree: int = 0  # 0 disables oracle checks
    dim_v: int = 0
    output_format: str = "json"  # json | markdown | latex
    output_path: str | None = None
    caps: OracleCaps = field(default_factory=lambda: DEFAULT_CAPS)


def _subspace_doc(sub: Subspace) -> list[list[str]]:
    return [[str(x) for x in row] for row in sub.basis]


def _weights_doc(table: dict) -> list[list]:
    return [[list(w), dim] for w, dim in sorted(table.items())]


def _check_config(cfg: JobConfig):
    t = len(cfg.arrangement.subspaces)
    if cfg.ideal not in ("product", "intersection"):
        raise InputError(f"unknown ideal kind {cfg.ideal!r}")
    if cfg.side not in ("symmetric", "exterior", "both"):
        raise InputError(f"unknown side {cfg.side!r}")
    if cfg.output_format not in ("json", "markdown", "latex"):
        raise InputError(f"unknown output format {cfg.output_format!r}")
    if cfg.max_degree < t:
        raise InputError(
            f"truncation below generation degree: max degree {cfg.max_degree} < t = {t}"
        )
    if any(s.dim == cfg.arrangement.ambient_dim for s in cfg.arrangement.subspaces):
        raise InputError(
            "arrangement contains the whole ambient space; its vanishing ideal is zero"
        )
    needs_oracle = cfg.oracle_degree > 0 or cfg.ideal == "intersection"
    if needs_oracle and cfg.dim_v < 1:
        raise InputError("oracle-backed computations need --dim-v >= 1")
    if cfg.oracle_degree > cfg.max_degree:
        raise InputError("--oracle-check degree cannot exceed --max-degree")
    if cfg.oracle_degree > 0 and cfg.dim_v < cfg.oracle_degree:
        raise InputError(
            "faithful oracle comparison needs --dim-v >= --oracle-check degree"
        )
    if cfg.ideal == "intersection" and cfg.dim_v < cfg.max_degree:
        raise InputError(
            "intersection series is assembled from the oracle and needs "
            "--dim-v >= --max-degree"
        )


def _intersection_series(cfg: JobConfig) -> SchurSeries:
    D = cfg.max_degree
    char = intersection_ideal_character(
        cfg.arrangement, cfg.dim_v, D, caps=cfg.caps
    )
    coeffs = {}
    for d in range(D + 1):
        part = character_to_schur(char, d)
        coeffs.update(part.coeffs)
    return SchurSeries(coeffs, degree=D)


def _oracle_section(cfg: JobConfig, hseries: SchurSeries, validations: dict) -> dict:
    arr = cfg.arrangement
    n = cfg.dim_v
    d_max = cfg.oracle_degree
    t = len(arr.subspaces)
    section = {"dim_v": n, "max_degree": d_max, "degrees": []}

    # The wedge ideal is the transpose of the *product* ideal, so both the
    # product and the wedge verdicts compare against the product formula,
    # whatever kind of series the job itself is about.
    if cfg.ideal == "product":
        product_formula = hseries
    else:
        product_formula = hilbert_product(arr, max(t, d_max))

    product_char = product_ideal_character(arr, n, d_max, caps=cfg.caps)
    want_wedge = cfg.side in ("exterior", "both")
    wedge_char = (
        wedge_ideal_character(arr, n, d_max, caps=cfg.caps) if want_wedge else None
    )
    intersection_char = (
        intersection_ideal_character(arr, n, d_max, caps=cfg.caps)
        if cfg.ideal == "intersection"
        else None
    )

    all_product_ok = True
    all_wedge_ok = True
    all_contained = True
    dlow = 1 if cfg.ideal == "intersection" else t
    for d in range(dlow, d_max + 1):
        entry = {"degree": d}
        oracle_schur = character_to_schur(product_char, d)
        formula = product_formula.graded_part(d)
        entry["product_weights"] = _weights_doc(product_char.weights.get(d, {}))
        entry["product_schur"] = oracle_schur.to_pairs()
        entry["formula_schur"] = formula.to_pairs()
        ok = oracle_schur == formula
        entry["product_matches_formula"] = ok
        all_product_ok &= ok
        if want_wedge:
            wedge_schur = character_to_schur(wedge_char, d)
            entry["wedge_weights"] = _weights_doc(wedge_char.weights.get(d, {}))
            entry["wedge_schur"] = wedge_schur.to_pairs()
            expected = formula.omega()
            entry["wedge_expected"] = expected.to_pairs()
            ok = wedge_schur == expected
            entry["wedge_matches_transpose"] = ok
            all_wedge_ok &= ok
        if intersection_char is not None:
            iw = intersection_char.weights.get(d, {})
            pw = product_char.weights.get(d, {})
            contained = all(iw.get(w, 0) >= dim for w, dim in pw.items())
            entry["intersection_weights"] = _weights_doc(iw)
            entry["product_contained_in_intersection"] = contained
            all_contained &= contained
        section["degrees"].append(entry)

    validations["oracle_product_match"] = all_product_ok
    if want_wedge:
        validations["oracle_wedge_match"] = all_wedge_ok
    if intersection_char is not None:
        validations["oracle_containment"] = all_contained
    return section


def run_job(cfg: JobConfig) -> dict:
    """Run the full pipeline and return a deterministic report dictionary."""
    _check_config(cfg)
    arr = cfg.arrangement
    m = arr.ambient_dim
    t = len(arr.subspaces)
    D = cfg.max_degree

    pm = polymatroid_of(arr)
    rank_rows = [
        {"subset": list(subset), "rank": rank} for subset, rank in pm.rank_table()
    ]
    p_series = p_polynomial(pm, (1 << t) - 1, D)

    if cfg.ideal == "product":
        hseries = hilbert_product(arr, D)
        generation_degree = t
    else:
        hseries = _intersection_series(cfg)
        lowest = hseries.min_degree()
        if lowest is None:
            raise InputError(
                f"intersection ideal is zero up to degree {D}; nothing to resolve"
            )
        generation_degree = lowest

    report = {
        "schema": "equisyz-report/1",
        "input": {
            "ambient_dim": m,
            "subspaces": [_subspace_doc(s) for s in arr.subspaces],
            "ideal": cfg.ideal,
            "side": cfg.side,
            "max_degree": D,
        },
        "polymatroid": {"ground_size": t, "ranks": rank_rows},
        "p_polynomial": p_series.to_pairs(),
        "hilbert_series": {"truncation_degree": D, "terms": hseries.to_pairs()},
        "generation_degree": generation_degree,
    }

    validations: dict = {}
    tables: dict = {}
    regs: dict = {}
    try:
        table = betti_from_series(hseries, m, generation_degree)
    except (LinearityError, GenerationDegreeError) as exc:
        validations["linear_resolution"] = False
        report["linearity_error"] = str(exc)
    else:
        validations["linear_resolution"] = True
        if cfg.side in ("symmetric", "both"):
            tables["symmetric"] = table.to_dict()
            regs["symmetric"] = regularity(table)
        if cfg.side in ("exterior", "both"):
            exterior = transpose_table(table)
            tables["exterior"] = exterior.to_dict()
            regs["exterior"] = regularity(exterior)
    report["betti"] = tables
    report["regularity"] = regs

    if cfg.oracle_degree > 0:
        report["oracle"] = _oracle_section(cfg, hseries, validations)
    else:
        report["oracle"] = None

    report["validations"] = validations
    report["status"] = "ok" if all(validations.values()) else "validation_failed"
    return report


# -- rendering ----------------------------------------------------------------


def _pairs_pretty(pairs) -> str:
    if not pairs:
        return "0"
    chunks = []
    for lam, c in pairs:
        term = "1" if not lam else "s[" + ",".join(map(str, lam)) + "]"
        mag = abs(c)
        body = term if mag == 1 and lam else (str(mag) if not lam else f"{mag}*{term}")
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


def _pairs_latex(pairs) -> str:
    if not pairs:
        return "0"
    chunks = []
    for lam, c in pairs:
        term = "1" if not lam else "s_{(" + ",".join(map(str, lam)) + ")}"
        mag = abs(c)
        body = term if mag == 1 and lam else (str(mag) if not lam else f"{mag}\\,{term}")
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_markdown(report: dict) -> str:
    lines = ["# equisyz report", ""]
    inp = report["input"]
    lines.append(f"- ambient dimension: {inp['ambient_dim']}")
    lines.append(f"- subspaces: {len(inp['subspaces'])}")
    lines.append(f"- ideal: {inp['ideal']}, side: {inp['side']}, D = {inp['max_degree']}")
    lines.append(f"- status: **{report['status']}**")
    lines.append("")
    lines.append("## Polymatroid ranks")
    lines.append("")
    lines.append("| subset | rank |")
    lines.append("|---|---|")
    for row in report["polymatroid"]["ranks"]:
        label = "{" + ",".join(map(str, row["subset"])) + "}"
        lines.append(f"| {label} | {row['rank']} |")
    lines.append("")
    lines.append("## Correction polynomial P")
    lines.append("")
    lines.append(f"`{_pairs_pretty(report['p_polynomial'])}`")
    lines.append("")
    lines.append("## Equivariant Hilbert series")
    lines.append("")
    lines.append(f"`{_pairs_pretty(report['hilbert_series']['terms'])}`")
    lines.append("")
    if report.get("linearity_error"):
        lines.append(f"**Linearity validation failed:** {report['linearity_error']}")
        lines.append("")
    for side in ("symmetric", "exterior"):
        table = report["betti"].get(side)
        if not table:
            continue
        reg = report["regularity"].get(side)
        lines.append(
            f"## Betti table ({side} side), generated in degree {table['t']}, "
            f"regularity {reg}"
        )
        lines.append("")
        lines.append("| i | degree | decomposition |")
        lines.append("|---|---|---|")
        for col in table["columns"]:
            lines.append(
                f"| {col['i']} | {col['degree']} | {_pairs_pretty(col['terms'])} |"
            )
        lines.append("")
    oracle = report.get("oracle")
    if oracle:
        lines.append(
            f"## Oracle verification (dim V = {oracle['dim_v']}, "
            f"degrees up to {oracle['max_degree']})"
        )
        lines.append("")
        for entry in oracle["degrees"]:
            lines.append(f"### Degree {entry['degree']}")
            lines.append("")
            lines.append(f"- product character: `{_pairs_pretty(entry['product_schur'])}`")
            if "product_matches_formula" in entry:
                lines.append(f"- matches formula: {entry['product_matches_formula']}")
            if "wedge_schur" in entry:
                lines.append(f"- wedge character: `{_pairs_pretty(entry['wedge_schur'])}`")
                lines.append(f"- matches transposed formula: {entry['wedge_matches_transpose']}")
            if "product_contained_in_intersection" in entry:
                lines.append(
                    f"- product contained in intersection: "
                    f"{entry['product_contained_in_intersection']}"
                )
            lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def render_latex(report: dict) -> str:
    inp = report["input"]
    lines = [
        "% equisyz report",
        "\\section*{Arrangement report}",
        "\\begin{itemize}",
        f"\\item ambient dimension ${inp['ambient_dim']}$, "
        f"{len(inp['subspaces'])} subspaces, ideal: {inp['ideal']}",
        f"\\item truncation degree ${inp['max_degree']}$, status: {report['status']}",
        "\\end{itemize}",
        "",
        "\\subsection*{Equivariant Hilbert series}",
        f"$${_pairs_latex(report['hilbert_series']['terms'])}$$",
        "",
    ]
    for side in ("symmetric", "exterior"):
        table = report["betti"].get(side)
        if not table:
            continue
        reg = report["regularity"].get(side)
        lines.append(
            f"\\subsection*{{Betti table ({side}), $t = {table['t']}$, "
            f"regularity ${reg}$}}"
        )
        lines.append("\\begin{tabular}{rrl}")
        lines.append("$i$ & degree & decomposition \\\\ \\hline")
        for col in table["columns"]:
            lines.append(
                f"{col['i']} & {col['degree']} & ${_pairs_latex(col['terms'])}$ \\\\"
            )
        lines.append("\\end{tabular}")
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"


RENDERERS = {"json": render_json, "markdown": render_markdown, "latex": render_latex}


def render_report(report: dict, output_format: str) -> str:
    return RENDERERS[output_format](report)


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equisyz",
        description=(
            "Equivariant Hilbert series, Betti tables and regularity for "
            "ideals of subspace arrangements, on both the symmetric and the "
            "exterior side."
        ),
        epilog=(
            f"Size caps for the oracle can be raised with {CAPS_ENV_VAR}, "
            "e.g. EQUISYZ_CAPS=m=6,n=6,d=6,t=6."
        ),
    )
    parser.add_argument("--input", required=True, help="path to the arrangement JSON")
    parser.add_argument("--max-degree", type=int, required=True, help="truncation degree D")
    parser.add_argument(
        "--ideal", choices=("product", "intersection"), default="product"
    )
    parser.add_argument(
        "--side", choices=("symmetric", "exterior", "both"), default="both"
    )
    parser.add_argument(
        "--oracle-check",
        type=int,
        default=0,
        metavar="D_MAX",
        help="verify against the brute-force oracle up to this degree (0 disables)",
    )
    parser.add_argument(
        "--dim-v", type=int, default=0, help="dimension of V for oracle computations"
    )
    parser.add_argument(
        "--format", choices=("json", "markdown", "latex"), default="json"
    )
    parser.add_argument("--output", default=None, help="write the report here instead of stdout")
    parser.add_argument("--verbose", action="store_true", help="log oracle sizes to stderr")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr)
    try:
        caps = caps_from_env()
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                document = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"{args.input} is not valid JSON: {exc}") from exc
        arrangement = parse_arrangement(document)
        cfg = JobConfig(
            arrangement=arrangement,
            max_degree=args.max_degree,
            ideal=args.ideal,
            side=args.side,
            oracle_degree=args.oracle_check,
            dim_v=args.dim_v,
            output_format=args.format,
            output_path=args.output,
            caps=caps,
        )
        report = run_job(cfg)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeCapError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_CAP

    text = render_report(report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report["status"] != "ok":
        print("validation failed; see report", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
