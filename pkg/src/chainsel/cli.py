"""Command-line front end: rank, inspect the KB, probe sensitivity, serve HTTP.

Thin wrapper over the core package; the machine-readable output (--format
json) is exactly the document the HTTP service returns, so both front ends
always agree.
"""

import functools
import json
import sys

import click

from .analysis import parse_edit, weight_stability_interval, what_if
from .elicitation import bigbox_requirements, parse_requirements, UserRequirements
from .errors import (
    AmbiguousBaselineError,
    DegenerateWeightsError,
    KBValidationError,
    NoActiveCriteriaError,
    OverrideError,
    RequirementsError,
    UnknownIdError,
)
from .kb import (
    KnowledgeBase,
    apply_override,
    builtin_knowledge_base,
    load_knowledge_base,
    serialize_knowledge_base,
)
from .mcdm import rank_alternatives
from .report import (
    build_report,
    interval_document,
    ranking_document,
    render_interval,
    render_table,
)

EXIT_FILE = 3
EXIT_INVALID = 4
EXIT_DEGENERATE = 5
EXIT_UNKNOWN_ID = 6
EXIT_OVERRIDE = 7

EXIT_CODE_HELP = """\
\b
Exit codes:
  0  success
  2  usage error (bad flags or arguments)
  3  unreadable input file
  4  invalid KB or requirements document
  5  degenerate weighting (no active criteria, undefined entropy, ambiguous baseline)
  6  unknown alternative or criterion id
  7  override not allowed for that cell
"""


def _die(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def guarded(f):
    """Map domain errors to the documented exit codes with one-line diagnostics."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except OverrideError as exc:
            _die(str(exc), EXIT_OVERRIDE)
        except UnknownIdError as exc:
            _die(str(exc), EXIT_UNKNOWN_ID)
        except (NoActiveCriteriaError, DegenerateWeightsError, AmbiguousBaselineError) as exc:
            _die(str(exc), EXIT_DEGENERATE)
        except (KBValidationError, RequirementsError) as exc:
            _die(str(exc), EXIT_INVALID)
        except OSError as exc:
            _die(str(exc), EXIT_FILE)

    return wrapper


def _load_kb(kb_src: str) -> KnowledgeBase:
    if kb_src == "builtin":
        return builtin_knowledge_base()
    with open(kb_src, encoding="utf-8") as fh:
        return load_knowledge_base(fh.read())


def _load_requirements(req_src: str, kb: KnowledgeBase) -> UserRequirements:
    if req_src == "bigbox":
        return bigbox_requirements(kb)
    with open(req_src, encoding="utf-8") as fh:
        return parse_requirements(fh.read(), kb)


def _echo_json(document: dict):
    click.echo(json.dumps(document, indent=2, ensure_ascii=False))


kb_option = click.option(
    "--kb",
    "kb_src",
    default="builtin",
    envvar="CHAINSEL_KB",
    show_default=True,
    help="Knowledge base: 'builtin' or a path to a KB file (env: CHAINSEL_KB).",
)
requirements_option = click.option(
    "--requirements",
    "req_src",
    required=True,
    help="Requirements: 'bigbox' (built-in supply-chain case) or a path to a file.",
)
format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json"]),
    default="table",
    show_default=True,
    help="Table for humans, json for machines (same document as the service).",
)


@click.group(epilog=EXIT_CODE_HELP)
def main():
    """Decision support for selecting a blockchain platform."""


@main.command()
@kb_option
@requirements_option
@format_option
@click.option("--trace", is_flag=True, help="Include intermediate pipeline values.")
@guarded
def rank(kb_src, req_src, fmt, trace):
    """Screen and rank the alternatives for a set of requirements."""
    kb = _load_kb(kb_src)
    requirements = _load_requirements(req_src, kb)
    result = rank_alternatives(kb, requirements, with_trace=trace)
    if fmt == "json":
        _echo_json(ranking_document(kb, result, include_trace=trace))
    else:
        click.echo(render_table(build_report(kb, result, include_trace=trace)), nl=False)


@main.group(name="kb")
def kb_group():
    """Inspect or validate a knowledge base."""


@kb_group.command()
@kb_option
@guarded
def validate(kb_src):
    """Check a KB file for structural and value errors."""
    kb = _load_kb(kb_src)
    click.echo(
        f"valid: {len(kb.alternatives)} alternatives, {len(kb.criteria)} criteria "
        f"(version {kb.version})"
    )


@kb_group.command()
@kb_option
@format_option
@guarded
def show(kb_src, fmt):
    """Print the knowledge base."""
    kb = _load_kb(kb_src)
    if fmt == "json":
        _echo_json(serialize_knowledge_base(kb))
        return
    click.echo(f"KB {kb.version} (updated {kb.updated_at})")
    click.echo(f"{len(kb.criteria)} criteria:")
    for c in kb.criteria:
        unit = f" [{c.unit}]" if c.unit else ""
        click.echo(f"  {c.id}: {c.label}{unit} ({c.kind}, {c.direction}, {c.iso_category})")
    click.echo(f"{len(kb.alternatives)} alternatives:")
    for a in kb.alternatives:
        click.echo(f"  {a.id}: {a.label} ({a.consensus})")


@main.command()
@kb_option
@requirements_option
@click.option("--criterion", required=True, help="Criterion whose preference is scanned.")
@click.option(
    "--resolution",
    type=click.FloatRange(min=0, min_open=True),
    default=0.05,
    show_default=True,
    help="Grid step on the 0-4 preference scale.",
)
@format_option
@guarded
def sensitivity(kb_src, req_src, criterion, resolution, fmt):
    """Find how far one preference can move without changing the winner."""
    kb = _load_kb(kb_src)
    requirements = _load_requirements(req_src, kb)
    interval = weight_stability_interval(kb, requirements, criterion, resolution)
    if fmt == "json":
        _echo_json(interval_document(kb, interval))
    else:
        click.echo(render_interval(interval, requirements.preference(criterion)), nl=False)


@main.command()
@kb_option
@requirements_option
@click.option(
    "--edit",
    "edits",
    multiple=True,
    required=True,
    help=(
        "JSON edit object, repeatable. "
        '{"criterion": ID, "preference": LABEL-or-NUMBER, "constraint": {...} | null}; '
        "a null constraint removes it, an absent key leaves it unchanged."
    ),
)
@format_option
@click.option("--trace", is_flag=True, help="Include intermediate pipeline values.")
@guarded
def whatif(kb_src, req_src, edits, fmt, trace):
    """Re-rank under edited requirements without touching the originals."""
    kb = _load_kb(kb_src)
    requirements = _load_requirements(req_src, kb)
    parsed = []
    for raw in edits:
        try:
            document = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise RequirementsError(f"edit is not valid JSON: {exc}") from None
        parsed.append(parse_edit(document))
    result = what_if(kb, requirements, parsed, with_trace=trace)
    if fmt == "json":
        _echo_json(ranking_document(kb, result, include_trace=trace))
    else:
        click.echo(render_table(build_report(kb, result, include_trace=trace)), nl=False)


@main.command(name="ingest-bench")
@click.argument("measurements", type=click.Path())
@kb_option
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Write the updated KB to this file instead of stdout.")
@click.option("--write", is_flag=True,
              help="Overwrite the --kb file in place (requires a file KB).")
@guarded
def ingest_bench(measurements, kb_src, out_path, write):
    """Apply benchmark measurements as overrides to variable KB cells.

    The measurement file holds {"measurements": [{"alternative": ID,
    "criterion": ID, "value": NUMBER}, ...]}; overrides apply in order.
    """
    if write and kb_src == "builtin":
        raise click.UsageError("--write needs --kb pointing at a file")
    kb = _load_kb(kb_src)
    with open(measurements, encoding="utf-8") as fh:
        try:
            document = json.load(fh)
        except json.JSONDecodeError as exc:
            raise RequirementsError(f"measurement file is not valid JSON: {exc}") from None
    entries = document.get("measurements") if isinstance(document, dict) else None
    if not isinstance(entries, list):
        raise RequirementsError("measurement file needs a 'measurements' list")
    for entry in entries:
        try:
            alternative = entry["alternative"]
            criterion = entry["criterion"]
            value = float(entry["value"])
        except (KeyError, TypeError, ValueError) as exc:
            raise RequirementsError(f"malformed measurement {entry!r}: {exc}") from None
        kb = apply_override(kb, alternative, criterion, value)
        click.echo(f"override: {alternative}.{criterion} = {value:g}", err=True)
    rendered = json.dumps(serialize_knowledge_base(kb), indent=2, ensure_ascii=False) + "\n"
    target = kb_src if write else out_path
    if target is None:
        click.echo(rendered, nl=False)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(rendered)
        click.echo(f"wrote KB version {kb.version} to {target}", err=True)


@main.command()
@kb_option
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8080, show_default=True)
@click.option("--kb-write", is_flag=True,
              help="Persist overrides back to the --kb file (in-memory otherwise).")
@guarded
def serve(kb_src, host, port, kb_write):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    if kb_write and kb_src == "builtin":
        raise click.UsageError("--kb-write needs --kb pointing at a file")
    kb_path = None if kb_src == "builtin" else kb_src
    app = create_app(kb_path=kb_path, kb_write=kb_write)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
