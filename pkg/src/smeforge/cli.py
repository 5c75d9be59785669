"""Command-line entry point.

One command per invocation; human-readable output on stdout, machine output
with --format=machine, error codes on stderr. Exit codes: 0 success, 1
validation failure, 2 usage or I/O error. Output is deterministic: the same
argv against the same input files produces byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Mapping, Optional, Sequence

from smeforge import assembly, metrics, project, seeds
from smeforge.errors import SmeError
from smeforge.metamodel import FragmentKind
from smeforge.repository import (
    Origin,
    Repository,
    fragment_to_doc,
    load_repository,
    parse_json,
    query,
    relations_of,
)

DEFAULT_PORT = 8080
PORT_ENV_VAR = "SMEFORGE_PORT"


def resolve_input_path(raw: str) -> Path:
    """Resolve a file argument, falling back to the packaged seed data.

    ``seed/<name>`` (or a bare seed file name) works from any directory even
    when no such file exists on disk.
    """
    path = Path(raw)
    for candidate in (path, path.with_suffix(".json") if path.suffix == "" else path):
        if candidate.is_file():
            return candidate
    name = path.name
    try:
        return seeds.seed_path(name)
    except FileNotFoundError:
        raise OSError(f"no such file: {raw}") from None


def _read(raw: str) -> str:
    return resolve_input_path(raw).read_text(encoding="utf-8")


def _load_repo(args: argparse.Namespace) -> Repository:
    return load_repository(_read(args.repo))


def _load_selection(raw: str) -> list[str]:
    doc = parse_json(_read(raw), "selection")
    if not isinstance(doc, list) or not all(isinstance(i, str) for i in doc):
        raise SmeError("selection file must be a JSON list of fragment ids")
    return doc


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _machine(doc: object) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def cmd_validate(args: argparse.Namespace) -> int:
    repo = _load_repo(args)
    if args.format == "machine":
        _emit(args, _machine({
            "ok": True,
            "fragments": len(repo.fragments),
            "deontic_cells": len(repo.cells),
            "precedence": len(repo.precedence),
        }))
    else:
        _emit(
            args,
            f"repository OK: {len(repo.fragments)} fragments, "
            f"{len(repo.cells)} cells, {len(repo.precedence)} precedence edges\n",
        )
    return 0


def cmd_list(args: argparse.Namespace) -> int:
    repo = _load_repo(args)
    found = query(
        repo,
        kind=FragmentKind(args.kind) if args.kind else None,
        origin=Origin(args.origin) if args.origin else None,
        owner_process=args.owner_process,
        name_contains=args.contains,
    )
    if args.format == "machine":
        _emit(args, _machine([fragment_to_doc(f) for f in found]))
    else:
        lines = [f"{f.id}  [{f.kind.value}/{f.origin.value}]  {f.name}" for f in found]
        _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    return 0


def cmd_show(args: argparse.Namespace) -> int:
    repo = _load_repo(args)
    fragment = repo.fragment(args.id)
    relations = relations_of(repo, args.id)
    if args.format == "machine":
        _emit(args, _machine({
            "fragment": fragment_to_doc(fragment),
            "cells": [
                {"row": c.row, "col": c.col, "value": c.value.value}
                for c in relations.cells
            ],
            "predecessors": list(relations.predecessors),
            "successors": list(relations.successors),
        }))
        return 0
    lines = [
        f"{fragment.id}  [{fragment.kind.value}/{fragment.origin.value}]",
        f"name: {fragment.name}",
    ]
    if fragment.aliases:
        lines.append("aliases: " + ", ".join(fragment.aliases))
    if fragment.owner_process:
        lines.append(f"owner process: {fragment.owner_process}")
    if fragment.description:
        lines.append(f"description: {fragment.description}")
    for cell in relations.cells:
        lines.append(f"cell: {cell.row} -> {cell.col} [{cell.value.value}]")
    if relations.predecessors:
        lines.append("predecessors: " + ", ".join(relations.predecessors))
    if relations.successors:
        lines.append("successors: " + ", ".join(relations.successors))
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _build_construction(args: argparse.Namespace, repo: Repository) -> assembly.MethodConstruction:
    chosen = _load_selection(args.selection)
    construction = assembly.with_selection(
        assembly.MethodConstruction(name=Path(args.selection).stem), repo, chosen
    )
    if args.closure:
        construction = assembly.apply_closure(construction, repo)
    return construction


def _render_report(
    construction: assembly.MethodConstruction, report: assembly.AssemblyReport
) -> str:
    lines = [f"Method: {construction.name}"]
    lines.append(f"Selected: {len(construction.selection)} fragments")
    for finding in report.deontic:
        cell = finding.cell
        lines.append(
            f"{finding.severity.value}: {finding.code.value} "
            f"{cell.row} -> {cell.col} [{cell.value.value}]"
        )
    for issue in report.structural:
        subjects = " ".join(issue.subjects)
        lines.append(f"error: {issue.code} {subjects}".rstrip())
    for edge in report.precedence:
        lines.append(f"error: PRECEDENCE_VIOLATION {edge.before} -> {edge.after}")
    lines.append("ok" if report.ok else "not ok")
    return "\n".join(lines) + "\n"


def cmd_assemble(args: argparse.Namespace) -> int:
    repo = _load_repo(args)
    construction = _build_construction(args, repo)
    report = assembly.validate_method(construction, repo)
    if args.format == "machine":
        doc = assembly.report_to_doc(report)
        doc["selection"] = sorted(construction.selection)
        _emit(args, _machine(doc))
    else:
        _emit(args, _render_report(construction, report))
    return 0 if report.ok else 1


def cmd_export(args: argparse.Namespace) -> int:
    repo = _load_repo(args)
    construction = _build_construction(args, repo)
    doc = assembly.export_method(construction, repo)
    _emit(args, assembly.export_to_text(doc))
    return 0


def cmd_coverage(args: argparse.Namespace) -> int:
    repo = _load_repo(args)
    corpus = metrics.load_corpus(_read(args.corpus))
    fragment_set = metrics.default_fragment_set(repo)
    fmt = "machine" if args.format == "machine" else "table"
    _emit(args, metrics.corpus_report(corpus, fragment_set, repo, fmt))
    return 0


def cmd_usability(args: argparse.Namespace) -> int:
    repo = _load_repo(args)
    spec = project.load_project(_read(args.project))
    fmt = "machine" if args.format == "machine" else "table"
    _emit(args, project.project_report(spec, repo, fmt))
    return 0


def resolve_port(cli_port: Optional[int], env: Mapping[str, str] = os.environ) -> int:
    """--port wins, then the SMEFORGE_PORT variable, then the default."""
    if cli_port is not None:
        return cli_port
    return int(env.get(PORT_ENV_VAR, DEFAULT_PORT))


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from smeforge.service import create_app

    if args.repo:
        repo = _load_repo(args)
    else:
        repo = seeds.load_seed_repository()
    uvicorn.run(create_app(repo), host="127.0.0.1", port=resolve_port(args.port))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smeforge",
        description="Method-fragment repository, validation, assembly, and metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, repo_required: bool = True) -> None:
        p.add_argument("--repo", required=repo_required, help="repository file")
        p.add_argument("--format", choices=["table", "machine"], default="table")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("validate", help="load a repository and check every invariant")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("list", help="query fragments")
    common(p)
    p.add_argument("--kind", choices=[k.value for k in FragmentKind])
    p.add_argument("--origin", choices=[o.value for o in Origin])
    p.add_argument("--owner-process", dest="owner_process")
    p.add_argument("--contains", help="name or alias substring")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("show", help="one fragment with all its relations")
    common(p)
    p.add_argument("id")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("assemble", help="validate a selection as a method")
    common(p)
    p.add_argument("--selection", required=True, help="JSON list of fragment ids")
    p.add_argument("--closure", action="store_true", help="apply mandatory closure first")
    p.set_defaults(func=cmd_assemble)

    p = sub.add_parser("export", help="export a valid method as a document")
    common(p)
    p.add_argument("--selection", required=True)
    p.add_argument("--closure", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("coverage", help="corpus coverage table")
    common(p)
    p.add_argument("--corpus", required=True)
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("usability", help="project usability report")
    common(p)
    p.add_argument("--project", required=True)
    p.set_defaults(func=cmd_usability)

    p = sub.add_parser("serve", help="start the HTTP API")
    common(p, repo_required=False)
    p.add_argument("--port", type=int, default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except SmeError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"IO_ERROR: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
