"""Command-line entry point wiring the pipeline end to end.

Subcommands:
    extract            gesture keypoint files -> sub-lexical profiles
    assign             profiles + corpus + word vectors -> ratings
    neighbors          inspect ranked neighbor lists per round
    evaluate           assignments + manual ratings -> accuracy report
    import-embeddings  override corpus descriptors with external vectors

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import assigner, corpus as corpus_store, evaluation
from .config import PipelineConfig, load_config
from .errors import GesticonError
from .keypoints import normalize, parse_sequence
from .neighbors import rank_all
from .sublexical import apply_embeddings, extract_profile, parse_embedding_lines
from .wordvec import load_table


def _load_pipeline_config(path: str | None) -> PipelineConfig:
    return load_config(path) if path else PipelineConfig()


def _resolve(flag_value: str | None, config_value: str | None, what: str) -> str:
    path = flag_value or config_value
    if not path:
        raise GesticonError(f"no {what} given: pass the flag or set it in the config file")
    return path


def cmd_extract(args) -> int:
    cfg = _load_pipeline_config(args.config)
    records = []
    failures = []
    for path in args.files:
        try:
            seq = parse_sequence(Path(path).read_bytes())
            profile = extract_profile(normalize(seq), resample_len=cfg.resample_len)
            records.append(corpus_store.GestureRecord(
                id=seq.gesture_id,
                word=seq.word,
                profile=profile,
                iconicity_rating=None,
                source=args.source,
            ))
        except (GesticonError, OSError) as exc:
            failures.append((path, exc))
            print(f"error: {path}: {exc}", file=sys.stderr)
    out = corpus_store.dumps_corpus(corpus_store.build_corpus(records))
    Path(args.out).write_text(out, encoding="utf-8")
    print(f"extracted {len(records)} of {len(args.files)} gesture file(s) -> {args.out}")
    return 1 if failures else 0


def cmd_assign(args) -> int:
    cfg = _load_pipeline_config(args.config)
    corpus = corpus_store.load_corpus(_resolve(args.corpus, cfg.corpus_path, "corpus path"))
    table = load_table(_resolve(args.wordvec, cfg.wordvec_path, "word-vector path"))
    targets = list(corpus_store.load_corpus(args.targets))
    results = assigner.assign_batch(targets, corpus, table, cfg.assign_config())
    words = {t.id: t.word for t in targets}
    Path(args.out).write_text(assigner.results_to_json(results, words), encoding="utf-8")
    n_assigned = sum(isinstance(r, assigner.Assigned) for _, r in results)
    print(f"assigned {n_assigned} of {len(results)} target(s) -> {args.out}")
    return 0


def cmd_neighbors(args) -> int:
    cfg = _load_pipeline_config(args.config)
    corpus = corpus_store.load_corpus(_resolve(args.corpus, cfg.corpus_path, "corpus path"))
    targets = list(corpus_store.load_corpus(args.targets))
    if args.id is not None:
        targets = [t for t in targets if t.id == args.id]
        if not targets:
            raise GesticonError(f"no target with id {args.id!r}")
    for target in targets:
        print(f"target {target.id} ({target.word})")
        for listing in rank_all(target.profile, corpus, cfg.round_config()):
            lower, upper = cfg.bands[listing.round_index]
            print(f"  round {listing.round_index} [{lower:g}, {upper:g}):")
            if not listing.entries:
                print("    (none)")
            for rank, neighbor in enumerate(listing.entries, start=1):
                record = corpus.get(neighbor.record_id)
                c = neighbor.congruency
                print(
                    f"    {rank:>2}. {neighbor.record_id:<16} {record.word:<16}"
                    f" total={c.total:.4f} (loc {c.location_sim:.2f},"
                    f" hs {c.handshape_sim:.4f}, mov {c.movement_sim:.4f})"
                )
    return 0


def cmd_evaluate(args) -> int:
    from . import report as reporting  # defers the matplotlib import to this path

    results = assigner.results_from_json(Path(args.assignments).read_text(encoding="utf-8"))
    manual = evaluation.parse_manual_ratings(Path(args.manual).read_text(encoding="utf-8"))
    eval_report = evaluation.score(results, manual, tolerance=args.tolerance)
    rounds = reporting.round_counts(results)
    print(reporting.render_text(eval_report, rounds), end="")
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(reporting.report_to_json(eval_report, rounds), encoding="utf-8")
        (out / "per_item.csv").write_text(reporting.report_to_csv(eval_report), encoding="utf-8")
        reporting.render_rating_scatter(eval_report, out / "ratings_scatter.png")
        reporting.render_round_counts(rounds, out / "round_counts.png")
        print(f"report written to {out}/", file=sys.stderr)
    return 0


def cmd_import_embeddings(args) -> int:
    corpus = corpus_store.load_corpus(args.corpus)
    table = parse_embedding_lines(Path(args.embeddings).read_text(encoding="utf-8"))
    updated = [
        corpus_store.GestureRecord(
            id=r.id,
            word=r.word,
            profile=apply_embeddings(r.profile, r.id, table),
            iconicity_rating=r.iconicity_rating,
            source=r.source,
        )
        for r in corpus
    ]
    corpus_store.save_corpus(corpus_store.build_corpus(updated), args.out)
    print(f"imported {len(table)} vector(s) into {len(updated)} record(s) -> {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gesticon",
        description="Assign iconicity ratings to sign-language gestures from sub-lexical similarity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="extract sub-lexical profiles from gesture keypoint files")
    p.add_argument("files", nargs="+", help="gesture keypoint JSON files")
    p.add_argument("--out", required=True, help="output profiles file (corpus format, unrated)")
    p.add_argument("--config", help="pipeline config JSON")
    p.add_argument("--source", default="extracted", help="source tag for the records")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("assign", help="assign iconicity ratings to target gestures")
    p.add_argument("--corpus", help="rated corpus JSON")
    p.add_argument("--wordvec", help="word-vector text file")
    p.add_argument("--targets", required=True, help="target profiles file (corpus format)")
    p.add_argument("--out", required=True, help="output assignments JSON")
    p.add_argument("--config", help="pipeline config JSON")
    p.set_defaults(func=cmd_assign)

    p = sub.add_parser("neighbors", help="print ranked neighbor lists per round")
    p.add_argument("--corpus", help="rated corpus JSON")
    p.add_argument("--targets", required=True, help="target profiles file (corpus format)")
    p.add_argument("--id", help="restrict to one target gesture id")
    p.add_argument("--config", help="pipeline config JSON")
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("evaluate", help="score assignments against manual ratings")
    p.add_argument("--assignments", required=True, help="assignments JSON from 'assign'")
    p.add_argument("--manual", required=True, help="manual ratings file: 'gesture_id rating' lines")
    p.add_argument("--tolerance", type=float, default=evaluation.DEFAULT_TOLERANCE,
                   help="correctness tolerance on the 1..7 scale (default 1.0)")
    p.add_argument("--report-dir", help="directory for report.json, per_item.csv and figures")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("import-embeddings", help="override corpus descriptors with external vectors")
    p.add_argument("--corpus", required=True, help="corpus JSON to update")
    p.add_argument("--embeddings", required=True, help="embedding lines: id hand slot values...")
    p.add_argument("--out", required=True, help="output corpus JSON")
    p.set_defaults(func=cmd_import_embeddings)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GesticonError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
