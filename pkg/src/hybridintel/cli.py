"""Command-line entry points for the full prediction pipeline.

Exit codes: 0 success, 1 validation/processing failure, 2 usage error.
``--seed`` is accepted wherever randomness exists; the HI_SEED
environment variable provides the fallback default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .crowd.judgments import PanelConfig, group_judgments, read_judgments
from .crowd.simulate import simulate_crowd
from .ensemble import classify
from .errors import ConfigError, HybridIntelError
from .evaluation.experiment import (
    REFERENCE_LEARNER_HYPERPARAMETERS,
    learner_specs_from_hyperparameters,
    run_synthetic_experiment,
)
from .evaluation.report import load_report_obj, render_text, save_report
from .evaluation.synthetic import SyntheticConfig, generate_synthetic_dataset, reference_config
from .learners.base import LEARNER_KINDS, LearnerSpec, train_model
from .learners.persistence import save_model
from .seeding import derive_seed
from .taxonomy.dataset_io import parse_dataset, write_dataset
from .taxonomy.encoding import encode_features, fit_encoder_stats
from .crowd.judgments import aggregate_judgments, validate_panel_coverage


def _provided_seed(args: argparse.Namespace) -> int | None:
    """The seed from --seed, else HI_SEED, else None."""
    if args.seed is not None:
        return args.seed
    env = os.environ.get("HI_SEED", "")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(f"HI_SEED must be an integer, got {env!r}") from None
    return None


def _add_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None,
                        help="master seed (default: HI_SEED env var, else 0)")


def _seed_of(args: argparse.Namespace) -> int:
    provided = _provided_seed(args)
    return 0 if provided is None else provided


def _load_experiment_config(args: argparse.Namespace) -> tuple[SyntheticConfig, dict, int]:
    """Config file plus flag overrides; flags (and HI_SEED) win.

    The file is either a bare synthetic-config object or a wrapper
    ``{"synthetic": {...}, "learners": {kind: hyperparameters}}``.
    Without a file, the calibrated reference experiment is used. Returns
    the synthetic config, learner hyperparameter overrides, and the
    master seed (the provided seed, else the config's own).
    """
    provided = _provided_seed(args)
    if getattr(args, "config", None):
        with open(args.config, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
        synth_obj = obj.get("synthetic", obj) if isinstance(obj, dict) else obj
        learners = obj.get("learners", {}) if "synthetic" in obj else {}
        if provided is not None:
            synth_obj["seed"] = provided
        if getattr(args, "n", None) is not None:
            synth_obj["n_records"] = args.n
        config = SyntheticConfig.from_obj(synth_obj)
        return config, learners, config.seed if provided is None else provided
    n = getattr(args, "n", None) or 1000
    seed = 0 if provided is None else provided
    return reference_config(n_records=n, seed=seed), REFERENCE_LEARNER_HYPERPARAMETERS, seed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hybridintel",
        description="Hybrid machine + crowd prediction of startup Series A funding.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a synthetic labeled dataset")
    p.add_argument("--n", type=int, default=None,
                   help="number of records (default: config value, else 1000)")
    p.add_argument("--out", required=True, help="dataset file (.csv or .json)")
    p.add_argument("--latent-out", help="write the latent quality map (JSON)")
    p.add_argument("--config", help="synthetic config JSON (flags override)")
    _add_seed(p)

    p = sub.add_parser("encode", help="encode a dataset into feature vectors")
    p.add_argument("--data", required=True, help="dataset file")
    p.add_argument("--out", required=True, help="feature JSON output")

    p = sub.add_parser("train", help="train one learner on a labeled dataset")
    p.add_argument("--data", required=True, help="dataset file")
    p.add_argument("--learner", required=True, choices=LEARNER_KINDS)
    p.add_argument("--out", required=True, help="model JSON output")
    _add_seed(p)

    p = sub.add_parser("simulate-crowd", help="simulate rater panels for a dataset")
    p.add_argument("--data", required=True, help="dataset file")
    p.add_argument("--latent", required=True, help="latent quality map JSON")
    p.add_argument("--out", required=True, help="judgment CSV output")
    p.add_argument("--config", help="synthetic config JSON (rater pool + panel)")
    _add_seed(p)

    p = sub.add_parser("judge-serve", help="serve crowd cards and collect judgments")
    p.add_argument("--data", required=True, help="dataset file")
    p.add_argument("--store", required=True, help="append-only judgment store (CSV)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ui", help="also serve the built rating UI from this directory")

    p = sub.add_parser("aggregate", help="aggregate judgments into crowd predictions")
    p.add_argument("--judgments", required=True, help="judgment CSV")
    p.add_argument("--data", required=True, help="dataset file (defines coverage)")
    p.add_argument("--out", help="prediction JSON output (default: stdout)")
    p.add_argument("--threshold", type=float, default=0.5)

    p = sub.add_parser("evaluate", help="run the full cross-validated experiment")
    p.add_argument("--config", help="synthetic config JSON (default: reference config)")
    p.add_argument("--n", type=int, help="override record count")
    p.add_argument("--k", type=int, default=None, help="fold count override")
    p.add_argument("--out", help="report JSON output (default: report.json)")
    p.add_argument("--no-stratify", action="store_true", help="plain random folds")
    p.add_argument("--auc", action="store_true", help="include the supplementary AUC metric")
    p.add_argument("--quiet", action="store_true", help="suppress the text summary")
    _add_seed(p)

    p = sub.add_parser("report", help="render a saved report as text")
    p.add_argument("--in", dest="infile", required=True, help="report JSON")

    return parser


def _cmd_generate(args: argparse.Namespace) -> int:
    config, _, _ = _load_experiment_config(args)
    records, latent = generate_synthetic_dataset(config)
    write_dataset(records, args.out)
    if args.latent_out:
        with open(args.latent_out, "w", encoding="utf-8") as handle:
            json.dump(latent, handle, sort_keys=True, indent=2)
            handle.write("\n")
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _cmd_encode(args: argparse.Namespace) -> int:
    records = parse_dataset(args.data)
    stats = fit_encoder_stats(records)
    vectors = encode_features(records, stats)
    doc = {
        "feature_names": list(vectors[0].names),
        "encoder_stats": stats.to_obj(),
        "records": [
            {"record_id": v.record_id, "values": [float(x) for x in v.values]}
            for v in vectors
        ],
    }
    with open(args.out, "w", encoding="utf-8") as handle:
        json.dump(doc, handle, sort_keys=True)
        handle.write("\n")
    print(f"encoded {len(vectors)} records x {len(doc['feature_names'])} features")
    return 0


def _cmd_train(args: argparse.Namespace) -> int:
    records = parse_dataset(args.data)
    labeled = [r for r in records if r.label_series_a is not None]
    if not labeled:
        raise ConfigError("training requires labeled records")
    stats = fit_encoder_stats(labeled)
    vectors = encode_features(labeled, stats)
    labels = [bool(r.label_series_a) for r in labeled]
    spec = LearnerSpec(kind=args.learner,
                       seed=derive_seed(_seed_of(args), "learner", args.learner))
    model = train_model(spec, vectors, labels, encoder_stats=stats)
    save_model(model, args.out)
    print(f"trained {args.learner} on {len(labeled)} records -> {args.out}")
    return 0


def _cmd_simulate_crowd(args: argparse.Namespace) -> int:
    records = parse_dataset(args.data)
    with open(args.latent, "r", encoding="utf-8") as handle:
        latent = {str(k): float(v) for k, v in json.load(handle).items()}
    config, _, seed = _load_experiment_config(args)
    raters = config.rater_pool.build()
    judgments = simulate_crowd(records, latent, raters, config.panel,
                               seed=derive_seed(seed, "crowd-sim"))
    from .crowd.judgments import write_judgments
    write_judgments(judgments, args.out)
    print(f"wrote {len(judgments)} judgments to {args.out}")
    return 0


def _cmd_judge_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app, mount_rating_ui
    from .service.store import JudgmentStore

    records = parse_dataset(args.data)
    store = JudgmentStore(args.store)
    app = create_app(records, store)
    if args.ui:
        mount_rating_ui(app, args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _cmd_aggregate(args: argparse.Namespace) -> int:
    records = parse_dataset(args.data)
    judgments = read_judgments(args.judgments)
    panel = PanelConfig()
    coverage = validate_panel_coverage(judgments, records, panel)
    if not coverage.ready:
        deficient = coverage.deficient()
        first = deficient[0]
        raise ConfigError(
            f"insufficient panels for {len(deficient)} record/class pairs, e.g. "
            f"record {first.record_id!r} has {first.count} {first.rater_class} "
            f"judgments (minimum {first.required_min})"
        )
    groups = group_judgments(judgments)
    rows = []
    for record in records:
        for rater_class in ("nonexpert", "expert"):
            prediction = aggregate_judgments(groups[(record.id, rater_class)], panel)
            rows.append({
                "record_id": record.id,
                "predictor_id": prediction.predictor_id,
                "probability": prediction.probability,
                "decision": classify(prediction, args.threshold),
            })
    text = json.dumps(rows, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    config, learner_hp, seed = _load_experiment_config(args)
    report = run_synthetic_experiment(
        config,
        learner_specs=learner_specs_from_hyperparameters(learner_hp, seed),
        k=args.k,
        seed=seed,
        stratified=not args.no_stratify,
        include_auc=args.auc,
    )
    out = args.out or "report.json"
    save_report(report, out)
    if not args.quiet:
        print(render_text(report))
    print(f"report written to {out}")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    print(render_text(load_report_obj(args.infile)))
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "encode": _cmd_encode,
    "train": _cmd_train,
    "simulate-crowd": _cmd_simulate_crowd,
    "judge-serve": _cmd_judge_serve,
    "aggregate": _cmd_aggregate,
    "evaluate": _cmd_evaluate,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except HybridIntelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
