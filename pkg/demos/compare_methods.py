"""Compare every unlearning method through the experiment harness.

Runs the cached pipeline for a few forget classes and seeds, then renders the
comparison tables and plots. Re-running is cheap: finished stages are reused.

    python demos/compare_methods.py --out runs/demo --classes 0 1 --seeds 0
    python demos/compare_methods.py --out runs/demo --sizes 50 100
"""
import argparse
import logging

from twin_unlearn.harness.config import load_config
from twin_unlearn.harness.pipeline import run_experiment, sweep_forget_size
from twin_unlearn.harness.report import emit_report


def parse_args():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default="runs/demo")
    p.add_argument("--classes", type=int, nargs="+", default=[0, 1])
    p.add_argument("--seeds", type=int, nargs="+", default=[0])
    p.add_argument("--n-forget", type=int, default=60)
    p.add_argument("--sizes", type=int, nargs="+", help="also sweep these forget-set sizes")
    p.add_argument("--per-class", type=int, default=300, help="training images per class")
    p.add_argument("--epochs", type=int, default=15)
    p.add_argument("--workers", type=int, default=1)
    return p.parse_args()


def main():
    args = parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    cfg = load_config(
        profile="offline", out=args.out, forget_classes=args.classes, seeds=args.seeds,
        n_forget=args.n_forget,
        dataset_options={"n_train_per_class": args.per_class,
                         "n_test_per_class": args.per_class // 2},
        train={"epochs": args.epochs, "lr_milestones": [args.epochs // 2]},
    )
    run_experiment(cfg, workers=args.workers)
    if args.sizes:
        result = sweep_forget_size(cfg, args.sizes)
        for n in args.sizes:
            print(f"|D_f| = {n}: mean tmu delta {result.mean(n, 'tmu'):.2f}")

    files = emit_report(args.out)
    print(files["markdown"].read_text())
    for name, path in files.items():
        print(f"{name}: {path}")


if __name__ == "__main__":
    main()
