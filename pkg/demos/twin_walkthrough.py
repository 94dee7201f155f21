"""Walk through one removal request by hand, stage by stage.

Trains a small network on the synthetic image set, removes part of one class,
and compares negative-gradient unlearning with the twin-guided variant against
a model retrained without the removed samples. Takes a few minutes on a CPU.

    python demos/twin_walkthrough.py --forget-class 3 --n-forget 60
"""
import argparse
import logging

import numpy as np

from twin_unlearn.data import load_dataset, make_removal_split
from twin_unlearn.evaluation import evaluate_run
from twin_unlearn.modeling import TrainConfig, accuracy, build_model, train
from twin_unlearn.twin import construct_twin, easy_mask, label_generalization
from twin_unlearn.unlearn import UnlearnConfig, run_method


def parse_args():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--forget-class", type=int, default=3)
    p.add_argument("--n-forget", type=int, default=60)
    p.add_argument("--per-class", type=int, default=300, help="training images per class")
    p.add_argument("--epochs", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    return p.parse_args()


def main():
    args = parse_args()
    logging.basicConfig(level=logging.WARNING)

    train_set, test_set = load_dataset("synthetic-images", n_train_per_class=args.per_class,
                                       n_test_per_class=args.per_class // 2, seed=args.seed)
    cfg = TrainConfig(epochs=args.epochs, learning_rate=0.05,
                      lr_milestones=(args.epochs // 2,), batch_size=64, seed=args.seed)

    def fresh(seed):
        return build_model("resnet18-small", train_set.num_classes, seed,
                           train_set.sample_shape, width=8)

    print("training the original model on all data")
    original = train(fresh(args.seed), train_set, cfg)
    split = make_removal_split(train_set, args.forget_class, args.n_forget, args.seed,
                               test=test_set)
    print(f"  test accuracy {accuracy(original, test_set):.1f}, "
          f"forget-set accuracy {accuracy(original, split.forget):.1f}")

    # The gold model is what we are trying to imitate. Real deployments never
    # get to train it; here it only scores the result.
    print("retraining without the forget set (reference only)")
    gold = train(fresh(args.seed + 1), split.remain, cfg)
    gold_easy = easy_mask(label_generalization(gold, split.forget))
    print(f"  the retrained model still gets {100 * gold_easy.mean():.0f}% of the "
          f"removed samples right")

    # Twin problem: fine-tune on test images of the same class, at the same
    # forgetting ratio. Forgetting them again has a known answer, the original.
    twin = construct_twin(original, test_set, split, seed=args.seed)
    twin_easy = easy_mask(label_generalization(twin.gold_model, twin.twin_forget))
    print(f"twin forget set: {len(twin.twin_forget)} test images, "
          f"{100 * twin_easy.mean():.0f}% easy for the original model")

    print("\nmethod        ACC_Dtest  ACC_Df  gold ACC_Df  delta")
    for method in ("neggrad", "tmu"):
        ucfg = UnlearnConfig.for_method(method, seed=args.seed)
        model, partition, diag = run_method(method, original, split, ucfg, twin)
        r = evaluate_run(model, gold, split, method)
        print(f"{method:<12} {r.acc_test:>9.1f} {r.acc_forget:>7.1f} {r.gold_acc_forget:>12.1f} "
              f"{r.delta:>6.1f}")
        if partition is not None:
            predicted = np.isin(split.forget.index, partition.easy)
            agree = 100 * float((predicted == gold_easy).mean())
            print(f"{'':12} predicted {diag['n_easy']} easy / {diag['n_hard']} hard; "
                  f"labels agree with the retrained model on {agree:.0f}%")


if __name__ == "__main__":
    main()
