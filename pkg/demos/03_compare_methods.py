"""
Base training against the two co-teaching filters
=================================================

The heavy-noise benchmark for a single seed. Base training only falls behind
once it starts memorising the bad labels, after about 100 epochs, so the
schedule is not shortened. Expect about two minutes on one CPU core.
"""
from pathlib import Path

from coteach_det.config import load_config
from coteach_det.coteach import build_dataset, pseudo_view, train

cfg = load_config(Path(__file__).resolve().parents[1] / "configs" / "heavy_noise.yaml")
cfg = cfg.with_overrides({"eval.interval": cfg.train.schedule.epochs})
ds = pseudo_view(build_dataset(cfg), cfg.dataset.conf_threshold, cfg.dataset.nms_iou)

arms = {
    "base": {"train.method": "base"},
    "per-image": {"train.method": "per_image_coteach"},
    "per-object": {"train.method": "per_object_coteach"},
    "clean labels": {"train.method": "base", "dataset.train_labels": "gt"},
}
for name, over in arms.items():
    res = train(cfg.with_overrides(over), ds)
    last = [r for r in res.history if r["peer"] == "f"][-1]
    prec = last["discard_precision"]
    extra = f"  discard precision {prec:.2f} (base rate {last['noisy_base_rate']:.2f})" if prec else ""
    print(f"{name:<13} val mAP@0.5 {res.final['f'].map50:.3f}{extra}")
