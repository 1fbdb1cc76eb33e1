"""
Small-loss selection, one object at a time
==========================================

Two freshly initialised peers score the positive anchors of one batch.
Each peer keeps the objects the *other* peer finds easiest.
"""
import numpy as np

from coteach_det.config import from_dict
from coteach_det.coteach import (StepConfig, build_dataset, cross_select, forget_rate, init_state,
                                 keep_count, prepare_scenes, pseudo_view)
from coteach_det.losses import batch_targets, per_anchor_losses, selection_losses

cfg = from_dict({"dataset": {"n_scenes": 40}})
ds = pseudo_view(build_dataset(cfg), cfg.dataset.conf_threshold, cfg.dataset.nms_iou)
scenes = prepare_scenes(ds, cfg)[:8]
state = init_state(cfg)
anchors, sc = cfg.model.anchors, StepConfig.from_run(cfg)

x = np.stack([s.features for s in scenes])
targets = batch_targets([s.targets for s in scenes])
sel = {p: selection_losses(per_anchor_losses(det.forward(x), targets, anchors),
                          sc.selection_weights, sc.variant)
       for p, det in state.peers.items()}

# the forget rate ramps from 0 to r_hat, then holds
sched = cfg.train.schedule
for epoch in (1, 50, 150, 300):
    print(f"epoch {epoch:>3}: forget rate {forget_rate(epoch, sched):.3f}")

k = keep_count(targets.n_pos, sched.r_hat)
keep_f, keep_g = cross_select(sel["f"], sel["g"], k)
print(f"\n{targets.n_pos} positive anchors, each peer keeps {k}")

noisy = targets.noisy
dropped_f = np.setdiff1d(np.arange(targets.n_pos), keep_f)
print(f"noisy among all positives:  {noisy.mean():.2f}")
print(f"noisy among f's discards:   {noisy[dropped_f].mean() if len(dropped_f) else float('nan'):.2f}")
print(f"peers agree on {len(np.intersect1d(keep_f, keep_g))}/{k} kept anchors")
# untrained peers discard close to at random; the precision gap opens once
# they have fit the easy, clean objects (see 03_compare_methods.py)
