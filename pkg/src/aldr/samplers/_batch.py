"""Shared driver for batch sampling."""

import numpy as np

from .. import _kernels
from .sources import CountingSource, seeded_core


def run_batch(source, count, backend, kernel_name, kernel_args, draw_one):
    """Draw ``count`` labels; returns ``(labels, flips_per_sample)``.

    Seeded sources go through the named batch kernel, whose leading
    arguments come from ``kernel_args(backend)``.  Any other source (or
    ``kernel_args=None``) falls back to calling ``draw_one(source)``.
    """
    out = np.zeros(count, dtype=np.int64)
    flips = np.zeros(count, dtype=np.int64)
    core, counter = seeded_core(source)
    if core is None or kernel_args is None:
        meter = CountingSource(source)
        for s in range(count):
            before = meter.flips
            out[s] = draw_one(meter)
            flips[s] = meter.flips - before
        return out, flips
    be = _kernels.get_backend(backend)
    kernel = getattr(be, kernel_name)
    start = core.position
    end = int(kernel(*kernel_args(be), be.prepare_seed(core.seed), start, out, flips))
    core.position = end
    if counter is not None:
        counter.flips += end - start
    return out, flips
