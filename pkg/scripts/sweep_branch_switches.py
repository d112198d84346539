"""Audit every branch switch in cpwall.specfun against mpmath.

Run from the repository root:

    python scripts/sweep_branch_switches.py

For each function with multiple evaluation branches this sweeps dense
grids straddling the switch locus and reports the worst relative error
per region.  The numbers quoted in the specfun docstrings come from
this script's output.
"""

from __future__ import annotations

import numpy as np
import mpmath as mp

from cpwall import specfun as sf

mp.mp.dps = 40


def report(name: str, pts, got, want) -> None:
    rel = np.array(
        [abs(g - w) / max(abs(w), 1e-300) for g, w in zip(got, want)]
    )
    i = int(np.argmax(rel))
    print(f"{name:34s} n={len(pts):4d}  worst {rel[i]:.3e} at {pts[i]}")


def sweep_kernel() -> None:
    grid = np.geomspace(1e-4, 0.5, 300)
    want = [
        float((mp.mpf(u) ** 2 * mp.sin(u) + 2 * mp.mpf(u) * mp.cos(u) - 2 * mp.sin(u)) / mp.mpf(u) ** 3)
        for u in grid
    ]
    got = [sf.kernel_g(float(u)) for u in grid]
    report("kernel_g (switch 0.1)", grid, got, want)


def sweep_ci_si() -> None:
    grid = np.linspace(2.0, 8.0, 301)
    want_ci = [float(mp.ci(x)) for x in grid]
    want_si = [float(mp.si(x) - mp.pi / 2) for x in grid]
    report("cosine_integral (switch 4)", grid, [sf.cosine_integral(float(x)) for x in grid], want_ci)
    report("sine_integral_si (switch 4)", grid, [sf.sine_integral_si(float(x)) for x in grid], want_si)


def sweep_aux() -> None:
    grid = np.geomspace(0.01, 200.0, 400)
    want_f = [float(mp.ci(x) * mp.sin(x) - (mp.si(x) - mp.pi / 2) * mp.cos(x)) for x in grid]
    want_g = [float(mp.ci(x) * mp.cos(x) + (mp.si(x) - mp.pi / 2) * mp.sin(x)) for x in grid]
    report("auxiliary_f (0.01..200)", grid, [sf.auxiliary_f(float(x)) for x in grid], want_f)
    report("auxiliary_g (0.01..200)", grid, [sf.auxiliary_g(float(x)) for x in grid], want_g)


def sweep_e1t() -> None:
    rng = np.random.default_rng(20260817)

    def ref(w: complex) -> complex:
        return complex(mp.exp(w) * mp.e1(w))

    # radial switch |w| = 2 at assorted phases (staying off the cut)
    phases = np.linspace(-0.95 * np.pi, 0.95 * np.pi, 41)
    for tag, radii in (("|w|=2", np.linspace(1.6, 2.5, 19)), ("|w|=35", np.linspace(30.0, 40.0, 21))):
        pts = [r * np.exp(1j * p) for r in radii for p in phases]
        got = [complex(sf.scaled_e1(w)) for w in pts]
        want = [ref(w) for w in pts]
        report(f"scaled_e1 (switch {tag})", pts, got, want)

    # angular switch |arg w| = 3pi/4
    radii = np.geomspace(2.0, 300.0, 25)
    angs = np.linspace(0.70 * np.pi, 0.80 * np.pi, 21)
    pts = [r * np.exp(1j * a) for r in radii for a in angs]
    pts += [p.conjugate() for p in pts]
    got = [complex(sf.scaled_e1(w)) for w in pts]
    want = [ref(w) for w in pts]
    report("scaled_e1 (switch arg 3pi/4)", pts, got, want)

    # random accuracy audit over the working domain
    pts = []
    while len(pts) < 300:
        w = complex(rng.uniform(-60, 60), rng.uniform(-60, 60))
        if abs(w) < 1e-2 or (w.real < 0 and abs(w.imag) < 1e-6):
            continue
        pts.append(w)
    got = [complex(sf.scaled_e1(w)) for w in pts]
    want = [ref(w) for w in pts]
    report("scaled_e1 (random box 60)", pts, got, want)


def sweep_polygamma() -> None:
    rng = np.random.default_rng(7)
    pts = []
    for _ in range(120):
        m = int(rng.integers(0, 12))
        z = complex(rng.uniform(-8, 12), rng.uniform(-12, 12))
        if abs(z.imag) < 0.05:
            z += 0.3j
        pts.append((m, z))
    got = [complex(sf.polygamma(m, z)) for m, z in pts]
    want = [complex(mp.psi(m, z)) for m, z in pts]
    report("polygamma (m<12, box)", pts, got, want)

    # high orders against the scaled route
    pts2 = [(m, 1.0 - 1j / eta) for m in (40, 80, 160) for eta in (0.05, 0.5, 5.0)]
    got = [complex(sf.polygamma(m, z)) for m, z in pts2]
    want = [complex(mp.psi(m, z)) for m, z in pts2]
    report("polygamma (m in 40..160)", pts2, got, want)


def sweep_bose_q() -> None:
    grid = np.geomspace(0.02, 50.0, 200)
    want = [float(mp.pi / mp.tanh(mp.pi / e) / (2 * e) - mp.mpf(1) / 2) for e in grid]
    report("bose_sum_p (switch 2)", grid, [sf.bose_sum_p(float(e)) for e in grid], want)

    grid_q = np.geomspace(1.05, 40.0, 60)
    def q_ref(x):
        x = mp.mpf(float(x))
        return float(mp.nsum(lambda m: (-1) ** m * (1 - 1 / m) * mp.zeta(2 * m) / x ** (2 * m), [2, mp.inf]))
    report("q_series (1.05..40)", grid_q, [sf.q_series(float(x)) for x in grid_q], [q_ref(x) for x in grid_q])


if __name__ == "__main__":
    sweep_kernel()
    sweep_ci_si()
    sweep_aux()
    sweep_e1t()
    sweep_polygamma()
    sweep_bose_q()
