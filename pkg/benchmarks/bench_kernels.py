"""Time the numba-compiled kernels against their numpy fallbacks.

Usage: python3 benchmarks/bench_kernels.py [--reps N] [--ticks T]

The per-kernel table calls both implementations in this process. The
end-to-end rows run a scripted match in two subprocesses, with and without
MARLSOCCER_DISABLE_JIT, so they measure exactly what a user of either
backend gets.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from marlsoccer._jit import njit
from marlsoccer.env import EnvConfig, reset
from marlsoccer.env import kernels as K
from marlsoccer.nn import kernels as NK

MATCH_SNIPPET = """
import time, numpy as np
from marlsoccer.env import Team, reset, step_inplace, observe_all, scripted_team_actions
s = reset(0); a = np.empty(8, dtype=np.int64)
for _ in range(50):  # warm-up / compile
    a[:4] = scripted_team_actions(s, Team.BLUE); a[4:] = scripted_team_actions(s, Team.RED); step_inplace(s, a)
s = reset(0); t = time.perf_counter()
for _ in range({ticks}):
    observe_all(s)
    a[:4] = scripted_team_actions(s, Team.BLUE); a[4:] = scripted_team_actions(s, Team.RED)
    step_inplace(s, a)
print((time.perf_counter() - t) / {ticks})
"""


def timeit(fn, args_factory, reps):
    args = args_factory()
    fn(*args)  # compile / warm up
    best = float("inf")
    for _ in range(3):
        calls = [args_factory() for _ in range(reps)]
        t = time.perf_counter()
        for a in calls:
            fn(*a)
        best = min(best, (time.perf_counter() - t) / reps)
    return best


def kernel_cases():
    cfg = EnvConfig()
    prm = K.pack_params(cfg)
    s = reset(0, cfg)
    n = cfg.n_per_team
    hl, hw = cfg.field.half_length, cfg.field.half_width
    rng = np.random.default_rng(0)

    def phys():
        return (s.pos.copy(), s.heading.copy(), s.ball.copy(), np.array([s.holder, 0]), s.cooldown.copy(),
                rng.integers(0, 5, 2 * n).astype(np.int64), n, prm)

    def obs():
        return (s.pos, s.heading, s.ball, s.holder, n, hl, hw, True, np.zeros((2 * n, 6 * n + 4)))

    def rew():
        return (s.pos, s.ball, s.holder, n, prm, np.empty(2 * n), np.empty(2 * n))

    def chaser():
        return (s.pos, s.heading, s.ball, s.holder, 0, n, hl, 0.4, 1.5, np.empty(n, dtype=np.int64))

    sizes = np.array([28, 64, 64, 5], dtype=np.int64)
    theta = rng.normal(0, 0.1, 28 * 64 + 64 + 64 * 64 + 64 + 64 * 5 + 5)

    def mlp():
        return (theta, sizes, rng.normal(size=28))

    return [
        ("physics_step", K.physics_step_loop, K.physics_step_np, phys),
        ("encode_obs", K.encode_obs_loop, K.encode_obs_np, obs),
        ("reward_terms", K.reward_terms_loop, K.reward_terms_np, rew),
        ("chaser_actions", K.chaser_actions_loop, K.chaser_actions_np, chaser),
        ("mlp_forward", NK.mlp_forward_loop, NK.mlp_forward_np, mlp),
    ]


def match_tick_seconds(disable_jit, ticks):
    env = dict(os.environ, MARLSOCCER_DISABLE_JIT="1" if disable_jit else "0")
    out = subprocess.run([sys.executable, "-c", MATCH_SNIPPET.format(ticks=ticks)], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip())


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--reps", type=int, default=2000)
    p.add_argument("--ticks", type=int, default=3000)
    args = p.parse_args(argv)
    print(f"{'kernel':<16}{'numba us':>12}{'numpy us':>12}{'speedup':>10}")
    for name, loop, vec, factory in kernel_cases():
        tj = timeit(njit(loop), factory, args.reps)
        tn = timeit(vec, factory, args.reps)
        print(f"{name:<16}{tj * 1e6:>12.2f}{tn * 1e6:>12.2f}{tn / tj:>10.1f}")
    tj = match_tick_seconds(False, args.ticks)
    tn = match_tick_seconds(True, args.ticks)
    print(f"{'match tick':<16}{tj * 1e6:>12.2f}{tn * 1e6:>12.2f}{tn / tj:>10.1f}")


if __name__ == "__main__":
    main()
