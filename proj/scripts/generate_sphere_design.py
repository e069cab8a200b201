#!/usr/bin/env python3
"""Generate spherical t-design point sets on the unit two-sphere.

A point set {x_1..x_N} is a spherical t-design when the equal-weight rule
(4*pi/N) * sum_j p(x_j) integrates every spherical polynomial of degree <= t
exactly.  Equivalently all first moments of the real spherical harmonics
Y_{l,k}, 1 <= l <= t, vanish.  We solve that moment system directly with a
damped Gauss-Newton (Levenberg-Marquardt) iteration, starting from a
Fibonacci spiral.  The system is underdetermined (2N - 3 > (t+1)^2 - 1 for
N = (t+1)^2), so a minimum-norm step via the normal equations J J^T is used.

Output format: one "x y z" unit vector per line, '#' comments allowed.

Usage: generate_sphere_design.py T N OUTPATH
"""

import sys

import numpy as np
import jax

jax.config.update("jax_enable_x64", True)
import jax.numpy as jnp


def real_sh_rows(x, t):
    """Rows of orthonormal real spherical harmonics Y_{l,k}, l = 1..t.

    x: (N,3) unit vectors. Returns (N, (t+1)^2 - 1).
    Normalization: integral of Y^2 over the sphere (area measure) is 1.
    Uses the fully normalized associated-Legendre recurrence (no
    Condon-Shortley phase).
    """
    z = x[:, 2]
    s = jnp.sqrt(jnp.maximum(1.0 - z * z, 0.0))
    phi = jnp.arctan2(x[:, 1], x[:, 0])

    # pbar[m] holds \bar P_l^m for the current l as the recurrence advances.
    cols = []
    inv_sqrt4pi = 1.0 / jnp.sqrt(4.0 * jnp.pi)
    pmm = jnp.full_like(z, inv_sqrt4pi)  # \bar P_0^0
    # prev[m], cur[m]: \bar P_{l-1}^m and \bar P_l^m
    prev = {0: None}
    cur = {0: pmm}
    for l in range(1, t + 1):
        nxt = {}
        for m in range(0, l - 1):
            a = np.sqrt((4.0 * l * l - 1.0) / (l * l - m * m))
            b = np.sqrt(((l - 1.0) ** 2 - m * m) / (4.0 * (l - 1.0) ** 2 - 1.0))
            nxt[m] = a * (z * cur[m] - b * prev[m])
        if l >= 1:
            m = l - 1
            nxt[m] = np.sqrt(2.0 * m + 3.0) * z * cur[m]
        # diagonal \bar P_l^l
        nxt[l] = np.sqrt((2.0 * l + 1.0) / (2.0 * l)) * s * cur[l - 1]
        prev, cur = cur, nxt

        cols.append(cur[0])
        r2 = np.sqrt(2.0)
        for m in range(1, l + 1):
            cols.append(r2 * cur[m] * jnp.cos(m * phi))
            cols.append(r2 * cur[m] * jnp.sin(m * phi))
    return jnp.stack(cols, axis=1)


def make_residual(t):
    def residual(u):
        x = u / jnp.linalg.norm(u, axis=1, keepdims=True)
        y = real_sh_rows(x, t)
        return jnp.sum(y, axis=0)

    return jax.jit(residual), jax.jit(jax.jacrev(residual))


def fibonacci_sphere(n):
    i = np.arange(n, dtype=float)
    z = 1.0 - (2.0 * i + 1.0) / n
    r = np.sqrt(np.maximum(1.0 - z * z, 0.0))
    theta = np.pi * (np.sqrt(5.0) + 1.0) * i
    return np.stack([r * np.cos(theta), r * np.sin(theta), z], axis=1)


def solve_design(t, n, seed=0, max_iter=400, target=1e-21):
    res_f, jac_f = make_residual(t)
    u = fibonacci_sphere(n)
    rng = np.random.default_rng(seed)
    u = u + 1e-4 * rng.standard_normal(u.shape)  # break spiral symmetry
    u /= np.linalg.norm(u, axis=1, keepdims=True)

    c = np.asarray(res_f(u))
    f = float(c @ c)
    mu = 1e-6
    m = c.size
    for it in range(max_iter):
        if f < target:
            break
        j = np.asarray(jac_f(u)).reshape(m, -1)
        jjt = j @ j.T
        diag = np.maximum(np.diag(jjt).mean(), 1e-30)
        accepted = False
        for _ in range(40):
            try:
                y = np.linalg.solve(jjt + mu * diag * np.eye(m), c)
            except np.linalg.LinAlgError:
                mu *= 10.0
                continue
            step = -(j.T @ y).reshape(u.shape)
            u_try = u + step
            u_try /= np.linalg.norm(u_try, axis=1, keepdims=True)
            c_try = np.asarray(res_f(u_try))
            f_try = float(c_try @ c_try)
            if f_try < f:
                u, c, f = u_try, c_try, f_try
                mu = max(mu * 0.3, 1e-14)
                accepted = True
                break
            mu *= 10.0
        if not accepted:
            break
        if (it + 1) % 10 == 0 or f < target:
            print(f"  iter {it+1:4d}  |c|^2 = {f:.3e}  mu = {mu:.1e}", flush=True)
    return u / np.linalg.norm(u, axis=1, keepdims=True), f


def verify(x, t):
    """Independent numpy verification of the weighted moments."""
    n = x.shape[0]

    z = x[:, 2]
    s = np.sqrt(np.maximum(1.0 - z * z, 0.0))
    phi = np.arctan2(x[:, 1], x[:, 0])
    cols = []
    pmm = np.full_like(z, 1.0 / np.sqrt(4.0 * np.pi))
    prev, cur = {0: None}, {0: pmm}
    for l in range(1, t + 1):
        nxt = {}
        for m in range(0, l - 1):
            a = np.sqrt((4.0 * l * l - 1.0) / (l * l - m * m))
            b = np.sqrt(((l - 1.0) ** 2 - m * m) / (4.0 * (l - 1.0) ** 2 - 1.0))
            nxt[m] = a * (z * cur[m] - b * prev[m])
        nxt[l - 1] = np.sqrt(2.0 * l + 1.0) * z * cur[l - 1]
        nxt[l] = np.sqrt((2.0 * l + 1.0) / (2.0 * l)) * s * cur[l - 1]
        prev, cur = cur, nxt
        cols.append(cur[0])
        for m in range(1, l + 1):
            cols.append(np.sqrt(2.0) * cur[m] * np.cos(m * phi))
            cols.append(np.sqrt(2.0) * cur[m] * np.sin(m * phi))
    y = np.stack(cols, axis=1)
    w = 4.0 * np.pi / n
    moments = w * y.sum(axis=0)
    return np.abs(moments).max()


def main():
    t, n, path = int(sys.argv[1]), int(sys.argv[2]), sys.argv[3]
    print(f"solving t={t} design with N={n} ...", flush=True)
    x, f = solve_design(t, n)
    worst = verify(x, t)
    print(f"final |c|^2 = {f:.3e}, max weighted moment = {worst:.3e}", flush=True)
    if worst > 1e-11:
        print("FAILED to reach tolerance", flush=True)
        sys.exit(1)
    with open(path, "w") as fh:
        fh.write(f"# spherical t-design, t = {t}, N = {n}, equal weights 4*pi/N\n")
        fh.write("# computed by scripts/generate_sphere_design.py "
                 "(first-moment Levenberg-Marquardt from a Fibonacci start)\n")
        fh.write(f"# max |(4 pi / N) sum_j Y(x_j)| over degrees 1..{t}: {worst:.3e}\n")
        for row in x:
            fh.write(f"{row[0]:.17g} {row[1]:.17g} {row[2]:.17g}\n")
    print(f"wrote {path}", flush=True)


if __name__ == "__main__":
    main()
