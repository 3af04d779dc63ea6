"""Exact-arithmetic reference model, independent of the package internals.

Every quantity is a Fraction built from the scenario's float fields, so the
ceiling in the waiting-time term is evaluated without rounding slack.
"""
from fractions import Fraction as F
from itertools import product
from math import ceil


def _q(x):
    return F(x)


def layer_terms(scen, k):
    sat, cloud, req = scen.satellite, scen.cloud, scen.request
    size = _q(req.alphas[k - 1]) * _q(req.data_size)
    delta = size * _q(sat.beta)
    delta_cloud = size * _q(cloud.gamma)
    t_tr = size / _q(sat.rate_down)
    passes = ceil(size / (_q(sat.rate_down) * _q(sat.t_con)))
    t_per = _q(sat.t_cyc) * (passes - 1)
    t_gc = F(0) if cloud.colocated else size / _q(cloud.rate_gs_dc)
    e_sat = delta * (size / (_q(sat.zeta) * delta) * _q(sat.p_max) + _q(sat.p_idle) + _q(sat.p_leak))
    e_off = t_tr * _q(sat.p_off)
    return dict(delta=delta, delta_cloud=delta_cloud, t_down=t_tr + t_per, t_gc=t_gc, e_sat=e_sat, e_off=e_off)


def latency_energy(scen, h):
    """(T, E) for any binary vector h, summed term by term with h_0 = 1."""
    hh = (1,) + tuple(h)
    T = E = F(0)
    for k in range(1, len(hh)):
        c = layer_terms(scen, k)
        down = hh[k - 1] - hh[k]
        T += hh[k] * c["delta"] + down * c["t_down"] + down * c["t_gc"] + (1 - hh[k]) * c["delta_cloud"]
        E += hh[k] * c["e_sat"] + down * c["e_off"]
    return T, E


def constraints_hold(h):
    K = len(h)
    if any(v not in (0, 1) for v in h):
        return False
    if sum(h) + sum(1 - v for v in h) != K:
        return False
    if any(h[k] < h[k + 1] for k in range(K - 1)):
        return False
    hh = (1,) + tuple(h)
    return sum(1 for k in range(1, K + 1) if hh[k - 1] - hh[k] == 1) <= 1


def feasible_vectors(K):
    return [h for h in product((0, 1), repeat=K) if constraints_hold(h)]


def optimum(scen):
    """Exact (z, split) of the best feasible vector; ties go to fewer onboard layers."""
    K = scen.request.n_layers
    cands = feasible_vectors(K)
    vals = {h: latency_energy(scen, h) for h in cands}
    Ts = [v[0] for v in vals.values()]
    Es = [v[1] for v in vals.values()]
    t_min, t_max, e_min, e_max = min(Ts), max(Ts), min(Es), max(Es)
    mu, lam = F(scen.mu), F(scen.lam)

    def z(h):
        T, E = vals[h]
        ne = (E - e_min) / (e_max - e_min) if e_max != e_min else F(0)
        nt = (T - t_min) / (t_max - t_min) if t_max != t_min else F(0)
        return mu * ne + lam * nt

    zs = {h: z(h) for h in cands}
    best = min(zs.values())
    return best, zs
