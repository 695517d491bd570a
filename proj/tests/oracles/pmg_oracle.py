"""Symbolic reference for pm-graph invariants.

Points are inserted with symbolic arclength, the Laplacian is solved with
sympy and every integral is taken analytically. The canonical measure uses
R_e from deleting the edge. Prints frozen values for the C++ tests.
"""
import sys
import sympy as sp

s, t = sp.symbols("s t", positive=True)


def resistance(nv, edges, a, b):
    if a == b:
        return sp.Integer(0)
    keep = [i for i in range(nv) if i != a]
    idx = {v: k for k, v in enumerate(keep)}
    L = sp.zeros(nv - 1, nv - 1)
    for u, v, l in edges:
        if u == v:
            continue
        c = 1 / l
        for x, y in ((u, v), (v, u)):
            if x != a:
                L[idx[x], idx[x]] += c
                if y != a:
                    L[idx[x], idx[y]] -= c
    rhs = sp.zeros(nv - 1, 1)
    rhs[idx[b], 0] = 1
    return sp.simplify(L.LUsolve(rhs)[idx[b], 0])


def split(nv, edges, e, at):
    u, v, l = edges[e]
    new = list(edges)
    new[e] = (u, nv, at)
    new.append((nv, v, l - at))
    return nv + 1, new


class Oracle:
    def __init__(self, q, edges):
        self.q = q
        self.nv = len(q)
        self.edges = [(u, v, sp.Rational(l)) for u, v, l in edges]
        self.val = [sum((u == i) + (v == i) for u, v, _ in self.edges) for i in range(self.nv)]
        self.K = [2 * q[i] - 2 + self.val[i] for i in range(self.nv)]
        self.g = len(self.edges) - self.nv + 1 + sum(q)
        self.can_pm = [1 - sp.Rational(self.val[i], 2) for i in range(self.nv)]
        self.can_d = []
        for e, (u, v, l) in enumerate(self.edges):
            if u == v:
                self.can_d.append(1 / l)
                continue
            rest = self.edges[:e] + self.edges[e + 1:]
            if not self.connected(rest, u, v):
                self.can_d.append(sp.Integer(0))
            else:
                self.can_d.append(1 / (l + resistance(self.nv, rest, u, v)))
        g = self.g
        self.a_pm = [(self.K[i] + 2 * self.can_pm[i]) / (2 * g) for i in range(self.nv)]
        self.a_d = [d / g for d in self.can_d]

    def connected(self, edges, a, b):
        seen, stack = {a}, [a]
        while stack:
            x = stack.pop()
            for u, v, _ in edges:
                for p, r in ((u, v), (v, u)):
                    if p == x and r not in seen:
                        seen.add(r)
                        stack.append(r)
        return b in seen

    def r_point(self, nv, edges, x):
        """Integrals of r(x, .) against point masses and densities; x vertex index in (nv, edges)."""
        total = sum(self.a_pm_ext(i) * resistance(nv, edges, x, i) for i in range(self.nv))
        return total

    def integrate_r(self, nv, edges, x, pm, dens, base_edges):
        """int r(x, y) d(mu)(y) where x is a vertex of the graph (nv, edges) that refines base."""
        total = sum(pm[i] * resistance(nv, edges, x, i) for i in range(self.nv))
        for f, (u, v, l) in enumerate(base_edges):
            if dens[f] == 0:
                continue
            # pieces of base edge f in the refined graph
            pieces = [k for k in range(len(edges)) if self.piece_of(k, f, len(base_edges))]
            for k in pieces:
                lk = edges[k][2]
                nv2, e2 = split(nv, edges, k, t)
                r = resistance(nv2, e2, x, nv2 - 1)
                total += dens[f] * sp.integrate(r, (t, 0, lk))
        return sp.simplify(total)

    def piece_of(self, k, f, nbase):
        return k == f or (k >= nbase and self.origin.get(k) == f)

    def theta_at_vertex(self, x):
        self.origin = {}
        return self.integrate_r(self.nv, self.edges, x, self.a_pm, self.a_d, self.edges)

    def theta_on_edge(self, e):
        nv, edges = split(self.nv, self.edges, e, s * self.edges[e][2])
        self.origin = {len(self.edges): e}
        return self.integrate_r(nv, edges, nv - 1, self.a_pm, self.a_d, self.edges)

    def run(self):
        g = self.g
        th_v = [self.theta_at_vertex(x) for x in range(self.nv)]
        th_e = [self.theta_on_edge(e) for e in range(len(self.edges))]
        C = sum(self.a_pm[i] * th_v[i] for i in range(self.nv))
        for e, (u, v, l) in enumerate(self.edges):
            C += self.a_d[e] * l * sp.integrate(th_e[e], (s, 0, 1))
        C = sp.nsimplify(C / 2)
        gd_int = sum(self.a_d[e] * l * sp.integrate(th_e[e] - C, (s, 0, 1))
                     for e, (u, v, l) in enumerate(self.edges))
        gd_v = [th_v[i] - C for i in range(self.nv)]
        eps = sum(((2 * g - 2) * self.a_pm[i] + self.K[i]) * gd_v[i] for i in range(self.nv)) \
            + (2 * g - 2) * gd_int
        delta = sum(l for _, _, l in self.edges)
        phi = -delta / 4 + (sum(((10 * g + 2) * self.a_pm[i] - self.K[i]) * gd_v[i]
                                for i in range(self.nv)) + (10 * g + 2) * gd_int) / 4
        self.origin = {}
        tau = self.integrate_r(self.nv, self.edges, 0, self.can_pm, self.can_d, self.edges) / 2
        return {
            "g": g,
            "can_densities": [sp.nsimplify(d) for d in self.can_d],
            "theta": [sp.nsimplify(x) for x in th_v],
            "C": C,
            "tau": sp.nsimplify(tau),
            "epsilon": sp.nsimplify(eps),
            "phi": sp.nsimplify(phi),
        }


CASES = {
    "theta_111": ([0, 0], [(0, 1, 1), (0, 1, 1), (0, 1, 1)]),
    "theta_123": ([0, 0], [(0, 1, 1), (0, 1, 2), (0, 1, 3)]),
    "loop_and_bridge": ([0, 1], [(0, 0, "5/4"), (0, 1, "1/2")]),
    "dual_graph": ([1, 0, 0, 2], [(1, 2, 2), (1, 2, "1/3"), (2, 2, "5/4"), (0, 1, "1/2"), (2, 3, 3)]),
    "k4": ([0, 0, 0, 0], [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, "1/2"), (1, 3, 1), (2, 3, "3/2")]),
}

if __name__ == "__main__":
    names = sys.argv[1:] or list(CASES)
    for name in names:
        q, edges = CASES[name]
        out = Oracle(q, edges).run()
        print(name, {k: (str(v) if not isinstance(v, list) else [str(x) for x in v])
                     for k, v in out.items()})
        sys.stdout.flush()
