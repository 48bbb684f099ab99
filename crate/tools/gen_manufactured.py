"""Exact Navier-Lame residual of a manufactured cylindrical displacement field."""
import sympy as sp

r, th, z, t = sp.symbols("r theta z t", positive=True)
lam, mu, rho = 2, 1, sp.Rational(3, 2)

ur = sp.sin(r) * sp.cos(th) * sp.exp(z / 2) * sp.cos(t)
ut = r**2 * sp.sin(2 * th) * sp.cos(z) * sp.sin(t)
uz = sp.cos(r) * sp.sin(th) * (1 + z**2) * sp.exp(-t)


def lap(f):
    return sp.diff(f, r, 2) + sp.diff(f, r) / r + sp.diff(f, th, 2) / r**2 + sp.diff(f, z, 2)


div = sp.diff(ur, r) + ur / r + sp.diff(ut, th) / r + sp.diff(uz, z)
vl = [
    lap(ur) - ur / r**2 - 2 * sp.diff(ut, th) / r**2,
    lap(ut) - ut / r**2 + 2 * sp.diff(ur, th) / r**2,
    lap(uz),
]
gd = [sp.diff(div, r), sp.diff(div, th) / r, sp.diff(div, z)]
res = [mu * vl[i] + (lam + mu) * gd[i] - rho * sp.diff(u, t, 2) for i, u in enumerate([ur, ut, uz])]

for pt in [(1.3, 0.4, 0.2, 0.5), (0.8, 2.1, -0.3, 1.1), (2.5, -1.0, 0.7, 0.2)]:
    subs = dict(zip((r, th, z, t), pt))
    vals = [sp.N(e.subs(subs), 20) for e in res]
    print(pt, [float(v) for v in vals])
