"""Shared helpers: independent naive oracles used to cross-check the
optimized predicate scanners.  These are written as direct triple loops over
the definitions, with the power exponent k swept up to |R|, and share no code
with the scanners under test."""
from __future__ import annotations


def member(N, idx: int) -> bool:
    return bool((N.mask >> idx) & 1)


def naive_gsdf(N) -> bool:
    """(u^2 - v^2).x in N implies (u - v).x in N or (u + v)^k.x in N, k >= 1."""
    M = N.module
    R = M.ring
    for u in range(R.order):
        for v in range(R.order):
            d = R.sub(u, v)
            s = R.add(u, v)
            sq = R.mul(d, s)
            for x in range(M.order):
                if not member(N, M.act(sq, x)):
                    continue
                if member(N, M.act(d, x)):
                    continue
                p = R.one
                for _ in range(R.order):
                    p = R.mul(p, s)
                    if member(N, M.act(p, x)):
                        break
                else:
                    return False
    return True


def naive_sdf(N) -> bool:
    """Same hypothesis restricted to u, v outside Ann(x); conclusion k = 1."""
    M = N.module
    R = M.ring
    for u in range(R.order):
        for v in range(R.order):
            d = R.sub(u, v)
            s = R.add(u, v)
            sq = R.mul(d, s)
            for x in range(M.order):
                if M.act(u, x) == M.zero or M.act(v, x) == M.zero:
                    continue
                if not member(N, M.act(sq, x)):
                    continue
                if member(N, M.act(d, x)) or member(N, M.act(s, x)):
                    continue
                return False
    return True


def naive_classical_primary(N) -> bool:
    """u.v.x in N implies u.x in N or v^k.x in N for some k >= 1."""
    M = N.module
    R = M.ring
    for u in range(R.order):
        for v in range(R.order):
            uv = R.mul(u, v)
            for x in range(M.order):
                if not member(N, M.act(uv, x)):
                    continue
                if member(N, M.act(u, x)):
                    continue
                p = R.one
                for _ in range(R.order):
                    p = R.mul(p, v)
                    if member(N, M.act(p, x)):
                        break
                else:
                    return False
    return True


def naive_prime(N) -> bool:
    """u.x in N implies x in N or u.M <= N."""
    M = N.module
    R = M.ring
    for u in range(R.order):
        umaps_in = all(member(N, M.act(u, y)) for y in range(M.order))
        for x in range(M.order):
            if member(N, M.act(u, x)) and not member(N, x) and not umaps_in:
                return False
    return True


def naive_primary(N) -> bool:
    """u.x in N implies x in N or u in rad(N :_R M)."""
    M = N.module
    R = M.ring
    colon = [r for r in range(R.order) if all(member(N, M.act(r, y)) for y in range(M.order))]
    colon_set = set(colon)
    rad = set()
    for r in range(R.order):
        p = R.one
        for _ in range(R.order):
            p = R.mul(p, r)
            if p in colon_set:
                rad.add(r)
                break
    for u in range(R.order):
        for x in range(M.order):
            if member(N, M.act(u, x)) and not member(N, x) and u not in rad:
                return False
    return True


def naive_sdf_ideal(I) -> bool:
    """Ideal form: u, v nonzero, u^2 - v^2 in I implies u + v in I or u - v in I."""
    R = I.module.ring
    for u in range(R.order):
        for v in range(R.order):
            if u == R.zero or v == R.zero:
                continue
            d = R.sub(u, v)
            s = R.add(u, v)
            if member(I, R.mul(d, s)) and not member(I, d) and not member(I, s):
                return False
    return True


def naive_sdf_primary_ideal(I, nonzero_only: bool = False) -> bool:
    """u^2 - v^2 in I implies u - v in I or (u + v)^k in I for some k >= 1."""
    R = I.module.ring
    for u in range(R.order):
        for v in range(R.order):
            if nonzero_only and (u == R.zero or v == R.zero):
                continue
            d = R.sub(u, v)
            s = R.add(u, v)
            if not member(I, R.mul(d, s)) or member(I, d):
                continue
            p = R.one
            for _ in range(R.order):
                p = R.mul(p, s)
                if member(I, p):
                    break
            else:
                return False
    return True


NAIVE_ORACLES = {
    "gsdf": naive_gsdf,
    "sdf": naive_sdf,
    "cprimary": naive_classical_primary,
    "prime": naive_prime,
    "primary": naive_primary,
    "sdfideal": naive_sdf_ideal,
    "sdfprimary": naive_sdf_primary_ideal,
}
