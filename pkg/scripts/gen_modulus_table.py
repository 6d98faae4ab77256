#!/usr/bin/env python3
"""Regenerate the built-in modulus table in qproduct.galois.

For every prime power p^l <= 512 with l >= 2 this computes the canonical
minimal primitive polynomial (the Conway polynomial): the monic primitive
polynomial of degree l over GF(p) that is minimal in the standard
alternating-sign lexicographic order and compatible with the canonical
polynomials of all proper subfields via the norm maps.

Run and paste the printed dict over _EXTENSION_MODULI in galois.py.
"""
from __future__ import annotations

import itertools

# polynomials are little-endian coefficient tuples over GF(p)


def poly_trim(f):
    i = len(f)
    while i > 0 and f[i - 1] == 0:
        i -= 1
    return tuple(f[:i])


def poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return poly_rem(res, mod, p)


def poly_rem(f, mod, p):
    f = list(f)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(poly_trim(f)) - 1 >= dm:
        f = list(poly_trim(f))
        shift = len(f) - 1 - dm
        c = (f[-1] * inv_lead) % p
        for i, mi in enumerate(mod):
            f[shift + i] = (f[shift + i] - c * mi) % p
    return poly_trim(f)


def poly_powmod(base, e, mod, p):
    result = (1,)
    base = poly_rem(base, mod, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, mod, p)
        base = poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def prime_factors(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def is_primitive(f, p):
    """f monic of degree l: x generates the full multiplicative group mod f."""
    l = len(f) - 1
    q = p**l
    x = (0, 1)
    if poly_powmod(x, q - 1, f, p) != (1,):
        return False
    for r in prime_factors(q - 1):
        if poly_powmod(x, (q - 1) // r, f, p) == (1,):
            return False
    # rule out zero divisors hiding a unit x of full order
    if poly_powmod(x, q, f, p) != poly_rem(x, f, p):
        return False
    return True


def compatible(f, sub_poly, p, l, m):
    """sub_poly(x^((p^l-1)/(p^m-1))) == 0 mod f."""
    e = (p**l - 1) // (p**m - 1)
    y = poly_powmod((0, 1), e, f, p)
    acc = ()
    ypow = (1,)
    for c in sub_poly:
        if c:
            term = tuple((c * v) % p for v in ypow)
            n = max(len(acc), len(term))
            summed = [((acc[i] if i < len(acc) else 0) + (term[i] if i < len(term) else 0)) % p for i in range(n)]
            acc = poly_trim(summed)
        ypow = poly_mulmod(ypow, y, f, p)
    return acc == ()


def smallest_primitive_root(p):
    if p == 2:
        return 1
    facs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in facs):
            return g
    raise AssertionError


def conway(p, l, cache):
    if l == 1:
        g = smallest_primitive_root(p)
        return ((-g) % p, 1)
    divisors = [m for m in range(1, l) if l % m == 0]
    # words (c_{l-1}, ..., c_0) in lex order; a_i = (-1)^(l-i) c_i
    for word in itertools.product(range(p), repeat=l):
        coeffs = [0] * (l + 1)
        coeffs[l] = 1
        for idx, c in enumerate(word):
            i = l - 1 - idx
            coeffs[i] = (c if (l - i) % 2 == 0 else (-c) % p) % p
        f = tuple(coeffs)
        if not is_primitive(f, p):
            continue
        if all(compatible(f, cache[(p, m)], p, l, m) for m in divisors):
            return f
    raise AssertionError(f"no polynomial found for p={p} l={l}")


def main():
    limit = 512
    primes = [n for n in range(2, limit + 1) if all(n % d for d in range(2, int(n**0.5) + 1))]
    cache = {}
    for p in primes:
        l = 1
        while p**l <= limit:
            cache[(p, l)] = conway(p, l, cache)
            l += 1
    print("_EXTENSION_MODULI = {")
    for (p, l), f in sorted(cache.items(), key=lambda kv: (kv[0][0] ** kv[0][1], kv[0][0])):
        if l >= 2:
            print(f"    ({p}, {l}): {f},")
    print("}")


if __name__ == "__main__":
    main()
