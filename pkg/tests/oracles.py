"""Independent reference computations used to check the library.

Nothing here imports rathom: series are dicts keyed by strings of letters,
and linear algebra is a separate small elimination routine.
"""
from fractions import Fraction
from math import factorial


def mobius(n):
    out, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def witt(k, n):
    """Necklace count: dimension of the weight-n part of the free Lie algebra on k letters."""
    return sum(mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def smul(a, b, n):
    out = {}
    for u, p in a.items():
        for v, q in b.items():
            if len(u) + len(v) <= n:
                out[u + v] = out.get(u + v, 0) + p * q
    return {w: c for w, c in out.items() if c}


def sadd(*terms):
    out = {}
    for t in terms:
        for w, c in t.items():
            out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


def sscale(a, q):
    return {w: c * q for w, c in a.items() if c * q}


def sexp(x, n):
    out, power = {"": Fraction(1)}, {"": Fraction(1)}
    for k in range(1, n + 1):
        power = smul(power, x, n)
        out = sadd(out, sscale(power, Fraction(1, factorial(k))))
    return out


def slog(y, n):
    z = {w: c for w, c in y.items() if w}
    assert y.get("", 0) == 1
    out, power = {}, {"": Fraction(1)}
    for k in range(1, n + 1):
        power = smul(power, z, n)
        out = sadd(out, sscale(power, Fraction((-1) ** (k + 1), k)))
    return out


def bch_oracle(n):
    """log(exp(a) exp(b)) in letters 'a', 'b', truncated at degree n."""
    return slog(smul(sexp({"a": Fraction(1)}, n), sexp({"b": Fraction(1)}, n), n), n)


def commutator_expand(tree, letters="ab"):
    """Associative polynomial of a nested pair tree of letter indices."""
    if isinstance(tree, int):
        return {letters[tree]: Fraction(1)}
    a, b = commutator_expand(tree[0], letters), commutator_expand(tree[1], letters)
    big = 10 ** 6
    return sadd(smul(a, b, big), sscale(smul(b, a, big), -1))


def magnus_oracle(letters, n, alphabet="XYZW"):
    """x_i -> 1 + X_i, x_i^-1 -> sum (-X_i)^k; letters as (index, +-1)."""
    out = {"": Fraction(1)}
    for g, e in letters:
        X = alphabet[g]
        if e == 1:
            f = {"": Fraction(1), X: Fraction(1)}
        else:
            f = {X * k: Fraction((-1) ** k) for k in range(n + 1)}
        out = smul(out, f, n)
    return out


def rank(rows):
    """Rank of a list of rational rows by plain elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def wedge_of_spheres_ranks(dims, N):
    """rank pi_n (x) Q, 2 <= n <= N, for a wedge of spheres S^{d} (d >= 2).

    The loop space homology is the tensor algebra on classes of degree d-1,
    and by Poincare-Birkhoff-Witt its series 1/(1 - sum t^(d-1)) factors as
    prod (1+t^k)^{L_k} over odd k times prod (1-t^k)^{-L_k} over even k.
    pi_{k+1} (x) Q has rank L_k.
    """
    top = N
    H = [0] * (top + 1)
    H[0] = 1
    for n in range(1, top + 1):
        H[n] = sum(H[n - (d - 1)] for d in dims if n - (d - 1) >= 0)
    current = [1] + [0] * top
    L = [0] * (top + 1)
    for k in range(1, top):
        L[k] = H[k] - current[k]
        for _ in range(L[k]):
            nxt = current[:]
            if k % 2:
                for i in range(top, k - 1, -1):
                    nxt[i] += current[i - k]
            else:
                for i in range(k, top + 1):
                    nxt[i] += nxt[i - k]
            current = nxt
    return [(n, L[n - 1]) for n in range(2, N + 1)]
