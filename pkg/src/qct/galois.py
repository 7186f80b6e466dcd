"""Finite fields GF(p^e), subfield embeddings, trace maps and (self-)dual bases.

Elements are plain integers in [0, p^e): the base-p digits of an element are
the coefficients of its polynomial representative, constant term first.  All
fields are built deterministically: the modulus is the lexicographically
smallest monic irreducible polynomial of the right degree and the generator
is the smallest primitive element, so serialized artifacts are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import FieldError, SearchCapExceeded

SIZE_CAP = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[int]:
    """Distinct prime factors of n."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power q into (p, e). Raises FieldError otherwise."""
    for p in factorize(q):
        e = 0
        n = q
        while n % p == 0:
            n //= p
            e += 1
        if n == 1:
            return p, e
    raise FieldError(f"{q} is not a prime power")


# -- polynomial helpers over GF(p), coefficients as digit lists ---------------

def _pdeg(a):
    d = len(a) - 1
    while d >= 0 and a[d] == 0:
        d -= 1
    return d


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _pmod(a, mod, p):
    a = list(a)
    dm = _pdeg(mod)
    inv_lead = pow(mod[dm], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        if a[i]:
            c = (a[i] * inv_lead) % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return a[:dm]


def _poly_is_irreducible(coeffs, p):
    """Trial division by all monic polynomials of degree <= deg/2."""
    d = _pdeg(coeffs)
    if d <= 0:
        return False
    if coeffs[0] == 0:
        return d == 1
    for dd in range(1, d // 2 + 1):
        for idx in range(p ** dd):
            div = _digits(idx, p, dd) + [1]
            rem = _pmod(coeffs, div, p)
            if _pdeg(rem) < 0:
                return False
    return True


def _digits(x, p, width):
    out = []
    for _ in range(width):
        out.append(x % p)
        x //= p
    return out


def _pack(digits, p):
    x = 0
    for d in reversed(digits):
        x = x * p + d
    return x


class Field:
    """GF(p^e) with fixed modulus and primitive generator.

    Multiplication uses log/antilog tables indexed by the generator;
    addition works digit-wise in base p (XOR when p = 2).
    """

    def __init__(self, p: int, e: int, modulus: list[int], generator: int):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if e < 1:
            raise FieldError("degree must be positive")
        if p ** e > SIZE_CAP:
            raise FieldError(f"field order {p}^{e} exceeds size cap {SIZE_CAP}")
        self.p = p
        self.e = e
        self.order = p ** e
        self.modulus = tuple(modulus)
        if len(self.modulus) != e + 1 or self.modulus[e] != 1:
            raise FieldError("modulus must be monic of degree e")
        if not _poly_is_irreducible(list(self.modulus), p):
            raise FieldError("modulus is reducible")
        self.generator = generator
        self._build_tables()
        if self.log[generator] != 1 and self.order > 2:
            raise FieldError("generator table construction failed")

    # internal raw multiplication, used to bootstrap the log tables
    def _mul_raw(self, a: int, b: int) -> int:
        prod = _pmul(_digits(a, self.p, self.e), _digits(b, self.p, self.e), self.p)
        return _pack(_pmod(prod, list(self.modulus), self.p), self.p)

    def _build_tables(self):
        q = self.order
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            if log[x] != -1:
                raise FieldError(f"generator {self.generator} is not primitive")
            log[x] = i
            x = self._mul_raw(x, self.generator)
        if x != 1:
            raise FieldError(f"generator {self.generator} is not primitive")
        self.exp = exp
        self.log = log

    # -- scalar arithmetic ----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        return _pack([(x + y) % self.p for x, y in
                      zip(_digits(a, self.p, self.e), _digits(b, self.p, self.e))], self.p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return _pack([(-d) % self.p for d in _digits(a, self.p, self.e)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.order - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.exp[(-self.log[a]) % (self.order - 1)])

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 1 if k == 0 else 0
        return int(self.exp[(self.log[a] * k) % (self.order - 1)])

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("order of zero")
        return (self.order - 1) // int(np.gcd(int(self.log[a]), self.order - 1))

    # -- vectorized arithmetic on numpy int arrays ----------------------------
    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pk = 1
        for _ in range(self.e):
            out += (((a // pk) % self.p + (b // pk) % self.p) % self.p) * pk
            pk *= self.p
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        out = np.zeros(a.shape, dtype=np.int64)
        pk = 1
        for _ in range(self.e):
            out += ((self.p - (a // pk) % self.p) % self.p) * pk
            pk *= self.p
        return out

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        la = self.log[np.where(a != 0, a, 1)]
        lb = self.log[np.where(b != 0, b, 1)]
        prod = self.exp[(la + lb) % (self.order - 1)]
        return np.where(nz, prod, 0)

    def vpow(self, a, k: int):
        a = np.asarray(a, dtype=np.int64)
        nz = a != 0
        la = self.log[np.where(nz, a, 1)]
        out = self.exp[(la * k) % (self.order - 1)]
        return np.where(nz, out, 1 if k == 0 else 0)

    # -- structure ------------------------------------------------------------
    @property
    def is_square_order(self) -> bool:
        return self.e % 2 == 0

    @property
    def conj_base(self) -> int:
        """q with |field| = q^2, for Hermitian conjugation x -> x^q."""
        if not self.is_square_order:
            raise FieldError(f"GF({self.order}) is not a square extension")
        return self.p ** (self.e // 2)

    def conj(self, a: int) -> int:
        return self.pow(a, self.conj_base)

    def vconj(self, a):
        return self.vpow(a, self.conj_base)

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus),
                "generator": self.generator}

    def __repr__(self):
        return f"GF({self.order})"

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.e, self.modulus, self.generator)
                == (other.p, other.e, other.modulus, other.generator))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus, self.generator))


def _lowest_irreducible(p: int, e: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree e over GF(p).

    Lex order is over the coefficient tuple (c_0, ..., c_{e-1}).
    """
    if e == 1:
        return [0, 1]  # x itself; GF(p) needs no real modulus
    for idx in range(p ** e):
        cand = _digits(idx, p, e) + [1]
        if _poly_is_irreducible(cand, p):
            return cand
    raise FieldError("no irreducible polynomial found")  # unreachable


@lru_cache(maxsize=None)
def build_field(p: int, e: int) -> Field:
    """Deterministic GF(p^e): lowest-lex modulus, smallest primitive generator."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if p ** e > SIZE_CAP:
        raise FieldError(f"field order {p}^{e} exceeds size cap {SIZE_CAP}")
    modulus = _lowest_irreducible(p, e)
    q = p ** e
    if q == 2:
        return Field(2, 1, modulus, 1)
    factors = factorize(q - 1)

    def mul_raw(a, b):
        prod = _pmul(_digits(a, p, e), _digits(b, p, e), p)
        return _pack(_pmod(prod, modulus, p), p)

    def pow_raw(a, k):
        r = 1
        while k:
            if k & 1:
                r = mul_raw(r, a)
            a = mul_raw(a, a)
            k >>= 1
        return r

    for g in range(2, q):
        if all(pow_raw(g, (q - 1) // f) != 1 for f in factors):
            return Field(p, e, modulus, g)
    raise FieldError("no primitive element found")  # unreachable


def field_from_q(q: int) -> Field:
    p, e = prime_power(q)
    return build_field(p, e)


def field_from_json(rec: dict) -> Field:
    f = Field(rec["p"], rec["e"], list(rec["modulus"]), rec["generator"])
    return f


class Embedding:
    """Field homomorphism GF(p^s) -> GF(p^(s*m)) mapping the subfield modulus
    root to its smallest root in the extension."""

    def __init__(self, sub: Field, ext: Field):
        if sub.p != ext.p or ext.e % sub.e != 0:
            raise FieldError(f"{sub} is not a subfield of {ext}")
        self.sub = sub
        self.ext = ext
        self.m = ext.e // sub.e
        if sub.e == 1:
            # prime subfield: constants embed as themselves
            self.root = 1 if sub.order > 1 else 1
            self._up = {a: a for a in range(sub.order)}
        else:
            root = None
            for x in range(ext.order):
                acc = 0
                xp = 1
                for c in sub.modulus:
                    if c:
                        acc = ext.add(acc, ext.mul(c % ext.p, xp))
                    xp = ext.mul(xp, x)
                if acc == 0:
                    root = x
                    break
            if root is None:
                raise FieldError("subfield modulus has no root in extension")
            self.root = root
            up = {}
            for a in range(sub.order):
                acc = 0
                rp = 1
                for d in _digits(a, sub.p, sub.e):
                    if d:
                        acc = ext.add(acc, ext.mul(d, rp))
                    rp = ext.mul(rp, root)
                up[a] = acc
            self._up = up
        self._down = {v: k for k, v in self._up.items()}

    def up(self, a: int) -> int:
        return self._up[a]

    def down(self, x: int) -> int:
        try:
            return self._down[x]
        except KeyError:
            raise FieldError(f"element {x} of {self.ext} is not in {self.sub}")

    def contains(self, x: int) -> bool:
        return x in self._down


@lru_cache(maxsize=None)
def _cached_embedding(sub_key, ext_key):
    return Embedding(field_from_json(dict(zip(("p", "e", "modulus", "generator"), sub_key))),
                     field_from_json(dict(zip(("p", "e", "modulus", "generator"), ext_key))))


def get_embedding(sub: Field, ext: Field) -> Embedding:
    key = lambda f: (f.p, f.e, f.modulus, f.generator)
    return _cached_embedding(key(sub), key(ext))


def trace(x: int, emb: Embedding) -> int:
    """Tr_{ext/sub}(x) = sum of x^(q^i), mapped down into the subfield."""
    q = emb.sub.order
    acc = 0
    t = x
    for _ in range(emb.m):
        acc = emb.ext.add(acc, t)
        t = emb.ext.pow(t, q)
    return emb.down(acc)


@dataclass(frozen=True)
class ExtensionBasis:
    """A basis of the extension field over the subfield, via its embedding."""

    emb: Embedding
    elements: tuple

    @property
    def m(self) -> int:
        return self.emb.m

    def gram(self) -> np.ndarray:
        """Trace Gram matrix [Tr(a_i a_j)] with entries in the subfield."""
        els = self.elements
        ext = self.emb.ext
        g = np.zeros((self.m, self.m), dtype=np.int64)
        for i in range(self.m):
            for j in range(i, self.m):
                t = trace(ext.mul(els[i], els[j]), self.emb)
                g[i, j] = g[j, i] = t
        return g

    def is_valid(self) -> bool:
        from . import gflinalg
        return len(self.elements) == self.m and \
            gflinalg.rank(self.gram(), self.emb.sub) == self.m

    def is_self_dual(self) -> bool:
        return bool(np.array_equal(self.gram(), np.eye(self.m, dtype=np.int64)))


def standard_basis(emb: Embedding) -> ExtensionBasis:
    """Power basis {1, g, g^2, ...} of the extension generator."""
    g = emb.ext.generator
    return ExtensionBasis(emb, tuple(emb.ext.pow(g, i) for i in range(emb.m)))


def find_dual_basis(basis: ExtensionBasis) -> ExtensionBasis:
    """The unique basis B' with Tr(a_i b_j) = delta_ij."""
    from . import gflinalg
    emb = basis.emb
    sub, ext = emb.sub, emb.ext
    g = basis.gram()
    ginv = gflinalg.inv_matrix(g, sub)
    duals = []
    for j in range(basis.m):
        acc = 0
        for i in range(basis.m):
            c = int(ginv[i, j])
            if c:
                acc = ext.add(acc, ext.mul(emb.up(c), basis.elements[i]))
        duals.append(acc)
    return ExtensionBasis(emb, tuple(duals))


def self_dual_basis_exists(sub: Field, m: int) -> bool:
    """Seroussi-Lempel: GF(q^m)/GF(q) has a self-dual basis iff q is even
    or both q and m are odd."""
    q = sub.order
    return q % 2 == 0 or (q % 2 == 1 and m % 2 == 1)


def find_self_dual_basis(sub: Field, ext: Field, seed: int = 0,
                         node_cap: int = 500_000):
    """Orthonormal (trace Gram = identity) basis, or None when none exists.

    Deterministic lexicographic depth-first search with seeded random
    restarts as a fallback.  Raises SearchCapExceeded if the budget runs out
    at a size where existence is guaranteed.
    """
    emb = get_embedding(sub, ext)
    m = emb.m
    if not self_dual_basis_exists(sub, m):
        return None
    q = sub.order
    ext_one = 1
    # trace of every extension element, as a subfield element
    tr = [trace(x, emb) for x in range(ext.order)]

    def trp(x, y):
        return tr[ext.mul(x, y)]

    unit_cands = [x for x in range(1, ext.order) if trp(x, x) == 1]

    nodes = 0

    def dfs(chosen, cands):
        nonlocal nodes
        if len(chosen) == m:
            return list(chosen)
        for idx, x in enumerate(cands):
            nodes += 1
            if nodes > node_cap:
                raise SearchCapExceeded("self-dual basis search budget exhausted")
            nxt = [y for y in cands[idx + 1:] if trp(x, y) == 0]
            if len(nxt) < m - len(chosen) - 1:
                continue
            got = dfs(chosen + [x], nxt)
            if got is not None:
                return got
        return None

    try:
        found = dfs([], unit_cands)
    except SearchCapExceeded:
        found = None
        rng = random.Random(seed)
        for _ in range(8):
            cands = list(unit_cands)
            rng.shuffle(cands)
            nodes = 0
            try:
                found = dfs([], cands)
            except SearchCapExceeded:
                continue
            if found is not None:
                break
        if found is None:
            raise
    if found is None:
        raise SearchCapExceeded(
            "no self-dual basis found although existence is guaranteed")
    basis = ExtensionBasis(emb, tuple(found))
    assert basis.is_self_dual()
    return basis


def conjugate(x: int, field: Field, q: int) -> int:
    """Frobenius conjugation x -> x^q on GF(q^2)."""
    if q ** 2 != field.order:
        raise FieldError(f"GF({field.order}) is not GF({q}^2)")
    if q % field.p != 0:
        raise FieldError(f"{q} is not a power of the characteristic {field.p}")
    return field.pow(x, q)
