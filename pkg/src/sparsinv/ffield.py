"""Exact arithmetic in a fixed finite field GF(p^k) with its subfield lattice.

A field element is stored as a plain int in [0, p^k): the coefficient
vector (c_0, ..., c_{k-1}) of the residue class c_0 + c_1 z + ... modulo
the defining polynomial, packed in base p.  Encoding 0 is the zero
element and encoding 1 is the one element, and equality of encodings is
equality of canonical coefficient vectors.  All operations live on the
:class:`FieldCtx`, which is immutable after construction and safe to
share between workers.
"""

from __future__ import annotations

from .errors import (
    BudgetExceeded,
    ContextMismatch,
    DegreeMismatch,
    DivisionByZero,
    NotADivisor,
    NotIrreducible,
    NotPrime,
    SparsinvError,
)

# Largest field we agree to construct; irreducibility is checked by trial
# division, which is only reasonable at desk scale.
FIELD_SIZE_CAP = 1 << 20

# Full q x q add/mul tables below this size, log/antilog tables below 2^16.
_DENSE_TABLE_CAP = 256
_LOG_TABLE_CAP = 1 << 16


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers over F_p (dense ascending coefficient lists) -----

def _poly_trim(c):
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(num, den, p):
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    while len(num) - 1 >= dd and any(num):
        shift = len(num) - 1 - dd
        factor = (num[-1] * inv_lead) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        _poly_trim(num)
        if len(num) == 1 and num[0] == 0:
            break
    return num


def _poly_eval(c, x, p):
    acc = 0
    for coef in reversed(c):
        acc = (acc * x + coef) % p
    return acc


class FieldCtx:
    """The ambient field GF(p^k) = F_p[z]/(modulus).

    ``modulus`` is a monic irreducible polynomial over F_p given as an
    ascending coefficient vector; a vector of length k is also accepted
    and gets an implicit leading 1.  For k = 1 the modulus is immaterial
    and may be omitted.
    """

    __slots__ = (
        "p", "k", "q", "modulus",
        "_exp", "_log", "_add_tab", "_mul_tab", "_reduction",
        "_subfields",
    )

    def __init__(self, p, k, modulus=None):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if k < 1:
            raise DegreeMismatch("extension degree must be >= 1")
        q = p ** k
        if q > FIELD_SIZE_CAP:
            raise BudgetExceeded(f"field size {q} exceeds cap {FIELD_SIZE_CAP}")

        if modulus is None:
            if k != 1:
                raise DegreeMismatch("an explicit modulus is required for k > 1")
            modulus = (0, 1)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) == k:
            modulus = modulus + (1,)
        if len(modulus) != k + 1:
            raise DegreeMismatch(
                f"modulus must have degree {k}, got degree {len(modulus) - 1}")
        if modulus[-1] != 1:
            raise DegreeMismatch("modulus must be monic")

        self.p = p
        self.k = k
        self.q = q
        self.modulus = modulus
        if k > 1:
            self._check_irreducible()

        # z^(k+i) reduced mod modulus, i = 0..k-2, as coefficient tuples
        self._reduction = self._build_reduction()
        self._exp = self._log = None
        if q <= _LOG_TABLE_CAP:
            self._build_log_tables()
        self._add_tab = self._mul_tab = None
        if q <= _DENSE_TABLE_CAP:
            self._add_tab = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
            self._mul_tab = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        self._subfields = {}

    # -- construction internals ----------------------------------------

    def _check_irreducible(self):
        p, k, mod = self.p, self.k, list(self.modulus)
        for x in range(p):
            if _poly_eval(mod, x, p) == 0:
                raise NotIrreducible(
                    f"modulus has root {x} in the prime field")
        # trial division by every monic polynomial of degree 2..k/2
        for d in range(2, k // 2 + 1):
            for code in range(p ** d):
                den = []
                c = code
                for _ in range(d):
                    den.append(c % p)
                    c //= p
                den.append(1)
                rem = _poly_mod(mod, den, p)
                if len(rem) == 1 and rem[0] == 0:
                    raise NotIrreducible(
                        f"modulus is divisible by a degree-{d} factor")

    def _build_reduction(self):
        # representation of z^(k), z^(k+1), ..., z^(2k-2) as vectors
        p, k = self.p, self.k
        red = []
        cur = [(-c) % p for c in self.modulus[:k]]  # z^k
        red.append(tuple(cur))
        for _ in range(k - 2):
            nxt = [0] * k
            for i, c in enumerate(cur):
                if c == 0:
                    continue
                if i + 1 < k:
                    nxt[i + 1] = (nxt[i + 1] + c) % p
                else:
                    for j, r in enumerate(red[0]):
                        nxt[j] = (nxt[j] + c * r) % p
            red.append(tuple(nxt))
            cur = nxt
        return tuple(red)

    def _build_log_tables(self):
        q = self.q
        if q == 2:
            self._exp, self._log = [1], [None, 0]
            return
        g = self._find_primitive()
        exp = [1] * (q - 1)
        log = [None] * q
        log[1] = 0
        acc = 1
        for i in range(1, q - 1):
            acc = self._mul_slow(acc, g)
            exp[i] = acc
            log[acc] = i
        self._exp, self._log = exp, log

    def _find_primitive(self):
        order = self.q - 1
        factors = _prime_factors(order)
        for cand in range(2, self.q):
            if all(self._pow_slow(cand, order // f) != 1 for f in factors):
                return cand
        raise SparsinvError("no primitive element found (unreachable)")

    # -- encoding --------------------------------------------------------

    def coeffs(self, a):
        """Coefficient vector (length k, base-p digits) of an encoding."""
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def element(self, coeffs):
        """Encode a coefficient vector (any length <= k) as an element."""
        if len(coeffs) > self.k:
            raise DegreeMismatch("coefficient vector longer than the degree")
        acc = 0
        for c in reversed(coeffs):
            acc = acc * self.p + (int(c) % self.p)
        return acc

    def from_int(self, m):
        """Embed an integer through the prime subfield."""
        return m % self.p

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ContextMismatch(f"{a!r} is not an element encoding of {self}")
        return a

    # -- arithmetic ------------------------------------------------------

    def _add_slow(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _mul_slow(self, a, b):
        if a == 0 or b == 0:
            return 0
        p, k = self.p, self.k
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(ca):
            if x == 0:
                continue
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % p
        out = list(prod[:k])
        for i in range(k, 2 * k - 1):
            c = prod[i]
            if c == 0:
                continue
            for j, r in enumerate(self._reduction[i - k]):
                out[j] = (out[j] + c * r) % p
        acc = 0
        for c in reversed(out):
            acc = acc * p + c
        return acc

    def _pow_slow(self, a, e):
        acc = 1
        base = a
        while e:
            if e & 1:
                acc = self._mul_slow(acc, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return acc

    def add(self, a, b):
        if self._add_tab is not None:
            return self._add_tab[a][b]
        return self._add_slow(a, b)

    def neg(self, a):
        if self.p == 2:
            return a
        out = 0
        mult = 1
        x = a
        for _ in range(self.k):
            out += ((self.p - x % self.p) % self.p) * mult
            x //= self.p
            mult *= self.p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul_tab is not None:
            return self._mul_tab[a][b]
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self._pow_slow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        e %= self.q - 1 if self.q > 2 else 1
        if self.q == 2:
            return a
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._pow_slow(a, e)

    def frobenius(self, a, d):
        """The d-fold Frobenius a^(p^d)."""
        if a == 0:
            return 0
        return self.pow(a, pow(self.p, d, self.q - 1) if self.q > 2 else 1)

    def primitive_element(self):
        """A fixed generator of the multiplicative group."""
        if self.q == 2:
            return 1
        if self._log is not None:
            return self._exp[1]
        return self._find_primitive()

    def multiplicative_order(self, a):
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        order = 1
        acc = a
        while acc != 1:
            acc = self.mul(acc, a)
            order += 1
        return order

    def elements(self):
        return range(self.q)

    # -- text form --------------------------------------------------------

    def element_to_text(self, a):
        """Render an element as a polynomial in z, e.g. ``z^2+2*z+1``."""
        self.check(a)
        if a == 0:
            return "0"
        parts = []
        for i in reversed(range(self.k)):
            c = (a // self.p ** i) % self.p
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("z" if c == 1 else f"{c}*z")
            else:
                parts.append(f"z^{i}" if c == 1 else f"{c}*z^{i}")
        return "+".join(parts)

    def parse_element(self, text):
        """Inverse of :meth:`element_to_text`; raises on out-of-range input."""
        from .errors import ElementNotInField

        text = text.strip()
        if not text:
            raise ElementNotInField("empty element expression")
        coeffs = [0] * self.k
        for raw in text.split("+"):
            term = raw.strip().replace(" ", "")
            if not term:
                raise ElementNotInField(f"malformed element expression {text!r}")
            if "z" in term:
                if self.k == 1:
                    raise ElementNotInField(
                        f"{term!r} uses z but the field is a prime field")
                coef_s, _, rest = term.partition("z")
                coef_s = coef_s.rstrip("*")
                coef = int(coef_s) if coef_s else 1
                if rest == "":
                    e = 1
                elif rest.startswith("^"):
                    e = int(rest[1:])
                else:
                    raise ElementNotInField(f"malformed term {term!r}")
            else:
                coef = int(term)
                e = 0
            if not 0 <= coef < self.p:
                raise ElementNotInField(
                    f"coefficient {coef} outside [0, {self.p}) in {text!r}")
            if not 0 <= e < self.k:
                raise ElementNotInField(
                    f"z^{e} is not reduced in a degree-{self.k} extension")
            coeffs[e] = (coeffs[e] + coef) % self.p
        return self.element(coeffs)

    def spec_text(self):
        if self.k == 1:
            return f"GF({self.p})"
        mod = " + ".join(
            _mod_term(c, i)
            for i, c in sorted(enumerate(self.modulus), reverse=True)
            if c != 0
        ).replace(" + ", "+")
        return f"GF({self.p}^{self.k}) mod {mod}"

    def __eq__(self, other):
        return (isinstance(other, FieldCtx)
                and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FieldCtx({self.spec_text()!r})"


def _mod_term(c, i):
    if i == 0:
        return str(c)
    v = "z" if i == 1 else f"z^{i}"
    return v if c == 1 else f"{c}*{v}"


def make_field(p, k, modulus=None):
    """Build GF(p^k); verifies primality of p and irreducibility of the modulus."""
    return FieldCtx(p, k, modulus)


def parse_field_spec(text):
    """Parse ``GF(p^K) mod <poly>`` (or ``GF(q)``) into a field context.

    A composite q is accepted as shorthand for its prime-power form.  An
    explicit modulus is mandatory whenever K > 1; there is no built-in
    table of defining polynomials.
    """
    from .errors import PatternSyntaxError

    s = text.strip()
    if not s.startswith("GF(") or ")" not in s:
        raise PatternSyntaxError(1, 1, "a field spec like GF(p^K) mod <poly>")
    inside, _, rest = s[3:].partition(")")
    inside = inside.strip()
    if "^" in inside:
        p_s, _, k_s = inside.partition("^")
        p, k = int(p_s), int(k_s)
    else:
        q = int(inside)
        p, k = _split_prime_power(q)
    rest = rest.strip()
    modulus = None
    if rest:
        if not rest.startswith("mod"):
            raise PatternSyntaxError(1, 1, "'mod <poly>' after GF(...)")
        modulus = _parse_modulus(rest[3:].strip(), p, k)
    return make_field(p, k, modulus)


def _split_prime_power(q):
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise NotPrime("field order is not a prime power")
            return p, k
    raise NotPrime("field order is not a prime power")


def _parse_modulus(text, p, k):
    from .errors import PatternSyntaxError

    coeffs = [0] * (k + 1)
    for raw in text.replace(" ", "").split("+"):
        if not raw:
            raise PatternSyntaxError(1, 1, "a modulus term")
        if "z" in raw:
            coef_s, _, rest = raw.partition("z")
            coef_s = coef_s.rstrip("*")
            coef = int(coef_s) if coef_s else 1
            e = 1 if rest == "" else int(rest[1:]) if rest.startswith("^") else None
            if e is None:
                raise PatternSyntaxError(1, 1, f"a power of z, got {raw!r}")
        else:
            coef, e = int(raw), 0
        if e > k:
            raise DegreeMismatch(f"modulus term z^{e} exceeds degree {k}")
        coeffs[e] = (coeffs[e] + coef) % p
    return tuple(coeffs)


# -- subfields and spans --------------------------------------------------

def subfield_elements(ctx, d):
    """All p^d elements of the subfield GF(p^d) inside ctx; requires d | k."""
    if ctx.k % d != 0:
        raise NotADivisor(f"{d} does not divide the extension degree {ctx.k}")
    cached = ctx._subfields.get(d)
    if cached is not None:
        return cached
    fixed = tuple(a for a in ctx.elements() if ctx.frobenius(a, d) == a)
    ctx._subfields[d] = fixed
    return fixed


def is_subfield_set(ctx, elems):
    """True iff the set is one of the subfields of ctx (checked exactly)."""
    s = set(elems)
    if 0 not in s or 1 not in s:
        return False
    n = len(s)
    d = 0
    while ctx.p ** d < n:
        d += 1
    if ctx.p ** d != n or ctx.k % d != 0:
        return False
    return s == set(subfield_elements(ctx, d))


def subfield_degree(ctx, elems):
    """Degree over F_p of a set known to be a subfield."""
    if not is_subfield_set(ctx, elems):
        raise SparsinvError("the given set is not a subfield")
    n = len(set(elems))
    d = 0
    while ctx.p ** d != n:
        d += 1
    return d


def additive_span(ctx, gens, scalars):
    """Closure of ``gens`` under addition and multiplication by a subfield.

    Returns ``(span, basis)``: the span as a sorted tuple and a greedy
    basis over the scalar subfield.  Re-spanning the output reproduces it.
    """
    scalars = tuple(sorted(set(scalars)))
    if not is_subfield_set(ctx, scalars):
        raise SparsinvError("scalars must form a subfield")
    span = {0}
    basis = []
    for g in sorted(set(gens)):
        if g in span:
            continue
        basis.append(g)
        span = {ctx.add(s, ctx.mul(c, g)) for s in span for c in scalars}
    return tuple(sorted(span)), tuple(basis)


def subfield_closure(ctx, elems):
    """The smallest subfield of ctx containing ``elems``.

    Closes the set (plus 0 and 1) under addition and multiplication;
    in a finite field that closure is a subfield.
    """
    cur = set(elems) | {0, 1}
    while True:
        new = set(cur)
        for a in cur:
            for b in cur:
                new.add(ctx.add(a, b))
                new.add(ctx.mul(a, b))
        if new == cur:
            return tuple(sorted(cur))
        cur = new


def multiplicative_closure(ctx, elems):
    """Subgroup of the multiplicative group generated by the nonzero elements."""
    gens = [a for a in set(elems) if a != 0]
    cur = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = ctx.mul(a, g)
                if b not in cur:
                    cur.add(b)
                    nxt.append(b)
        frontier = nxt
    return tuple(sorted(cur))
