"""Symbolic ordinal and cardinal arithmetic for the transfinite statements.

Ordinals below epsilon_0 are kept in Cantor normal form: a sum
w^b1*c1 + ... + w^bk*ck with strictly decreasing ordinal exponents and
positive integer coefficients.  Cardinals are either finite or alephs
indexed by such an ordinal.  Continuum behaviour is supplied by a model:
either GCH, or a finite list of values for 2^kappa at regular kappa.
Under a partial model a power evaluates to an exact cardinal only when the
model forces it; otherwise the result is an interval [lower, upper] (upper
may be unknown), never a guess.

Text forms, shared with the CLI: ordinals use ``w`` for omega, as in
``w^2*3+w+5``; cardinals are ``fin(3)`` or ``aleph(w+1)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping


class Ordinal:
    """An ordinal below epsilon_0 in Cantor normal form (immutable)."""

    __slots__ = ("terms",)

    def __init__(self, terms: tuple = ()):
        terms = tuple((e, int(c)) for e, c in terms)
        for i, (e, c) in enumerate(terms):
            if not isinstance(e, Ordinal):
                raise TypeError("exponents must be Ordinals")
            if c < 1:
                raise ValueError("coefficients must be positive")
            if i and not terms[i - 1][0] > e:
                raise ValueError("exponents must be strictly decreasing")
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *_):
        raise AttributeError("Ordinal is immutable")

    @staticmethod
    def from_int(k: int) -> "Ordinal":
        if k < 0:
            raise ValueError("ordinals are non-negative")
        return Ordinal(((ZERO, k),)) if k else ZERO

    @staticmethod
    def omega_power(exp: "Ordinal", coeff: int = 1) -> "Ordinal":
        return Ordinal(((exp, coeff),))

    # -- order ----------------------------------------------------------
    def _cmp(self, other: "Ordinal") -> int:
        for (ea, ca), (eb, cb) in zip(self.terms, other.terms):
            c = ea._cmp(eb)
            if c:
                return c
            if ca != cb:
                return -1 if ca < cb else 1
        if len(self.terms) != len(other.terms):
            return -1 if len(self.terms) < len(other.terms) else 1
        return 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __lt__(self, other: "Ordinal") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "Ordinal") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "Ordinal") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "Ordinal") -> bool:
        return self._cmp(other) >= 0

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "Ordinal") -> "Ordinal":
        """Ordinal addition; left terms below the right leading term vanish."""
        if not isinstance(other, Ordinal):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        e0, c0 = other.terms[0]
        keep = tuple(t for t in self.terms if t[0] > e0)
        same = [t for t in self.terms if t[0] == e0]
        if same:
            return Ordinal(keep + ((e0, same[0][1] + c0),) + other.terms[1:])
        return Ordinal(keep + other.terms)

    def successor(self) -> "Ordinal":
        return self + ONE

    # -- structure -------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    def as_int(self) -> int:
        if self.is_zero:
            return 0
        if len(self.terms) == 1 and self.terms[0][0].is_zero:
            return self.terms[0][1]
        raise ValueError(f"{self} is not finite")

    def cofinality(self) -> "Ordinal":
        """0, 1, or omega: every limit below epsilon_0 has cofinality omega,
        reached by descending through the last exponent."""
        if self.is_zero:
            return ZERO
        if self.is_successor:
            return ONE
        last_exp = self.terms[-1][0]
        if last_exp.is_limit:
            return last_exp.cofinality()
        return OMEGA

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal[{format_ordinal(self)}]"


ZERO = Ordinal(())
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def format_ordinal(o: Ordinal) -> str:
    if o.is_zero:
        return "0"
    parts = []
    for exp, c in o.terms:
        if exp.is_zero:
            parts.append(str(c))
            continue
        if exp == ONE:
            base = "w"
        else:
            inner = format_ordinal(exp)
            base = f"w^{inner}" if re.fullmatch(r"\w+", inner) else f"w^({inner})"
        parts.append(base if c == 1 else f"{base}*{c}")
    return "+".join(parts)


class Cardinal:
    """A finite cardinal or an aleph with a CNF ordinal index."""

    __slots__ = ("finite", "index")

    def __init__(self, finite: int | None, index: Ordinal | None):
        if (finite is None) == (index is None):
            raise ValueError("exactly one of finite value and aleph index")
        if finite is not None and finite < 0:
            raise ValueError("finite cardinals are non-negative")
        object.__setattr__(self, "finite", finite)
        object.__setattr__(self, "index", index)

    def __setattr__(self, *_):
        raise AttributeError("Cardinal is immutable")

    @property
    def is_finite(self) -> bool:
        return self.finite is not None

    @property
    def is_infinite(self) -> bool:
        return self.index is not None

    def _key(self):
        # finite cardinals sort below every aleph
        if self.is_finite:
            return (0, self.finite)
        return (1, self.index)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cardinal):
            return NotImplemented
        return self.finite == other.finite and self.index == other.index

    def __hash__(self) -> int:
        return hash((self.finite, self.index))

    def __lt__(self, other: "Cardinal") -> bool:
        ka, kb = self._key(), other._key()
        return ka[0] < kb[0] or (ka[0] == kb[0] and ka[1] < kb[1])

    def __le__(self, other: "Cardinal") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Cardinal") -> bool:
        return other < self

    def __ge__(self, other: "Cardinal") -> bool:
        return other <= self

    def successor(self) -> "Cardinal":
        if self.is_finite:
            return fin(self.finite + 1)
        return aleph(self.index + ONE)

    def cofinality(self) -> "Cardinal":
        """cf: finite positives have cofinality 1; aleph_0 and successor
        alephs are regular; a limit-index aleph inherits the cofinality of
        its index, which below epsilon_0 is always omega."""
        if self.is_finite:
            return fin(0) if self.finite == 0 else fin(1)
        ix = self.index
        if ix.is_zero or ix.is_successor:
            return self
        cfo = ix.cofinality()
        assert cfo == OMEGA, "limit indices below epsilon_0 are omega-cofinal"
        return ALEPH0

    @property
    def is_regular(self) -> bool:
        return self.is_infinite and self.cofinality() == self

    def __str__(self) -> str:
        return format_cardinal(self)

    def __repr__(self) -> str:
        return f"Cardinal[{format_cardinal(self)}]"


def fin(k: int) -> Cardinal:
    return Cardinal(k, None)


def aleph(index: Ordinal | int) -> Cardinal:
    if isinstance(index, int):
        index = Ordinal.from_int(index)
    return Cardinal(None, index)


ALEPH0 = aleph(0)


@dataclass(frozen=True)
class CardinalInterval:
    """All the model says: the value lies in [lo, hi] (hi None = no bound)."""

    lo: Cardinal
    hi: Cardinal | None

    def __str__(self) -> str:
        hi = "unbounded" if self.hi is None else format_cardinal(self.hi)
        return f"interval[{format_cardinal(self.lo)}, {hi}]"


class ContinuumModel:
    """GCH, or finitely many pinned values of 2^kappa at regular kappa.

    A custom assignment {i: j} reads 2^aleph_i = aleph_j.  Construction
    rejects assignments at singular indices, non-monotone assignments, and
    assignments violating cf(2^kappa) > kappa.
    """

    def __init__(self, gch: bool = False,
                 continuum: Mapping[Ordinal | int, Ordinal | int] | None = None):
        self.gch = gch
        entries: dict[Ordinal, Ordinal] = {}
        for k, v in (continuum or {}).items():
            kk = Ordinal.from_int(k) if isinstance(k, int) else k
            vv = Ordinal.from_int(v) if isinstance(v, int) else v
            entries[kk] = vv
        if gch and entries:
            raise ValueError("GCH leaves nothing to pin")
        self.continuum = dict(sorted(entries.items(), key=lambda kv: kv[0]))
        prev_value: Ordinal | None = None
        for k, v in self.continuum.items():
            base = aleph(k)
            if not base.is_regular:
                raise ValueError(f"2^{base} can only be pinned at a regular cardinal")
            value = aleph(v)
            if value.cofinality() <= base:
                raise ValueError(f"cf(2^{base}) = cf({value}) must exceed {base}")
            if prev_value is not None and v < prev_value:
                raise ValueError("assignment is not monotone")
            prev_value = v

    @classmethod
    def from_json(cls, data: dict) -> "ContinuumModel":
        if not isinstance(data, dict):
            raise ValueError("model file must hold a JSON object")
        gch = bool(data.get("gch", False))
        raw = data.get("continuum", {})
        if not isinstance(raw, dict):
            raise ValueError("'continuum' must be an object")
        cont = {parse_ordinal(str(k)): parse_ordinal(str(v)) for k, v in raw.items()}
        return cls(gch=gch, continuum=cont)

    def __repr__(self) -> str:
        if self.gch:
            return "ContinuumModel[GCH]"
        body = ", ".join(f"2^aleph({k}) = aleph({v})" for k, v in self.continuum.items())
        return f"ContinuumModel[{body or 'empty'}]"


GCH = ContinuumModel(gch=True)


def _bounds(x) -> tuple[Cardinal, Cardinal | None]:
    if isinstance(x, CardinalInterval):
        return x.lo, x.hi
    return x, x


def _result(lo: Cardinal, hi: Cardinal | None):
    if hi is not None and lo == hi:
        return lo
    return CardinalInterval(lo, hi)


def power_of_two(lam: Cardinal, model: ContinuumModel = GCH):
    """2^lam for infinite lam: exact under GCH or when pinned/squeezed,
    otherwise the interval the model admits."""
    if not lam.is_infinite:
        raise ValueError("power_of_two expects an infinite cardinal")
    ix = lam.index
    if model.gch:
        return aleph(ix + ONE)
    pinned = model.continuum.get(ix)
    if pinned is not None:
        return aleph(pinned)
    lo = aleph(ix + ONE)
    hi: Cardinal | None = None
    for k, v in model.continuum.items():
        if k < ix:
            lo = max(lo, aleph(v))  # monotone: 2^mu <= 2^lam for mu <= lam
        elif k > ix:
            hi = min(hi, aleph(v)) if hi is not None else aleph(v)
    assert hi is None or lo <= hi, "validated model produced crossed bounds"
    return _result(lo, hi)


def card_pow(base: Cardinal, exp: Cardinal, model: ContinuumModel = GCH):
    """kappa^lam under the model; exact cardinal or interval.

    Exactness rules beyond GCH: lam >= kappa gives 2^lam; a known
    2^lam >= kappa forces kappa^lam = 2^lam.  Otherwise the result is
    bracketed by kappa (kappa^+ once lam reaches cf(kappa)) and 2^kappa.
    """
    if base.is_finite and base.finite < 2:
        raise ValueError("base must be at least 2")
    if exp.is_finite:
        if exp.finite == 0:
            return fin(1)
        if base.is_finite:
            raise ValueError("finite base with finite positive exponent: not a cardinal question")
        return base
    if base.is_finite:
        return power_of_two(exp, model)
    kappa, lam = base, exp
    if model.gch:
        cfk = kappa.cofinality()
        if lam < cfk:
            return kappa
        if lam <= kappa:
            return kappa.successor()
        return lam.successor()
    if lam >= kappa:
        return power_of_two(lam, model)
    t = power_of_two(lam, model)
    tlo, thi = _bounds(t)
    if tlo >= kappa:
        return t
    lo = kappa.successor() if lam >= kappa.cofinality() else kappa
    lo = max(lo, tlo)
    _, hi = _bounds(power_of_two(kappa, model))
    return _result(lo, hi)


def card_cofinality(c: Cardinal) -> Cardinal:
    return c.cofinality()


def card_sum_family(index_count: Cardinal, term_sup: Cardinal) -> Cardinal:
    """Sum of index_count many cardinals each <= term_sup with sup term_sup:
    the maximum of the two, once either is infinite."""
    if index_count < fin(1) or term_sup < fin(1):
        raise ValueError("need at least one term and positive terms")
    if index_count.is_finite and term_sup.is_finite:
        raise ValueError("finite sums are plain arithmetic")
    return max(index_count, term_sup)


def card_tarski_product(index_count: Cardinal, term_sup: Cardinal,
                        model: ContinuumModel = GCH):
    """Product of an increasing index_count-indexed family with sup
    term_sup: term_sup^index_count (both must be infinite)."""
    if not (index_count.is_infinite and term_sup.is_infinite):
        raise ValueError("both the index set and the supremum must be infinite")
    return card_pow(term_sup, index_count, model)


@dataclass(frozen=True)
class PartitionShape:
    """What the complement count of a partition of an infinite set sees.

    ``kappa``: size of the ground set.  ``full_blocks``: how many blocks
    have size kappa (0, 1, or 2 standing for "two or more").  When exactly
    one block is full, ``residue`` is the size of the ground set outside
    it.  ``trivial`` marks the bottom/top partitions, which are complements
    of each other and of nothing else.
    """

    kappa: Cardinal
    full_blocks: int
    residue: Cardinal | None = None
    trivial: bool = False

    def __post_init__(self):
        if not self.kappa.is_infinite:
            raise ValueError("shape classification needs an infinite ground set")
        if self.full_blocks not in (0, 1, 2):
            raise ValueError("full_blocks must be 0, 1 or 2 (2 = two or more)")
        if self.trivial:
            return
        if self.full_blocks == 1:
            if self.residue is None:
                raise ValueError("one full block needs the residue cardinal")
            if self.residue > self.kappa:
                raise ValueError("residue cannot exceed the ground set")


def complement_count_symbolic(shape: PartitionShape, model: ContinuumModel = GCH):
    """Number of complements of a partition with the given shape.

    Trivial partitions have exactly one complement.  With one full block
    and residue lam the count is kappa^lam (so under GCH: kappa when
    1 <= lam < cf(kappa), else 2^kappa).  With no full block, or two or
    more, the count is 2^kappa.
    """
    if shape.trivial:
        return fin(1)
    if shape.full_blocks == 1:
        if shape.residue == fin(0):
            return fin(1)  # the one-block partition: only bottom works
        return card_pow(shape.kappa, shape.residue, model)
    return power_of_two(shape.kappa, model)


@dataclass(frozen=True)
class ChainBounds:
    """Cardinality facts about maximal chains in the lattice on kappa.

    Well-ordered maximal chains exist exactly in sizes cf(kappa) through
    kappa; some (non-well-ordered) maximal chain is strictly longer than
    kappa; and the lattice on 2^kappa has, under GCH, a maximal chain of
    size only kappa.
    """

    kappa: Cardinal
    well_ordered_low: Cardinal
    well_ordered_high: Cardinal
    long_chain_exceeds: Cardinal
    short_chain_in_pow: Cardinal


def chain_cardinality_bounds(kappa: Cardinal) -> ChainBounds:
    if not kappa.is_infinite:
        raise ValueError("chain bounds are about infinite ground sets")
    return ChainBounds(
        kappa=kappa,
        well_ordered_low=kappa.cofinality(),
        well_ordered_high=kappa,
        long_chain_exceeds=kappa,
        short_chain_in_pow=kappa,
    )


# ---------------------------------------------------------------------------
# text forms


def format_cardinal(c: Cardinal) -> str:
    if c.is_finite:
        return f"fin({c.finite})"
    return f"aleph({format_ordinal(c.index)})"


def format_result(res) -> str:
    return str(res)


_TOKEN = re.compile(r"\s*([a-z]+|[0-9]+|[()+*^,=])")


def _tokens(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"bad character {text[pos:].strip()[0]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of expression")
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def int_(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise ValueError(f"expected an integer, got {tok!r}")
        return int(tok)

    # ordinals ---------------------------------------------------------
    def ordinal(self) -> Ordinal:
        total = self.ord_term()
        while self.peek() == "+":
            self.take("+")
            total = total + self.ord_term()
        return total

    def ord_term(self) -> Ordinal:
        tok = self.peek()
        if tok == "w":
            self.take("w")
            exp = ONE
            if self.peek() == "^":
                self.take("^")
                exp = self.ord_atom()
            coeff = 1
            if self.peek() == "*":
                self.take("*")
                coeff = self.int_()
            return Ordinal.omega_power(exp, coeff)
        if tok is not None and tok.isdigit():
            return Ordinal.from_int(self.int_())
        raise ValueError(f"expected an ordinal term, got {tok!r}")

    def ord_atom(self) -> Ordinal:
        tok = self.peek()
        if tok == "(":
            self.take("(")
            o = self.ordinal()
            self.take(")")
            return o
        if tok == "w":
            self.take("w")
            return OMEGA
        if tok is not None and tok.isdigit():
            return Ordinal.from_int(self.int_())
        raise ValueError(f"expected an ordinal, got {tok!r}")

    # cardinals --------------------------------------------------------
    def cardinal(self, model: ContinuumModel):
        tok = self.take()
        if tok == "fin":
            self.take("(")
            k = self.int_()
            self.take(")")
            return fin(k)
        if tok == "aleph":
            self.take("(")
            ix = self.ordinal()
            self.take(")")
            return aleph(ix)
        if tok == "pow":
            self.take("(")
            base = self.exact_cardinal(model)
            self.take(",")
            exp = self.exact_cardinal(model)
            self.take(")")
            return card_pow(base, exp, model)
        if tok == "cf":
            self.take("(")
            c = self.exact_cardinal(model)
            self.take(")")
            return card_cofinality(c)
        raise ValueError(f"expected a cardinal expression, got {tok!r}")

    def exact_cardinal(self, model: ContinuumModel) -> Cardinal:
        res = self.cardinal(model)
        if isinstance(res, CardinalInterval):
            raise ValueError(f"subexpression is not determined by the model: {res}")
        return res

    def shape(self, model: ContinuumModel) -> PartitionShape:
        self.take("shape")
        self.take("(")
        self.take("full")
        self.take("=")
        full = self.int_()
        self.take(",")
        self.take("kappa")
        self.take("=")
        kappa = self.exact_cardinal(model)
        residue = None
        if self.peek() == ",":
            self.take(",")
            self.take("lambda")
            self.take("=")
            residue = self.exact_cardinal(model)
        self.take(")")
        return PartitionShape(kappa=kappa, full_blocks=min(full, 2), residue=residue)

    def expression(self, model: ContinuumModel):
        if self.peek() == "complements":
            self.take("complements")
            self.take("(")
            shp = self.shape(model)
            self.take(")")
            res = complement_count_symbolic(shp, model)
        else:
            res = self.cardinal(model)
        if self.peek() is not None:
            raise ValueError(f"trailing input near {self.peek()!r}")
        return res


def parse_ordinal(text: str) -> Ordinal:
    p = _Parser(text)
    o = p.ordinal()
    if p.peek() is not None:
        raise ValueError(f"trailing input near {p.peek()!r}")
    return o


def evaluate(text: str, model: ContinuumModel = GCH):
    """Evaluate a cardinal expression under a model.

    Grammar: fin(INT), aleph(ORD), pow(C, C), cf(C),
    complements(shape(full=INT, kappa=C, lambda=C)); ordinals use w, ^, *, +.
    """
    return _Parser(text).expression(model)
