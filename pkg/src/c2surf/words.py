"""Symbolic equivariant surfaces: base space plus a multiset of surgeries.

A word is a base C2-surface together with counts of six surgery operations:

* ``DCC``   -- connected sum with two conjugate crosscaps (beta +2)
* ``DT``    -- connected sum with two conjugate tori (beta +4)
* ``S10AT`` -- sew in an antitube around a trivially-acted circle (beta +2)
* ``S11AT`` -- sew in an antitube around a reflected circle (beta +2, F +2)
* ``S1aAT`` -- sew in an antitube around an antipodally-acted circle (beta +2)
* ``FM``    -- trade an isolated fixed point for a one-sided oval (beta +1)

All invariants of the underlying action (beta-genus, fixed-point data, the
quotient's orientability sign, separation behaviour) are computed directly
from the word.  A partial rewriting system maps each word towards the fixed
representative families used by the enumeration; equal normal forms certify
an equivariant isomorphism, unequal ones certify nothing.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace
from typing import Callable, Iterator, List, Optional, Tuple


class WordSyntaxError(ValueError):
    """Unparseable word text."""


class InvalidWordError(ValueError):
    """Structurally valid text describing an impossible word."""


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"


class Epsilon(enum.Enum):
    SEPARATING = "sep"
    NON_SEPARATING = "nonsep"
    NO_FIXED_CIRCLES = "nofix"


@dataclass(frozen=True, slots=True)
class Surface:
    """A closed surface: T_g when orientable, N_r otherwise."""

    orientable: bool
    genus: int

    def __post_init__(self) -> None:
        if self.genus < 0 or (not self.orientable and self.genus < 1):
            raise ValueError(f"bad surface parameters {self!r}")

    @property
    def beta(self) -> int:
        return 2 * self.genus if self.orientable else self.genus

    @property
    def name(self) -> str:
        return f"{'T' if self.orientable else 'N'}{self.genus}"

    @classmethod
    def parse(cls, text: str) -> "Surface":
        m = re.fullmatch(r"([TN])(\d+)", text)
        if not m:
            raise WordSyntaxError(f"bad surface spec {text!r}")
        try:
            return cls(m.group(1) == "T", int(m.group(2)))
        except ValueError as exc:
            raise WordSyntaxError(str(exc)) from exc

    def __repr__(self) -> str:
        return self.name


class BaseKind(enum.Enum):
    TRIVIAL = "Triv"
    S2A = "S2a"
    S21 = "S21"
    S22 = "S22"
    T_ANTI = "Tanti"
    T_ROT = "Trot"
    T_SPIT = "Tspit"
    T_REFL = "Trefl"


# Bases whose action preserves orientation; the rest reverse it.
_PRESERVING_BASES = {BaseKind.S22, BaseKind.T_ROT, BaseKind.T_SPIT}


@dataclass(frozen=True, slots=True)
class BaseSpace:
    """A base equivariant surface.  Use the factory methods; they normalize
    the genus-zero coincidences Tanti(0)=S2a, Tspit(0,2)=S22, Trefl(0,1)=S21."""

    kind: BaseKind
    g: int = 0
    f: int = 0  # fixed points of a spit base
    c: int = 0  # ovals of a reflection base
    surface: Optional[Surface] = None  # trivial actions only

    def __post_init__(self) -> None:
        k = self.kind
        if k == BaseKind.TRIVIAL:
            if self.surface is None:
                raise InvalidWordError("trivial base needs a surface")
        elif self.surface is not None:
            raise InvalidWordError("only trivial bases carry a surface")
        if k == BaseKind.T_ANTI and self.g < 1:
            raise InvalidWordError("Tanti(0) must be written S2a")
        if k == BaseKind.T_ROT and (self.g < 1 or self.g % 2 == 0):
            raise InvalidWordError("rotation bases need odd genus")
        if k == BaseKind.T_SPIT:
            if self.g < 1:
                raise InvalidWordError("Tspit(0,2) must be written S22")
            if not (2 <= self.f <= 2 + 2 * self.g) or (self.f - (2 + 2 * self.g)) % 4:
                raise InvalidWordError(f"bad spit fixed-point count F={self.f} at g={self.g}")
        if k == BaseKind.T_REFL:
            if self.g < 1:
                raise InvalidWordError("Trefl(0,1) must be written S21")
            if not (1 <= self.c <= self.g + 1) or (self.c - (self.g + 1)) % 2:
                raise InvalidWordError(f"bad reflection oval count C={self.c} at g={self.g}")

    @staticmethod
    def trivial(surface: Surface) -> "BaseSpace":
        return BaseSpace(BaseKind.TRIVIAL, surface=surface)

    @staticmethod
    def s2a() -> "BaseSpace":
        return BaseSpace(BaseKind.S2A)

    @staticmethod
    def s21() -> "BaseSpace":
        return BaseSpace(BaseKind.S21)

    @staticmethod
    def s22() -> "BaseSpace":
        return BaseSpace(BaseKind.S22)

    @staticmethod
    def tanti(g: int) -> "BaseSpace":
        return BaseSpace.s2a() if g == 0 else BaseSpace(BaseKind.T_ANTI, g=g)

    @staticmethod
    def trot(g: int) -> "BaseSpace":
        return BaseSpace(BaseKind.T_ROT, g=g)

    @staticmethod
    def tspit(g: int, f: int) -> "BaseSpace":
        if g == 0:
            if f != 2:
                raise InvalidWordError(f"genus-zero spit needs F=2, got {f}")
            return BaseSpace.s22()
        return BaseSpace(BaseKind.T_SPIT, g=g, f=f)

    @staticmethod
    def trefl(g: int, c: int) -> "BaseSpace":
        if g == 0:
            if c != 1:
                raise InvalidWordError(f"genus-zero reflection needs C=1, got {c}")
            return BaseSpace.s21()
        return BaseSpace(BaseKind.T_REFL, g=g, c=c)

    @property
    def beta(self) -> int:
        if self.kind == BaseKind.TRIVIAL:
            return self.surface.beta
        if self.kind in (BaseKind.S2A, BaseKind.S21, BaseKind.S22):
            return 0
        return 2 * self.g

    @property
    def fixed_points(self) -> int:
        if self.kind == BaseKind.S22:
            return 2
        if self.kind == BaseKind.T_SPIT:
            return self.f
        return 0

    @property
    def ovals(self) -> int:
        if self.kind == BaseKind.S21:
            return 1
        if self.kind == BaseKind.T_REFL:
            return self.c
        return 0

    @property
    def preserves_orientation(self) -> bool:
        return self.kind in _PRESERVING_BASES

    def token(self) -> str:
        k = self.kind
        if k == BaseKind.TRIVIAL:
            return f"Triv({self.surface.name})"
        if k in (BaseKind.S2A, BaseKind.S21, BaseKind.S22):
            return k.value
        if k == BaseKind.T_ANTI:
            return f"Tanti({self.g})"
        if k == BaseKind.T_ROT:
            return f"Trot({self.g})"
        if k == BaseKind.T_SPIT:
            return f"Tspit({self.g},{self.f})"
        return f"Trefl({self.g},{self.c})"


_OP_NAMES = ("DCC", "DT", "S10AT", "S11AT", "S1aAT", "FM")


@dataclass(frozen=True, slots=True)
class SurgeryWord:
    """A base space with surgery-operation multiplicities."""

    base: BaseSpace
    dcc: int = 0
    dt: int = 0
    s10at: int = 0
    s11at: int = 0
    s1aat: int = 0
    fm: int = 0

    def __post_init__(self) -> None:
        counts = (self.dcc, self.dt, self.s10at, self.s11at, self.s1aat, self.fm)
        if any(c < 0 for c in counts):
            raise InvalidWordError("negative operation count")
        if self.base.kind == BaseKind.TRIVIAL and any(counts):
            raise InvalidWordError("trivial actions admit no surgery")
        if self.fm > self.base.fixed_points + 2 * self.s11at:
            raise InvalidWordError(
                f"{self.fm} FM surgeries but only "
                f"{self.base.fixed_points + 2 * self.s11at} fixed points available"
            )

    @property
    def op_counts(self) -> Tuple[int, int, int, int, int, int]:
        return (self.dcc, self.dt, self.s10at, self.s11at, self.s1aat, self.fm)

    def is_trivial(self) -> bool:
        return self.base.kind == BaseKind.TRIVIAL

    def text(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"<{format_word(self)}>"


def word(base: BaseSpace, **counts: int) -> SurgeryWord:
    return SurgeryWord(base, **counts)


def beta(w: SurgeryWord) -> int:
    """Beta-genus: crosscap pairs and antitubes add 2, dual tori 4, FM adds 1."""
    return (
        w.base.beta
        + 2 * (w.dcc + w.s10at + w.s11at + w.s1aat)
        + 4 * w.dt
        + w.fm
    )


def fixed_data(w: SurgeryWord) -> Tuple[int, int, int]:
    """(F, C+, C-): isolated fixed points, two-sided ovals, one-sided ovals."""
    f = w.base.fixed_points + 2 * w.s11at - w.fm
    cplus = w.base.ovals + w.s10at
    cminus = w.fm
    return (f, cplus, cminus)


def q_sign(w: SurgeryWord) -> Sign:
    """Orientability of the quotient: crosscap pairs and antipodal antitubes
    each add a crosscap to the quotient, every other surgery preserves it."""
    if w.is_trivial():
        raise InvalidWordError("quotient sign is defined for nontrivial actions")
    if w.dcc > 0 or w.s1aat > 0:
        return Sign.MINUS
    if w.base.kind in (BaseKind.S2A, BaseKind.T_ANTI):
        return Sign.MINUS
    return Sign.PLUS


def orientability(w: SurgeryWord) -> bool:
    """Orientable iff no crosscaps/FM and every antitube matches the base's
    orientation behaviour (reflected-circle antitubes preserve, the others
    reverse); dual tori never interfere."""
    if w.is_trivial():
        return w.base.surface.orientable
    if w.dcc or w.fm:
        return False
    if w.base.preserves_orientation:
        return w.s10at == 0 and w.s1aat == 0
    return w.s11at == 0


def underlying_surface(w: SurgeryWord) -> Surface:
    b = beta(w)
    if orientability(w):
        return Surface(True, b // 2)
    return Surface(False, b)


def epsilon(w: SurgeryWord) -> Epsilon:
    """Separation invariant.  Only doubled surfaces separate: a reflection
    family base with nothing but crosscap pairs, dual tori and trivial-circle
    antitubes attached.  Words without ovals get their own marker."""
    if w.is_trivial():
        raise InvalidWordError("separation is defined for nontrivial actions")
    f, cplus, cminus = fixed_data(w)
    if cplus + cminus == 0:
        return Epsilon.NO_FIXED_CIRCLES
    if (
        f == 0
        and cminus == 0
        and w.base.kind in (BaseKind.S21, BaseKind.T_REFL)
        and w.s11at == 0
        and w.s1aat == 0
        and w.fm == 0
    ):
        return Epsilon.SEPARATING
    return Epsilon.NON_SEPARATING


# ---------------------------------------------------------------------------
# text form


_BASE_RE = re.compile(
    r"S2a|S21|S22|Tanti\((\d+)\)|Trot\((\d+)\)|Tspit\((\d+),(\d+)\)"
    r"|Trefl\((\d+),(\d+)\)|Triv\(([TN]\d+)\)"
)
_OP_RE = re.compile(r"(\d*)(DCC|DT|S10AT|S11AT|S1aAT|FM)")


def parse_word(text: str) -> SurgeryWord:
    """Parse ``BASE(+COUNT?OP)*``, e.g. ``S2a+2DCC+3S10AT+S11AT+2FM``."""
    parts = text.strip().split("+")
    if not parts or not parts[0]:
        raise WordSyntaxError(f"empty word {text!r}")
    base = _parse_base(parts[0].strip())
    counts = dict.fromkeys(_OP_NAMES, 0)
    for part in parts[1:]:
        m = _OP_RE.fullmatch(part.strip())
        if not m:
            raise WordSyntaxError(f"bad operation token {part!r}")
        counts[m.group(2)] += int(m.group(1)) if m.group(1) else 1
    return SurgeryWord(
        base,
        dcc=counts["DCC"],
        dt=counts["DT"],
        s10at=counts["S10AT"],
        s11at=counts["S11AT"],
        s1aat=counts["S1aAT"],
        fm=counts["FM"],
    )


def _parse_base(token: str) -> BaseSpace:
    m = _BASE_RE.fullmatch(token)
    if not m:
        raise WordSyntaxError(f"bad base token {token!r}")
    if token == "S2a":
        return BaseSpace.s2a()
    if token == "S21":
        return BaseSpace.s21()
    if token == "S22":
        return BaseSpace.s22()
    try:
        if token.startswith("Tanti"):
            return BaseSpace.tanti(int(m.group(1)))
        if token.startswith("Trot"):
            return BaseSpace.trot(int(m.group(2)))
        if token.startswith("Tspit"):
            return BaseSpace.tspit(int(m.group(3)), int(m.group(4)))
        if token.startswith("Trefl"):
            return BaseSpace.trefl(int(m.group(5)), int(m.group(6)))
        return BaseSpace.trivial(Surface.parse(m.group(7)))
    except InvalidWordError:
        raise
    except ValueError as exc:  # surface parse
        raise WordSyntaxError(str(exc)) from exc


def format_word(w: SurgeryWord) -> str:
    """Canonical text: base token, then ops in fixed order with count prefixes."""
    parts = [w.base.token()]
    for name, count in zip(_OP_NAMES, w.op_counts):
        if count == 1:
            parts.append(name)
        elif count > 1:
            parts.append(f"{count}{name}")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# rewriting


@dataclass(frozen=True)
class RewriteRule:
    """A family of word pairs known to describe isomorphic actions."""

    name: str
    instances: Callable[[int], Iterator[Tuple[SurgeryWord, SurgeryWord]]]


def _with(w: SurgeryWord, **kw: int) -> SurgeryWord:
    return replace(w, **kw)


def _ctx_words(max_beta: int) -> Iterator[SurgeryWord]:
    """Small library of context words for the connected-sum rule."""
    bases = [
        BaseSpace.s2a(),
        BaseSpace.s21(),
        BaseSpace.s22(),
        BaseSpace.tanti(1),
        BaseSpace.tanti(2),
        BaseSpace.trot(1),
        BaseSpace.tspit(1, 4),
        BaseSpace.trefl(1, 2),
    ]
    extras = [
        {},
        {"dcc": 1},
        {"dt": 1},
        {"s10at": 1},
        {"s11at": 1},
        {"s1aat": 1},
        {"s11at": 1, "fm": 1},
    ]
    for base in bases:
        for kw in extras:
            try:
                w = SurgeryWord(base, **kw)
            except InvalidWordError:
                continue
            if beta(w) <= max_beta:
                yield w


def _spit_params(max_beta: int) -> Iterator[Tuple[int, int]]:
    for g in range(0, max_beta // 2 + 1):
        f = 2 + 2 * g
        while f >= 2:
            yield g, f
            f -= 4


def rewrite_equivalences() -> List[RewriteRule]:
    """The rule set; each instance pairs two isomorphic words."""

    def fundiso_dcc(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # S22 + r DCC  ~  S2a + (r-1) DCC + S11AT
        for r in range(1, mb // 2):
            u = SurgeryWord(BaseSpace.s22(), dcc=r)
            if beta(u) > mb:
                break
            yield u, SurgeryWord(BaseSpace.s2a(), dcc=r - 1, s11at=1)

    def fundiso_s1a(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # S22 + DCC  ~  S22 + S1aAT
        yield SurgeryWord(BaseSpace.s22(), dcc=1), SurgeryWord(BaseSpace.s22(), s1aat=1)

    def fundiso_s1a_t1(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # S2a + S1aAT  ~  Tanti(1)
        yield SurgeryWord(BaseSpace.s2a(), s1aat=1), SurgeryWord(BaseSpace.tanti(1))

    def fundiso_t1(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # S2a + DCC + S11AT  ~  Tanti(1) + S11AT
        yield (
            SurgeryWord(BaseSpace.s2a(), dcc=1, s11at=1),
            SurgeryWord(BaseSpace.tanti(1), s11at=1),
        )

    def anti_s11(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # Tanti(g) + S11AT  ~  S2a + g DCC + S11AT
        for g in range(1, mb // 2):
            u = SurgeryWord(BaseSpace.tanti(g), s11at=1)
            if beta(u) > mb:
                break
            yield u, SurgeryWord(BaseSpace.s2a(), dcc=g, s11at=1)

    def anti_dcc(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # Tanti(g) + s DCC  ~  S2a + (g+s) DCC         (g even)
        #                   ~  Tanti(1) + (g+s-1) DCC  (g odd)
        for g in range(2, mb // 2 + 1):
            for s in range(1, mb // 2 + 1):
                u = SurgeryWord(BaseSpace.tanti(g), dcc=s)
                if beta(u) > mb:
                    break
                if g % 2 == 0:
                    yield u, SurgeryWord(BaseSpace.s2a(), dcc=g + s)
                else:
                    yield u, SurgeryWord(BaseSpace.tanti(1), dcc=g + s - 1)

    def rot_dcc(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # Trot(g) + s DCC  ~  Tanti(1) + (g+s-1) DCC   (g odd)
        for g in range(1, mb // 2 + 1, 2):
            for s in range(1, mb // 2 + 1):
                u = SurgeryWord(BaseSpace.trot(g), dcc=s)
                if beta(u) > mb:
                    break
                yield u, SurgeryWord(BaseSpace.tanti(1), dcc=g + s - 1)

    def spit_unroll(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # Tspit(g, 2+2g-4n)  ~  S22 + g S11AT          (n = 0)
        #                    ~  Trot(2n-1) + (g+1-2n) S11AT   (n > 0)
        for g, f in _spit_params(mb):
            if 2 * g > mb:
                continue
            n = (2 + 2 * g - f) // 4
            u = SurgeryWord(BaseSpace.tspit(g, f))
            if n == 0:
                yield u, SurgeryWord(BaseSpace.s22(), s11at=g)
            else:
                yield u, SurgeryWord(BaseSpace.trot(2 * n - 1), s11at=g + 1 - 2 * n)

    def spit_expand(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # Tspit(g,F)  ~  S22 + (F/2 - 1) S11AT + ((2+2g-F)/4) DT
        for g, f in _spit_params(mb):
            if 2 * g > mb:
                continue
            yield (
                SurgeryWord(BaseSpace.tspit(g, f)),
                SurgeryWord(BaseSpace.s22(), s11at=f // 2 - 1, dt=(2 + 2 * g - f) // 4),
            )

    def refl_expand(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # Trefl(g,C)  ~  S21 + (C-1) S10AT + ((g+1-C)/2) DT
        for g in range(0, mb // 2 + 1):
            c = g + 1
            while c >= 1:
                yield (
                    SurgeryWord(BaseSpace.trefl(g, c)),
                    SurgeryWord(BaseSpace.s21(), s10at=c - 1, dt=(g + 1 - c) // 2),
                )
                c -= 2

    def dcc_absorbs_dt(mb: int) -> Iterator[Tuple[SurgeryWord, SurgeryWord]]:
        # X + DCC + DT  ~  X + 3 DCC  (crosscapped sums absorb handles)
        for ctx in _ctx_words(mb - 6):
            u = _with(ctx, dcc=ctx.dcc + 1, dt=ctx.dt + 1)
            if beta(u) > mb:
                continue
            yield u, _with(ctx, dcc=ctx.dcc + 3)

    return [
        RewriteRule("fundiso_dcc", fundiso_dcc),
        RewriteRule("fundiso_s1a", fundiso_s1a),
        RewriteRule("fundiso_s1a_t1", fundiso_s1a_t1),
        RewriteRule("fundiso_t1", fundiso_t1),
        RewriteRule("anti_s11", anti_s11),
        RewriteRule("anti_dcc", anti_dcc),
        RewriteRule("rot_dcc", rot_dcc),
        RewriteRule("spit_unroll", spit_unroll),
        RewriteRule("spit_expand", spit_expand),
        RewriteRule("refl_expand", refl_expand),
        RewriteRule("dcc_absorbs_dt", dcc_absorbs_dt),
    ]


def _normalize_step(w: SurgeryWord) -> SurgeryWord:
    """One directed rewrite towards the representative families, or w itself."""
    k = w.base.kind

    # antipodal antitubes become crosscaps (S22) or a torus base (S2a)
    if w.s1aat and k == BaseKind.S22:
        return _with(w, s1aat=w.s1aat - 1, dcc=w.dcc + 1)
    if w.s1aat and k == BaseKind.S2A:
        return replace(w, base=BaseSpace.tanti(1), s1aat=w.s1aat - 1)

    # spit/reflection bases unroll when mixed with foreign surgeries
    if k == BaseKind.T_SPIT and (w.dcc or w.s1aat or w.dt or w.s11at):
        return replace(
            w,
            base=BaseSpace.s22(),
            s11at=w.s11at + w.base.f // 2 - 1,
            dt=w.dt + (2 + 2 * w.base.g - w.base.f) // 4,
        )
    if k == BaseKind.T_REFL and any(w.op_counts):
        return replace(
            w,
            base=BaseSpace.s21(),
            s10at=w.s10at + w.base.c - 1,
            dt=w.dt + (w.base.g + 1 - w.base.c) // 2,
        )

    # a crosscapped sum absorbs dual tori
    if w.dcc and w.dt:
        return _with(w, dcc=w.dcc + 2, dt=w.dt - 1)

    # free torus bases shed crosscaps down to S2a / Tanti(1)
    if k == BaseKind.T_ROT and w.dcc:
        return replace(w, base=BaseSpace.tanti(1), dcc=w.dcc + w.base.g - 1)
    if k == BaseKind.T_ANTI and w.s11at:
        return replace(w, base=BaseSpace.s2a(), dcc=w.dcc + w.base.g)
    if k == BaseKind.T_ANTI and w.base.g >= 2 and w.dcc:
        if w.base.g % 2 == 0:
            return replace(w, base=BaseSpace.s2a(), dcc=w.dcc + w.base.g)
        return replace(w, base=BaseSpace.tanti(1), dcc=w.dcc + w.base.g - 1)
    if k == BaseKind.S22 and w.dcc:
        return replace(w, base=BaseSpace.s2a(), dcc=w.dcc - 1, s11at=w.s11at + 1)

    # rotation bases with reflected antitubes contract into spit bases
    if k == BaseKind.T_ROT and w.s11at and not w.dcc and not w.s1aat:
        return replace(
            w,
            base=BaseSpace.tspit(w.base.g + w.s11at, 2 * w.s11at),
            s11at=0,
        )

    # pure positive-family words contract back to spit/reflection bases
    if k == BaseKind.S22 and (w.s11at or w.dt) and not w.dcc and not w.s1aat:
        return replace(
            w,
            base=BaseSpace.tspit(w.s11at + 2 * w.dt, 2 * w.s11at + 2),
            s11at=0,
            dt=0,
        )
    if (
        k == BaseKind.S21
        and (w.s10at or w.dt)
        and not (w.dcc or w.s1aat or w.s11at or w.fm)
    ):
        return replace(
            w,
            base=BaseSpace.trefl(w.s10at + 2 * w.dt, w.s10at + 1),
            s10at=0,
            dt=0,
        )

    return w


_NORMALIZE_FUSE = 10_000


def normalize(w: SurgeryWord) -> SurgeryWord:
    """Directed rewriting to a fixpoint.  Equal outputs certify isomorphism;
    the enumeration's representative words are already fixpoints."""
    for _ in range(_NORMALIZE_FUSE):
        nxt = _normalize_step(w)
        if nxt == w:
            return w
        w = nxt
    raise RuntimeError(f"rewriting did not terminate on {w!r}")


__all__ = [
    "WordSyntaxError",
    "InvalidWordError",
    "Sign",
    "Epsilon",
    "Surface",
    "BaseKind",
    "BaseSpace",
    "SurgeryWord",
    "word",
    "beta",
    "fixed_data",
    "q_sign",
    "orientability",
    "underlying_surface",
    "epsilon",
    "parse_word",
    "format_word",
    "RewriteRule",
    "rewrite_equivalences",
    "normalize",
]
