"""Symbolic points of real sequence spaces.

A SeqPoint is a finitely supported head plus an optional closed-form
tail: harmonic tails have entries scale/i from some start index on,
geometric tails have entries scale * ratio^(i - start + 1) with
0 < ratio < 1. This little language is closed under addition (same-kind
tails; geometric requires equal ratios) and rational scaling, and every
entry is an exact rational.

Construction canonicalizes: zero head entries are dropped, zero-scale
tails collapse to no tail, and head entries that continue the tail's own
closed form are absorbed by lowering the start. Canonical form is unique,
so dataclass equality coincides with equality as sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError, PreconditionError, UnsupportedInputError
from ..ratcore import rat

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class Tail:
    """Closed-form tail; kind is 'none', 'harmonic', or 'geometric'."""

    kind: str
    scale: Fraction = _F0
    ratio: Fraction = _F0
    start: int = 1

    @classmethod
    def none(cls) -> "Tail":
        return cls("none")

    @classmethod
    def harmonic(cls, scale, start: int = 1) -> "Tail":
        scale = rat(scale)
        if scale == 0:
            return cls.none()
        if start < 1:
            raise PreconditionError("tail start must be >= 1")
        return cls("harmonic", scale, _F0, start)

    @classmethod
    def geometric(cls, scale, ratio, start: int = 1) -> "Tail":
        scale = rat(scale)
        ratio = rat(ratio)
        if scale == 0:
            return cls.none()
        if not (0 < ratio < 1):
            raise PreconditionError("geometric ratio must satisfy 0 < ratio < 1")
        if start < 1:
            raise PreconditionError("tail start must be >= 1")
        return cls("geometric", scale, ratio, start)

    def entry(self, i: int) -> Fraction:
        if self.kind == "none" or i < self.start:
            return _F0
        if self.kind == "harmonic":
            return self.scale / i
        return self.scale * self.ratio ** (i - self.start + 1)

    def predecessor_value(self) -> Fraction:
        """The value the closed form would take at index start - 1."""
        if self.kind == "harmonic":
            return self.scale / (self.start - 1)
        return self.scale  # geometric: scale * ratio^0


@dataclass(frozen=True)
class SeqPoint:
    """head maps indices (>= 1) to nonzero rationals; tail covers the rest."""

    head: tuple[tuple[int, Fraction], ...]
    tail: Tail

    @classmethod
    def make(cls, head=None, tail: Tail | None = None) -> "SeqPoint":
        tail = tail or Tail.none()
        entries: dict[int, Fraction] = {}
        for i, v in dict(head or {}).items():
            i = int(i)
            if i < 1:
                raise PreconditionError("head indices start at 1")
            v = rat(v)
            if v != 0:
                entries[i] = v
        if tail.kind != "none":
            bad = [i for i in entries if i >= tail.start]
            if bad:
                raise PreconditionError(
                    f"head indices {sorted(bad)} overlap tail start {tail.start}"
                )
            # Absorb head entries that continue the tail's closed form.
            while tail.start > 1:
                prev = tail.start - 1
                if entries.get(prev) != tail.predecessor_value():
                    break
                del entries[prev]
                if tail.kind == "harmonic":
                    tail = Tail("harmonic", tail.scale, _F0, prev)
                else:
                    tail = Tail(
                        "geometric", tail.scale / tail.ratio, tail.ratio, prev
                    )
        return cls(tuple(sorted(entries.items())), tail)

    @classmethod
    def zero(cls) -> "SeqPoint":
        return cls.make()

    @classmethod
    def basis(cls, i: int, value=1) -> "SeqPoint":
        return cls.make({i: value})

    # ------------------------------------------------------------- access

    def entry(self, i: int) -> Fraction:
        if i < 1:
            raise PreconditionError("indices start at 1")
        for j, v in self.head:
            if j == i:
                return v
        return self.tail.entry(i)

    def head_dict(self) -> dict[int, Fraction]:
        return dict(self.head)

    @property
    def tail_kind(self) -> str:
        return self.tail.kind

    def harmonic_scale(self) -> Fraction:
        return self.tail.scale if self.tail.kind == "harmonic" else _F0

    def is_zero(self) -> bool:
        return not self.head and self.tail.kind == "none"

    def is_finitely_supported(self) -> bool:
        return self.tail.kind == "none"

    def max_head_index(self) -> int:
        return self.head[-1][0] if self.head else 0

    def support_bound(self) -> int | None:
        """Largest possibly-nonzero index for finitely supported points."""
        return self.max_head_index() if self.tail.kind == "none" else None

    def first_zero_index(self) -> int | None:
        """Smallest index with entry exactly zero, None if all are nonzero.

        Tails never vanish (scale is nonzero), so only the region before
        the tail start, or everything past the head for tail-free points,
        can contain zeros.
        """
        if self.tail.kind == "none":
            present = {i for i, _ in self.head}
            i = 1
            while i in present:
                i += 1
            return i
        for i in range(1, self.tail.start):
            if self.entry(i) == 0:
                return i
        return None

    def all_positive(self) -> bool:
        """Every entry of the infinite sequence strictly positive."""
        if self.first_zero_index() is not None:
            return False
        if self.tail.kind == "none":
            return False  # zeros past the head
        if self.tail.scale < 0:
            return False
        return all(v > 0 for _, v in self.head)

    def all_nonnegative(self) -> bool:
        if any(v < 0 for _, v in self.head):
            return False
        return self.tail.kind == "none" or self.tail.scale > 0

    def entrywise_at_least(self, bound) -> bool:
        """Whether entry(i) >= bound holds for every index i.

        Decidable because tail magnitudes decrease with constant sign, so
        the extreme tail value is the first one; entries tend to zero, so
        a positive bound never holds.
        """
        bound = rat(bound)
        if bound > 0:
            return False
        if any(v < bound for _, v in self.head):
            return False
        t = self.tail
        if t.kind == "none" or t.scale >= 0:
            return True
        return t.entry(t.start) >= bound

    # --------------------------------------------------------- arithmetic

    def __add__(self, other: "SeqPoint") -> "SeqPoint":
        ta, tb = self.tail, other.tail
        kinds = {ta.kind, tb.kind} - {"none"}
        if len(kinds) == 2:
            raise UnsupportedInputError("cannot add harmonic and geometric tails")
        if not kinds:
            head = self._merged_head_with(other, upto=0)
            return SeqPoint.make(head, Tail.none())
        kind = kinds.pop()
        live = [t for t in (ta, tb) if t.kind != "none"]
        if kind == "geometric" and len(live) == 2 and live[0].ratio != live[1].ratio:
            raise UnsupportedInputError(
                "cannot add geometric tails with different ratios"
            )
        start = max(t.start for t in live)
        start = max(
            start, self.max_head_index() + 1, other.max_head_index() + 1
        )
        if kind == "harmonic":
            scale = sum((t.scale for t in live), _F0)
            tail = Tail.harmonic(scale, start) if scale else Tail.none()
        else:
            ratio = live[0].ratio
            scale = sum(
                (t.scale * ratio ** (start - t.start) for t in live), _F0
            )
            tail = Tail.geometric(scale, ratio, start) if scale else Tail.none()
        head = self._merged_head_with(other, upto=start)
        return SeqPoint.make(head, tail)

    def _merged_head_with(self, other: "SeqPoint", upto: int) -> dict[int, Fraction]:
        idx = {i for i, _ in self.head} | {i for i, _ in other.head}
        lows = [
            t.start for t in (self.tail, other.tail) if t.kind != "none"
        ]
        if lows:
            idx |= set(range(min(lows), upto))
        return {i: self.entry(i) + other.entry(i) for i in idx if i < upto or not lows}

    def scale_by(self, c) -> "SeqPoint":
        c = rat(c)
        if c == 0:
            return SeqPoint.zero()
        head = {i: c * v for i, v in self.head}
        t = self.tail
        if t.kind == "none":
            tail = Tail.none()
        elif t.kind == "harmonic":
            tail = Tail.harmonic(c * t.scale, t.start)
        else:
            tail = Tail.geometric(c * t.scale, t.ratio, t.start)
        return SeqPoint.make(head, tail)

    def __neg__(self) -> "SeqPoint":
        return self.scale_by(-1)

    def __sub__(self, other: "SeqPoint") -> "SeqPoint":
        return self + (-other)

    def truncate(self, n: int) -> "SeqPoint":
        """Finitely supported point equal to the first n entries."""
        return SeqPoint.make(
            {i: self.entry(i) for i in range(1, n + 1)}, Tail.none()
        )


# ------------------------------------------------------------------ parsing


def parse_point(text: str) -> SeqPoint:
    """Parse 'head i=p/q,j=p/q tail harmonic s@n' / 'tail geometric s,r@n'.

    Either section may be omitted (but not both); 'head' alone denotes
    the zero point.
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty point")
    pos = 0
    head: dict[int, Fraction] = {}
    tail = Tail.none()
    saw_head = False
    if tokens[pos] == "head":
        saw_head = True
        pos += 1
        if pos < len(tokens) and tokens[pos] != "tail":
            for item in tokens[pos].split(","):
                if "=" not in item:
                    raise ParseError(f"bad head entry {item!r}")
                k, _, val = item.partition("=")
                try:
                    idx = int(k)
                    head[idx] = Fraction(val)
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad head entry {item!r}") from None
            pos += 1
    if pos < len(tokens):
        if tokens[pos] != "tail":
            raise ParseError(f"expected 'tail', found {tokens[pos]!r}")
        rest = tokens[pos + 1:]
        if len(rest) != 2 or rest[0] not in ("harmonic", "geometric"):
            raise ParseError("tail must be 'harmonic s@n' or 'geometric s,r@n'")
        spec = rest[1]
        body, at, start_s = spec.partition("@")
        try:
            start = int(start_s) if at else 1
            if rest[0] == "harmonic":
                tail = Tail.harmonic(Fraction(body), start)
            else:
                s, _, r = body.partition(",")
                if not r:
                    raise ValueError
                tail = Tail.geometric(Fraction(s), Fraction(r), start)
        except (ValueError, ZeroDivisionError, PreconditionError):
            raise ParseError(f"bad tail spec {spec!r}") from None
    elif not saw_head:
        raise ParseError(f"expected 'head' or 'tail', found {tokens[0]!r}")
    try:
        return SeqPoint.make(head, tail)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def format_point(p: SeqPoint) -> str:
    parts = []
    if p.head:
        parts.append("head " + ",".join(f"{i}={v}" for i, v in p.head))
    t = p.tail
    if t.kind == "harmonic":
        parts.append(f"tail harmonic {t.scale}@{t.start}")
    elif t.kind == "geometric":
        parts.append(f"tail geometric {t.scale},{t.ratio}@{t.start}")
    if not parts:
        parts.append("head")
    return " ".join(parts)
