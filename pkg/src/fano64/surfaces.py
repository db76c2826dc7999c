"""Base surfaces and their divisor arithmetic.

Two families cover everything this toolkit needs: the projective plane,
with Picard group Z.L and L^2 = 1, and the Hirzebruch surfaces F_n with
basis (h, l), where h is the minimal section and l the fiber:

    h^2 = -n,  h.l = 1,  l^2 = 0.

F_0 is P^1 x P^1 with h, l the two rulings.  The canonical class is -3L
on the plane and -(2h + (n+2)l) on F_n; the nef cone is spanned by L,
respectively by l and h + nl.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BaseSurface:
    """The projective plane (hirzebruch_n is None) or F_n (n >= 0)."""

    hirzebruch_n: int | None = None

    def __post_init__(self) -> None:
        n = self.hirzebruch_n
        if n is not None and (type(n) is not int or n < 0):
            raise ValueError(f"Hirzebruch index must be a non-negative int, got {n!r}")

    @classmethod
    def projective_plane(cls) -> "BaseSurface":
        return cls(None)

    @classmethod
    def hirzebruch(cls, n: int) -> "BaseSurface":
        return cls(n)

    @property
    def is_plane(self) -> bool:
        return self.hirzebruch_n is None

    @property
    def n(self) -> int:
        if self.hirzebruch_n is None:
            raise ValueError("the projective plane has no Hirzebruch index")
        return self.hirzebruch_n

    def __str__(self) -> str:
        return "P2" if self.is_plane else f"F{self.hirzebruch_n}"


P2 = BaseSurface.projective_plane()
F0 = BaseSurface.hirzebruch(0)
F1 = BaseSurface.hirzebruch(1)
F2 = BaseSurface.hirzebruch(2)
F3 = BaseSurface.hirzebruch(3)
F4 = BaseSurface.hirzebruch(4)


@dataclass(frozen=True)
class SurfaceClass:
    """A divisor class: a*L on the plane, a*h + b*l on F_n.

    Classes combine (add, intersect) only with classes on the same surface.
    """

    surface: BaseSurface
    a: int
    b: int = 0

    def __post_init__(self) -> None:
        if self.surface.is_plane and self.b != 0:
            raise ValueError("classes on the plane have a single coefficient")

    def _check_same_surface(self, other: "SurfaceClass") -> None:
        if self.surface != other.surface:
            raise ValueError(
                f"classes live on different surfaces: {self.surface} vs {other.surface}"
            )

    def __add__(self, other: "SurfaceClass") -> "SurfaceClass":
        self._check_same_surface(other)
        return SurfaceClass(self.surface, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "SurfaceClass") -> "SurfaceClass":
        self._check_same_surface(other)
        return SurfaceClass(self.surface, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "SurfaceClass":
        return SurfaceClass(self.surface, -self.a, -self.b)

    def __rmul__(self, k: int) -> "SurfaceClass":
        return SurfaceClass(self.surface, k * self.a, k * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        if self.surface.is_plane:
            if not self.a:
                return "0"
            return f"{'' if self.a == 1 else '-' if self.a == -1 else self.a}L"
        terms = []
        if self.a:
            terms.append(f"{'' if self.a == 1 else '-' if self.a == -1 else self.a}h")
        if self.b:
            sign = "+" if (self.b > 0 and terms) else ""
            terms.append(f"{sign}{'' if self.b == 1 else '-' if self.b == -1 else self.b}l")
        return "".join(terms) or "0"


def plane_class(a: int) -> SurfaceClass:
    return SurfaceClass(P2, a)


def ruled_class(n: int, a: int, b: int) -> SurfaceClass:
    return SurfaceClass(BaseSurface.hirzebruch(n), a, b)


def intersect(d1: SurfaceClass, d2: SurfaceClass) -> int:
    """The intersection form: L^2 = 1 on the plane; h^2 = -n, h.l = 1, l^2 = 0."""
    d1._check_same_surface(d2)
    s = d1.surface
    if s.is_plane:
        return d1.a * d2.a
    return -s.n * d1.a * d2.a + d1.a * d2.b + d1.b * d2.a


def canonical_class(s: BaseSurface) -> SurfaceClass:
    """K: -3L on the plane, -(2h + (n+2)l) on F_n."""
    if s.is_plane:
        return SurfaceClass(s, -3)
    return SurfaceClass(s, -2, -(s.n + 2))


def anticanonical_class(s: BaseSurface) -> SurfaceClass:
    return -canonical_class(s)


def k_squared(s: BaseSurface) -> int:
    """K^2: 9 for the plane, 8 for every F_n."""
    k = canonical_class(s)
    return intersect(k, k)


def nef_cone_generators(s: BaseSurface) -> tuple[SurfaceClass, ...]:
    """Extremal nef classes: (L) on the plane, (l, h + nl) on F_n."""
    if s.is_plane:
        return (SurfaceClass(s, 1),)
    return (SurfaceClass(s, 0, 1), SurfaceClass(s, 1, s.n))


def is_nef(d: SurfaceClass) -> bool:
    """Membership in the nef cone: a >= 0 on the plane; a >= 0 and b >= a*n on F_n."""
    if d.surface.is_plane:
        return d.a >= 0
    return d.a >= 0 and d.b >= d.a * d.surface.n
