"""Upper half-space isometries and displacement audits.

Points live in the upper half-space model: a boundary coordinate w in C
and a height t > 0.  Isometries are Moebius maps acting through the
Poincare extension.  The module provides axes of loxodromic maps, common
perpendiculars between disjoint axes, Jorgensen numbers by two routes,
Schottky pair sampling, and the audit that evaluates the displacement
hypothesis and the trace lower bound on a concrete pair of maps.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .optimize import solve_alpha
from .words import Word, enumerate_shift_words, word_to_str

INF = complex(math.inf, 0.0)


def _is_inf(z: complex) -> bool:
    return math.isinf(z.real) or math.isinf(z.imag)


def _same_boundary_point(p: complex, q: complex, tol: float = 1e-9) -> bool:
    if _is_inf(p) or _is_inf(q):
        return _is_inf(p) and _is_inf(q)
    return abs(p - q) <= tol * (1.0 + abs(p) + abs(q))


_SPLIT = 134217729.0  # 2**27 + 1, Veltkamp split constant


def _two_prod(a: float, b: float) -> tuple[float, float]:
    """Product and its exact rounding error."""
    p = a * b
    ah = _SPLIT * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLIT * b
    bh = bh - (bh - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def _prod_sum(terms: list[tuple[float, float, float]]) -> float:
    """Exactly rounded sum of signed products s * a * b."""
    parts: list[float] = []
    for s, a, b in terms:
        p, e = _two_prod(a, b)
        parts.append(s * p)
        parts.append(s * e)
    return math.fsum(parts)


@dataclass(frozen=True)
class H3Point:
    w: complex
    t: float

    def __post_init__(self):
        if not self.t > 0.0:
            raise ValueError("height must be positive")


def dist(p: H3Point, q: H3Point) -> float:
    num = abs(p.w - q.w) ** 2 + (p.t - q.t) ** 2
    return math.acosh(max(1.0 + num / (2.0 * p.t * q.t), 1.0))


@dataclass(frozen=True)
class MoebiusMap:
    a: complex
    b: complex
    c: complex
    d: complex
    # Determinant carried from construction.  Rounded entries of a long
    # product pin the determinant down only to (entry scale)^2 ulp, far
    # too loose for height computations, while determinants multiply
    # exactly along compositions; so compose and normalized thread it.
    det_known: complex | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.det() == 0:
            raise ValueError("singular coefficient matrix")

    def det(self) -> complex:
        if self.det_known is not None:
            return self.det_known
        a, b, c, d = complex(self.a), complex(self.b), complex(self.c), complex(self.d)
        re = _prod_sum(
            [(1, a.real, d.real), (-1, a.imag, d.imag),
             (-1, b.real, c.real), (1, b.imag, c.imag)]
        )
        im = _prod_sum(
            [(1, a.real, d.imag), (1, a.imag, d.real),
             (-1, b.real, c.imag), (-1, b.imag, c.real)]
        )
        return complex(re, im)

    def trace(self) -> complex:
        return self.a + self.d

    def normalized(self) -> "MoebiusMap":
        s = cmath.sqrt(self.det())
        return MoebiusMap(
            self.a / s, self.b / s, self.c / s, self.d / s, det_known=1.0 + 0.0j
        )

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """Map applying other first, then self."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            det_known=self.det() * other.det(),
        )

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a, det_known=self.det_known)

    def apply_boundary(self, z: complex) -> complex:
        if _is_inf(z):
            return INF if self.c == 0 else self.a / self.c
        den = self.c * z + self.d
        if den == 0:
            return INF
        return (self.a * z + self.b) / den

    def apply(self, p: H3Point) -> H3Point:
        m = self.normalized()
        cwd = m.c * p.w + m.d
        den = abs(cwd) ** 2 + abs(m.c) ** 2 * p.t**2
        w = ((m.a * p.w + m.b) * cwd.conjugate() + m.a * m.c.conjugate() * p.t**2) / den
        return H3Point(w, p.t / den)


IDENTITY_MAP = MoebiusMap(1, 0, 0, 1)


def classify(m: MoebiusMap, tol: float = 1e-9) -> str:
    nm = m.normalized()
    if abs(nm.b) < tol and abs(nm.c) < tol and abs(nm.a - nm.d) < tol:
        return "identity"
    trsq = m.trace() ** 2 / m.det()
    if abs(trsq.imag) < tol:
        x = trsq.real
        if x < -tol or x > 4.0 + tol:
            return "loxodromic"
        if abs(x - 4.0) < tol:
            return "parabolic"
        return "elliptic"
    return "loxodromic"


def loxodromic_data(m: MoebiusMap) -> dict:
    """Multiplier, translation length, and rotation angle of a loxodromic map.

    The multiplier u solves u + 1/u = tr with |u| > 1; the translation
    length is 2 log|u| and the rotation angle is arg u.
    """
    tr = m.normalized().trace()
    disc = cmath.sqrt(tr * tr - 4.0)
    u1 = (tr + disc) / 2.0
    u2 = (tr - disc) / 2.0
    u = u1 if abs(u1) >= abs(u2) else u2
    if abs(u) <= 1.0 + 1e-12:
        raise ValueError("map is not loxodromic")
    return {
        "u": u,
        "trace": tr,
        "length": 2.0 * math.log(abs(u)),
        "angle": cmath.phase(u),
    }


def fixed_points(m: MoebiusMap) -> tuple[complex, complex]:
    if m.c != 0:
        qa, qb, qc = m.c, m.d - m.a, -m.b
        disc = cmath.sqrt(qb * qb - 4.0 * qa * qc)
        top = -(qb + disc) if abs(qb + disc) >= abs(qb - disc) else -(qb - disc)
        if top == 0:
            r = cmath.sqrt(-qc / qa)
            return (r, -r)
        z1 = top / (2.0 * qa)
        z2 = (2.0 * qc) / top
        return (z1, z2)
    if m.a == m.d:
        return (INF, INF)
    return (m.b / (m.d - m.a), INF)


@dataclass(frozen=True)
class Geodesic:
    p: complex
    q: complex

    def __post_init__(self):
        if _same_boundary_point(self.p, self.q, tol=0.0):
            raise ValueError("endpoints coincide")


def axis(m: MoebiusMap) -> Geodesic:
    if classify(m) != "loxodromic":
        raise ValueError("axis requires a loxodromic map")
    p, q = fixed_points(m)
    return Geodesic(p, q)


def normalizing_map(g: Geodesic) -> MoebiusMap:
    """Map sending g to the vertical line over the origin: p -> 0, q -> inf."""
    if _is_inf(g.q):
        return MoebiusMap(1, -g.p, 0, 1)
    if _is_inf(g.p):
        return MoebiusMap(0, 1, 1, -g.q)
    return MoebiusMap(1, -g.p, 1, -g.q)


def dist_to_axis(g: Geodesic, p: H3Point) -> float:
    im = normalizing_map(g).apply(p)
    return math.asinh(abs(im.w) / im.t)


@dataclass(frozen=True)
class CommonPerpendicular:
    length: float
    midpoint: H3Point
    foot1: H3Point
    foot2: H3Point
    intersecting: bool


def common_perpendicular(
    g1: Geodesic, g2: Geodesic, tol: float = 1e-9
) -> CommonPerpendicular:
    """Shortest segment between two geodesics with distinct endpoints.

    Works in a frame where g1 spans -1, 1 and g2 spans -w, w with |w| >= 1:
    there the perpendicular is the vertical segment from height 1 to
    height |w| over the origin.  Raises ValueError when the geodesics
    share a boundary endpoint and no perpendicular exists.
    """
    for e1 in (g1.p, g1.q):
        for e2 in (g2.p, g2.q):
            if _same_boundary_point(e1, e2, tol):
                raise ValueError("axes share a boundary endpoint")
    frame = normalizing_map(g1)
    p = frame.apply_boundary(g2.p)
    q = frame.apply_boundary(g2.q)
    s = cmath.sqrt(p * q)
    straighten = MoebiusMap(1, s, -1, s)
    m = straighten.compose(frame)
    w = straighten.apply_boundary(p)
    if abs(w) < 1.0:
        m = MoebiusMap(0, 1, 1, 0).compose(m)
        w = 1.0 / w
    back = m.inverse()
    length = math.log(abs(w))
    return CommonPerpendicular(
        length=length,
        midpoint=back.apply(H3Point(0.0, math.sqrt(abs(w)))),
        foot1=back.apply(H3Point(0.0, 1.0)),
        foot2=back.apply(H3Point(0.0, abs(w))),
        intersecting=length < 1e-12,
    )


def displacement(m: MoebiusMap, p: H3Point) -> float:
    return dist(p, m.apply(p))


def word_to_matrix(word: Word, gens: dict[int, MoebiusMap]) -> MoebiusMap:
    m = IDENTITY_MAP
    for g, sign in word:
        m = m.compose(gens[g] if sign > 0 else gens[g].inverse())
    return m


def jorgensen_number(x: MoebiusMap, y: MoebiusMap) -> float:
    """|tr^2 x - 4| + |tr [x, y] - 2| with both maps at determinant one."""
    xn = x.normalized()
    yn = y.normalized()
    comm = xn.compose(yn).compose(xn.inverse()).compose(yn.inverse())
    return abs(xn.trace() ** 2 - 4.0) + abs(comm.trace() - 2.0)


def conjugate_frame_bc(x: MoebiusMap, y: MoebiusMap) -> complex:
    """Product of off-diagonal entries of y in the frame where x is diagonal."""
    frame = normalizing_map(axis(x))
    c = frame.compose(y).compose(frame.inverse()).normalized()
    return c.b * c.c


def jorgensen_via_frame(x: MoebiusMap, y: MoebiusMap) -> float:
    """Jorgensen number recomputed from the multiplier and the frame entries."""
    u = loxodromic_data(x)["u"]
    return abs(u - 1.0 / u) ** 2 * (1.0 + abs(conjugate_frame_bc(x, y)))


# ---------------------------------------------------------------------------
# Schottky sampling


def pairing_map(p: complex, p2: complex, c: complex) -> MoebiusMap:
    """Determinant-one map pairing the circle at p to the circle at p2.

    The isometric circles have centers p and p2 and radius 1/|c|; the
    exterior of the first maps onto the interior of the second.
    """
    return MoebiusMap(
        p2 * c, (-p * p2 * c * c - 1.0) / c, c, -p * c, det_known=1.0 + 0.0j
    )


def schottky_pair(rng: np.random.Generator) -> tuple[MoebiusMap, MoebiusMap]:
    """One random pair of loxodromic maps with well-separated circles.

    First map pairs circles on the real axis at +-s1, second pairs circles
    on the imaginary axis at +-i s2, with s in [3, 6] and radii in
    [1/2, 1]; the four circles are always disjoint, so the pair generates
    a free group of loxodromic maps.
    """
    s1, s2 = rng.uniform(3.0, 6.0, size=2)
    r = rng.uniform(0.5, 1.0, size=4)
    x = pairing_map(complex(s1), complex(-s1), complex(1.0 / math.sqrt(r[0] * r[1])))
    y = pairing_map(1j * s2, -1j * s2, complex(1.0 / math.sqrt(r[2] * r[3])))
    return x, y


def schottky_sample(count: int, seed: int = 0) -> list[tuple[MoebiusMap, MoebiusMap]]:
    rng = np.random.default_rng(seed)
    return [schottky_pair(rng) for _ in range(count)]


def isometric_circles(m: MoebiusMap) -> tuple[tuple[complex, float], tuple[complex, float]]:
    """Isometric circles of a map and its inverse as (center, radius) pairs."""
    if m.c == 0:
        raise ValueError("map fixes infinity, no isometric circle")
    r = math.sqrt(abs(m.det())) / abs(m.c)
    return ((-m.d / m.c, r), (m.a / m.c, r))


def schottky_certificate(x: MoebiusMap, y: MoebiusMap, margin: float = 0.0) -> bool:
    """True when the four isometric circles are pairwise disjoint.

    Disjoint circles give a ping-pong argument: the pair generates a free
    group whose nontrivial elements are all loxodromic, so every word audit
    on the pair is meaningful.
    """
    try:
        circles = [*isometric_circles(x), *isometric_circles(y)]
    except ValueError:
        return False
    for i in range(4):
        for j in range(i + 1, 4):
            (p, r), (q, s) = circles[i], circles[j]
            if abs(p - q) <= r + s + margin:
                return False
    return True


# ---------------------------------------------------------------------------
# the audit


def audit_pair(x: MoebiusMap, y: MoebiusMap, alpha: float | None = None) -> dict:
    """Evaluate the displacement hypothesis and the trace bound on a pair.

    z1 is the midpoint of the common perpendicular between the axis of x
    and the axis of y x y^-1; z2 the same with y^-1 x y.  The hypothesis
    asks that y and its two x-conjugates displace z2 by less than half the
    log of the optimal level, and that z2 is at least as close to the
    axis of y x y^-1 as z1 in displacement terms.  The bound compares the
    Jorgensen number against 2 sinh^2 of a quarter log level.  Raises
    ValueError when the axes involved share endpoints (commuting pairs).
    """
    if alpha is None:
        alpha = solve_alpha(2)
    half_log = 0.5 * math.log(alpha)
    threshold = 2.0 * math.sinh(0.25 * math.log(alpha)) ** 2
    if classify(x) != "loxodromic":
        raise ValueError("first map must be loxodromic")

    y_inv = y.inverse()
    conj_out = y.compose(x).compose(y_inv)
    conj_in = y_inv.compose(x).compose(y)
    ax = axis(x)
    perp1 = common_perpendicular(ax, axis(conj_out))
    perp2 = common_perpendicular(ax, axis(conj_in))
    z1 = perp1.midpoint
    z2 = perp2.midpoint

    d_eta = displacement(y, z2)
    d_in = displacement(x.inverse().compose(y).compose(x), z2)
    d_out = displacement(x.compose(y).compose(x.inverse()), z2)
    d_conj_out_z1 = displacement(conj_out, z1)
    d_conj_out_z2 = displacement(conj_out, z2)
    hypothesis = (
        max(d_eta, d_in, d_out) < half_log
        and d_conj_out_z2 <= d_conj_out_z1 + 1e-12
    )

    jorg = jorgensen_number(x, y)
    data = loxodromic_data(x)
    u = data["u"]
    bc = conjugate_frame_bc(x, y)
    trace_rhs = 0.5 * abs(u - 1.0 / u) ** 2 * (1.0 + abs(bc))
    trace_lhs = math.sinh(0.5 * displacement(x, z1)) ** 2

    shift_disp = {
        word_to_str(w): displacement(word_to_matrix(w, {1: x, 2: y}), z2)
        for w in enumerate_shift_words(2)
    }

    return {
        "alpha": alpha,
        "half_log": half_log,
        "threshold": threshold,
        "jorgensen": jorg,
        "jorgensen_frame": jorgensen_via_frame(x, y),
        "z1": [z1.w.real, z1.w.imag, z1.t],
        "z2": [z2.w.real, z2.w.imag, z2.t],
        "disp": {"eta": d_eta, "xiinv_eta_xi": d_in, "xi_eta_xiinv": d_out},
        "hypothesis": hypothesis,
        "bound": jorg >= threshold - 1e-12,
        "trace_lhs": trace_lhs,
        "trace_rhs": trace_rhs,
        "trace_ok": trace_lhs <= trace_rhs + 1e-9,
        "ordering_base_first": displacement(x, z2) < d_conj_out_z2,
        "midpoint_equidistance": abs(displacement(x, z1) - d_conj_out_z1),
        "perp_lengths": [perp1.length, perp2.length],
        "shift_disp": shift_disp,
        "shift_max": max(shift_disp.values()),
    }
