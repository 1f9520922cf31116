"""Independent checks of coloring certificates, and the tightness harness on odd-hole blowups."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .blowup import blowup_omega, build_blowup, cycle_blowup, recognize_blowup
from .engine import Certificate
from .graph import Graph
from .oracles import exact_chromatic, max_clique_size
from .structure import find_triangle, has_even_hole, iter_holes

EXACT_OMEGA_CAP = 24
TIGHTNESS_CAP = 24


class MalformedCertificate(ValueError):
    pass


@dataclass
class VerificationReport:
    proper: bool
    within_bound: bool
    omega_confirmed: bool
    structural_omega: bool = False
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.proper and self.within_bound and self.omega_confirmed

    def to_json(self) -> dict:
        return {
            "proper": self.proper,
            "within_bound": self.within_bound,
            "omega_confirmed": self.omega_confirmed,
            "structural_omega": self.structural_omega,
            "details": list(self.details),
        }


def check_certificate(g: Graph, cert: Certificate) -> VerificationReport:
    """Re-check a certificate against ``g`` from scratch.

    Properness is a direct scan of the adjacency lists.  ω is recomputed by the
    exact oracle up to ``EXACT_OMEGA_CAP`` vertices and from the twin quotient
    beyond that (reported as ``structural_omega``).
    """
    colors = list(cert.coloring)
    if len(colors) != g.n:
        raise MalformedCertificate(f"certificate colors {len(colors)} vertices, graph has {g.n}")
    if any(not isinstance(c, int) or c < 1 for c in colors):
        raise MalformedCertificate("colors must be positive integers")
    details = []

    clashes = [(u, v) for u, nbrs in enumerate(g.adjacency_lists()) for v in nbrs if u < v and colors[u] == colors[v]]
    if clashes:
        details.append(f"{len(clashes)} monochromatic edges, first {clashes[0]}")

    structural = g.n > EXACT_OMEGA_CAP
    omega = blowup_omega(recognize_blowup(g)) if structural else max_clique_size(g).value
    p, q = cert.params.p, cert.params.q
    bound = (p * omega + 2 * q - 1) // (2 * q)
    used = len(set(colors))
    if used > bound:
        details.append(f"{used} colors used, bound is {bound}")
    if cert.omega != omega:
        details.append(f"certificate claims ω={cert.omega}, recomputed {omega}")
    if cert.used != used:
        details.append(f"certificate claims {cert.used} colors used, found {used}")
    return VerificationReport(
        proper=not clashes,
        within_bound=used <= bound,
        omega_confirmed=cert.omega == omega,
        structural_omega=structural,
        details=details,
    )


@dataclass(frozen=True)
class TightnessRow:
    q: int
    k: int
    n: int
    omega: int
    exact_chi: int
    bound: int

    @property
    def tight(self) -> bool:
        return self.exact_chi == self.bound

    def to_json(self) -> dict:
        return {"q": self.q, "k": self.k, "n": self.n, "omega": self.omega,
                "exact_chi": self.exact_chi, "bound": self.bound, "tight": self.tight}


@dataclass
class TightnessTable:
    rows: list[TightnessRow]
    truncated: bool = False

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows], "truncated": self.truncated}

    def to_tsv(self) -> str:
        cols = ["q", "k", "n", "omega", "exact_chi", "bound", "tight"]
        lines = ["\t".join(cols)]
        for r in self.rows:
            d = r.to_json()
            lines.append("\t".join(str(d[c]).lower() if c == "tight" else str(d[c]) for c in cols))
        if self.truncated:
            lines.append("# truncated")
        return "\n".join(lines) + "\n"


def tightness_table(q: int, k_max: int, cap: int = TIGHTNESS_CAP) -> TightnessTable:
    """Exact χ of the k-clique blowup of the (2q+1)-hole against ⌈(2q+1)ω/(2q)⌉, k = 1..k_max."""
    if q < 2:
        raise ValueError("q must be at least 2")
    rows = []
    length = 2 * q + 1
    for k in range(1, k_max + 1):
        if length * k > cap:
            return TightnessTable(rows, truncated=True)
        g, _ = cycle_blowup(length, k)
        omega = max_clique_size(g).value
        chi = exact_chromatic(g).value
        rows.append(TightnessRow(q, k, g.n, omega, chi, -(-length * omega // (2 * q))))
    return TightnessTable(rows)


# -- conjecture scan ----------------------------------------------------------

MultiplicityPolicy = Callable[[Graph], Iterable[Sequence[int]]]


def uniform_policy(k_max: int) -> MultiplicityPolicy:
    def policy(skeleton: Graph):
        for k in range(1, k_max + 1):
            yield [k] * skeleton.n
    return policy


@dataclass
class ScanReport:
    q: int
    scanned: int = 0
    skipped: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def summary(self) -> str:
        if self.violations:
            return "violation"
        return "no violation in scanned set"

    def to_json(self) -> dict:
        return {"q": self.q, "scanned": self.scanned, "skipped": self.skipped,
                "summary": self.summary, "violations": self.violations}


def conjecture_scan(
    q: int,
    corpus: Iterable[Graph],
    multiplicity_policy: Optional[MultiplicityPolicy] = None,
    budget: int = TIGHTNESS_CAP,
) -> ScanReport:
    """Compare exact χ with ⌈(2q+1)ω/(2q)⌉ on blowups of admissible skeletons.

    Skeletons must be triangle-free, even-hole-free, with every hole of length
    at least 2q+1; others are skipped.  Blowups with more than ``budget``
    vertices are skipped.  Only the scanned instances are reported on.
    """
    if q < 4:
        raise ValueError("the scan targets q >= 4")
    policy = multiplicity_policy or uniform_policy(2)
    report = ScanReport(q)
    for sk in corpus:
        if (find_triangle(sk) is not None or has_even_hole(sk) is not None
                or next(iter_holes(sk, 2 * q), None) is not None):
            report.skipped += 1
            continue
        for mult in policy(sk):
            if sum(mult) > budget:
                report.skipped += 1
                continue
            g, b = build_blowup(sk, mult)
            omega = blowup_omega(b)
            bound = -(-(2 * q + 1) * omega // (2 * q))
            res = exact_chromatic(g)
            report.scanned += 1
            if res.value > bound:
                report.violations.append({
                    "skeleton": sk.adjacency_lists(), "multiplicity": list(mult),
                    "graph": g.adjacency_lists(), "coloring": list(res.witness),
                    "chi": res.value, "omega": omega, "bound": bound,
                })
    return report

