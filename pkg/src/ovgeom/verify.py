"""Mechanical reduction verification against the brute-force oracle.

Each reduction kind transforms an instance into a geometric problem, solves
that problem with its native solver, converts the geometric answer back to a
yes/no decision, and compares against the pair-scan oracle.  The harness
never assumes a reduction is correct; it reports what actually happened.

Kinds
-----
euclid-embed    per-pair squared-distance sweep over the point embedding.
ov-to-bcp       bichromatic closest pair on the point embedding.
frechet-embed   per-pair curve-distance decisions over the curve embedding.
ov-to-frechet   single curve-pair decision on the OR-gadget assembly.
unbalanced-nn   nearest-neighbor structure on the embedded A side, queried
                with every embedded B point.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass

from .core import OvInstance, squared_euclidean
from .embed import embed_euclid, embed_frechet
from .frechet import frechet_decide
from .formats import format_instance
from .gadgets import default_gadget_config, or_gadget
from .generate import GenSpec, generate
from .ov import ov_decide
from .proximity import bcp_euclid, nn_build, nn_query

__all__ = [
    "KINDS",
    "ReductionReport",
    "VerifyCaps",
    "agreement_table",
    "instance_id",
    "report_csv",
    "run_verify",
    "verify_reduction",
]

KINDS = (
    "euclid-embed",
    "ov-to-bcp",
    "frechet-embed",
    "ov-to-frechet",
    "unbalanced-nn",
)

_VERIFY_FAMILIES = ("uniform-random", "planted-orthogonal", "no-orthogonal")


@dataclass(frozen=True)
class VerifyCaps:
    """Instance-size limits keeping every oracle run desk-scale."""

    max_n: int = 64
    max_d: int = 16

    def check(self, inst: OvInstance) -> None:
        if inst.n_a > self.max_n or inst.n_b > self.max_n:
            raise ValueError(
                f"instance sides {inst.n_a}x{inst.n_b} exceed cap {self.max_n}"
            )
        if inst.d > self.max_d:
            raise ValueError(f"dimension {inst.d} exceeds cap {self.max_d}")


@dataclass(frozen=True)
class ReductionReport:
    """Outcome of checking one reduction on one instance."""

    kind: str
    instance_id: str
    n_a: int
    n_b: int
    d: int
    oracle_answer: bool
    reduced_answer: bool
    oracle_ns: int
    reduced_ns: int

    @property
    def agree(self) -> bool:
        return self.oracle_answer == self.reduced_answer


def instance_id(inst: OvInstance) -> str:
    """Content hash of the canonical text serialization (12 hex chars)."""
    return hashlib.sha256(format_instance(inst).encode()).hexdigest()[:12]


def _solve_euclid_pairs(inst: OvInstance) -> bool:
    emb = embed_euclid(inst)
    return any(
        squared_euclidean(p, q) <= emb.tau_sq
        for p in emb.points_a
        for q in emb.points_b
    )


def _solve_bcp(inst: OvInstance) -> bool:
    emb = embed_euclid(inst)
    return bcp_euclid(emb.points_a, emb.points_b).sq_value <= emb.tau_sq


def _solve_frechet_pairs(inst: OvInstance) -> bool:
    emb = embed_frechet(inst)
    return any(
        frechet_decide(p, q, emb.tau_sq)
        for p in emb.curves_a
        for q in emb.curves_b
    )


def _solve_or_gadget(inst: OvInstance) -> bool:
    out = or_gadget(inst, default_gadget_config())
    return frechet_decide(out.curve_a, out.curve_b, out.tau_sq)


def _solve_unbalanced_nn(inst: OvInstance) -> bool:
    emb = embed_euclid(inst)
    index = nn_build(emb.points_a, "euclid-kdtree")
    return any(nn_query(index, q)[1] <= emb.tau_sq for q in emb.points_b)


_SOLVERS = {
    "euclid-embed": _solve_euclid_pairs,
    "ov-to-bcp": _solve_bcp,
    "frechet-embed": _solve_frechet_pairs,
    "ov-to-frechet": _solve_or_gadget,
    "unbalanced-nn": _solve_unbalanced_nn,
}


def verify_reduction(
    kind: str,
    inst: OvInstance,
    caps: VerifyCaps | None = None,
    _flip: bool = False,
) -> ReductionReport:
    """Run one reduction and compare its decision with the pair-scan oracle.

    ``_flip`` inverts the reduced answer; it exists so tests can prove the
    harness actually catches disagreements.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown reduction kind {kind!r}; pick from {KINDS}")
    caps = caps or VerifyCaps()
    caps.check(inst)

    t0 = time.perf_counter_ns()
    oracle_answer = ov_decide(inst) is not None
    t1 = time.perf_counter_ns()
    reduced_answer = _SOLVERS[kind](inst)
    t2 = time.perf_counter_ns()
    if _flip:
        reduced_answer = not reduced_answer

    return ReductionReport(
        kind=kind,
        instance_id=instance_id(inst),
        n_a=inst.n_a,
        n_b=inst.n_b,
        d=inst.d,
        oracle_answer=oracle_answer,
        reduced_answer=reduced_answer,
        oracle_ns=t1 - t0,
        reduced_ns=t2 - t1,
    )


def run_verify(
    kinds=KINDS,
    trials: int = 100,
    max_n: int = 8,
    max_d: int = 6,
    seed: int = 0,
    caps: VerifyCaps | None = None,
    corrupt_kind: str | None = None,
) -> list[ReductionReport]:
    """Sweep random instances through every requested kind.

    Families cycle uniform-random / planted-orthogonal / no-orthogonal so
    both answers are exercised.  ``corrupt_kind`` flips that kind's reduced
    answers (testing hook).  Deterministic in ``seed``.
    """
    kinds = tuple(kinds)
    for kind in kinds:
        if kind not in KINDS:
            raise ValueError(f"unknown reduction kind {kind!r}; pick from {KINDS}")
    if trials < 0:
        raise ValueError(f"trials must be >= 0, got {trials}")
    rng = random.Random(f"{seed}:verify-sweep")
    reports: list[ReductionReport] = []
    for trial in range(trials):
        spec = GenSpec(
            family=_VERIFY_FAMILIES[trial % len(_VERIFY_FAMILIES)],
            n=rng.randint(1, max_n),
            d=rng.randint(1, max_d),
            seed=rng.randrange(2**32),
        )
        inst = generate(spec)
        for kind in kinds:
            reports.append(
                verify_reduction(kind, inst, caps=caps, _flip=(kind == corrupt_kind))
            )
    return reports


def agreement_table(reports: list[ReductionReport]) -> str:
    """Per-kind agreement counts, one aligned row per kind (input order)."""
    order: list[str] = []
    counts: dict[str, list[int]] = {}
    for rep in reports:
        if rep.kind not in counts:
            order.append(rep.kind)
            counts[rep.kind] = [0, 0]
        counts[rep.kind][0 if rep.agree else 1] += 1
    lines = [f"{'kind':<16} {'trials':>6} {'agree':>6} {'disagree':>8}"]
    for kind in order:
        ok, bad = counts[kind]
        lines.append(f"{kind:<16} {ok + bad:>6} {ok:>6} {bad:>8}")
    return "\n".join(lines)


def report_csv(reports: list[ReductionReport]) -> str:
    """Full per-instance report as CSV (one row per report)."""
    lines = ["kind,instance_id,n_a,n_b,d,oracle,reduced,agree,oracle_ns,reduced_ns"]
    for r in reports:
        lines.append(
            f"{r.kind},{r.instance_id},{r.n_a},{r.n_b},{r.d},"
            f"{int(r.oracle_answer)},{int(r.reduced_answer)},{int(r.agree)},"
            f"{r.oracle_ns},{r.reduced_ns}"
        )
    return "\n".join(lines) + "\n"
