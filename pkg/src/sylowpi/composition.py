"""Lifting D_pi from composition factors to composite groups.

D_pi passes through normal subgroups and quotients, so for a group given
by its composition-factor multiset the verdict is the conjunction over the
factors (cyclic factors pass trivially).  The sigma/tau split equivalence
additionally needs the split-Hall hypothesis H = H_sigma x H_tau, which is
not decidable from a factor multiset: it is carried as an explicit flag
and the verdict stays labeled conditional unless the flag was verified on
a concrete realization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime
from .catalog import SimpleGroupId, ensure_valid, parse_group
from .criterion import Verdict, decide_dpi_simple


@dataclass(frozen=True)
class CyclicFactor:
    p: int

    def __str__(self) -> str:
        return f"Cyclic({self.p})"

    def spec(self) -> str:
        return f"Cyclic:{self.p}"


Factor = SimpleGroupId | CyclicFactor


@dataclass(frozen=True)
class CompositionSpec:
    factors: tuple[Factor, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("composition spec needs at least one factor")
        for f in self.factors:
            if isinstance(f, CyclicFactor):
                if not is_prime(f.p):
                    raise ValueError(f"cyclic factor order {f.p} is not prime")
            else:
                ensure_valid(f)


@dataclass
class SplitHypothesis:
    sigma: frozenset[int]
    tau: frozenset[int]
    hall_split_assumed: bool
    verified: bool = False

    def __post_init__(self):
        if self.sigma & self.tau:
            raise ValueError(f"sigma and tau overlap: {sorted(self.sigma & self.tau)}")


@dataclass
class CompositeVerdict:
    dpi: bool
    pi: frozenset[int]
    trace: list[tuple[str, bool, str]]  # (factor, dpi, witness text)
    conditional: bool = False
    condition_note: str = ""


def parse_factors(text: str) -> CompositionSpec:
    """Parse a factor list like "Alt:5,Cyclic:7,Lie:A:2:7"."""
    factors: list[Factor] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk.startswith("Cyclic:"):
            factors.append(CyclicFactor(int(chunk.split(":", 1)[1])))
        else:
            factors.append(parse_group(chunk))
    return CompositionSpec(tuple(factors))


def decide_dpi_composite(spec: CompositionSpec, pi: frozenset[int]) -> CompositeVerdict:
    """D_pi for a group with the given composition factors."""
    trace = []
    dpi = True
    for f in spec.factors:
        if isinstance(f, CyclicFactor):
            trace.append((str(f), True, "cyclic factor (trivially D_pi)"))
            continue
        v: Verdict = decide_dpi_simple(f, pi)
        trace.append((str(f), v.dpi, v.witness_text()))
        dpi = dpi and v.dpi
    return CompositeVerdict(dpi, pi, trace)


def wielandt_split(spec: CompositionSpec, sigma: frozenset[int],
                   tau: frozenset[int], hyp: SplitHypothesis) -> CompositeVerdict:
    """D_(sigma u tau) as the conjunction of D_sigma and D_tau, valid under
    the split-Hall hypothesis H = H_sigma x H_tau."""
    if sigma & tau:
        raise ValueError(f"sigma and tau overlap: {sorted(sigma & tau)}")
    if hyp.sigma != sigma or hyp.tau != tau:
        raise ValueError("hypothesis does not match the requested split")
    left = decide_dpi_composite(spec, sigma)
    right = decide_dpi_composite(spec, tau)
    out = CompositeVerdict(left.dpi and right.dpi, sigma | tau, left.trace + right.trace)
    if not (hyp.hall_split_assumed and hyp.verified):
        out.conditional = True
        out.condition_note = ("conditional on hypothesis (1): "
                              "H = H_sigma x H_tau (asserted, not verified)")
    return out


def corollary_partition(spec: CompositionSpec, parts: list[frozenset[int]],
                        hyp: SplitHypothesis | None = None) -> CompositeVerdict:
    """D_pi as the conjunction of D_(pi_i) over a pairwise disjoint
    partition, under the hypothesis H = H_1 x ... x H_n."""
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            if a & b:
                raise ValueError(f"parts overlap: {sorted(a & b)}")
    pi = frozenset().union(*parts) if parts else frozenset()
    trace = []
    dpi = True
    for part in parts:
        sub = decide_dpi_composite(spec, part)
        trace.extend(sub.trace)
        dpi = dpi and sub.dpi
    out = CompositeVerdict(dpi, pi, trace)
    if hyp is None or not (hyp.hall_split_assumed and hyp.verified):
        out.conditional = True
        out.condition_note = ("conditional on hypothesis (1): "
                              "H = H_1 x ... x H_n (asserted, not verified)")
    return out
