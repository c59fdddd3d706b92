"""Unordered majorization on parity vectors.

The generating relation swaps one adjacent "01" into "10"; its transitive
closure coincides with prefix-sum dominance between words of equal length and
equal weight.  Both views are implemented: `compare` decides the order via
prefix sums, `covers` yields the generator edges, and `hasse` materializes the
diagram for one (length, weight) class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .dynamics import Formalism, trajectory, parity_vector
from .vectors import ParityVector

HASSE_DEFAULT_CAP = 16


class PosetRelation(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def compare(v: ParityVector, w: ParityVector) -> PosetRelation:
    """Decide the order between two parity vectors.

    Words of different length or different weight are never comparable.
    Otherwise v precedes w exactly when every proper prefix sum of v is <=
    the corresponding prefix sum of w.
    """
    if len(v) != len(w) or v.q != w.q:
        return PosetRelation.INCOMPARABLE
    if v.bits == w.bits:
        return PosetRelation.EQUAL
    le = True   # v could precede w
    ge = True   # w could precede v
    a = b = 0
    for x, y in zip(v.bits[:-1], w.bits[:-1]):
        a += x
        b += y
        if a > b:
            le = False
        elif a < b:
            ge = False
        if not le and not ge:
            return PosetRelation.INCOMPARABLE
    if le:
        return PosetRelation.LESS
    if ge:
        return PosetRelation.GREATER
    return PosetRelation.INCOMPARABLE


def covers(v: ParityVector) -> set[ParityVector]:
    """Upper covers: every word obtained by one adjacent 01 -> 10 swap."""
    out = set()
    bits = v.bits
    for i in range(len(bits) - 1):
        if bits[i] == 0 and bits[i + 1] == 1:
            swapped = bits[:i] + (1, 0) + bits[i + 2:]
            out.add(ParityVector(swapped))
    return out


def all_vectors(j: int, q: int) -> list[ParityVector]:
    """All words of length j with q ones, in lexicographic order."""
    if not 0 <= q <= j:
        raise ValueError("need 0 <= q <= j")
    out = []
    for ones in combinations(range(j), q):
        bits = [0] * j
        for i in ones:
            bits[i] = 1
        out.append(ParityVector(bits))
    out.sort(key=lambda v: v.bits)
    return out


@dataclass
class HasseDiagram:
    """Cover graph of one (length, weight) class."""

    j: int
    q: int
    nodes: list[ParityVector]
    edges: list[tuple[int, int]] = field(default_factory=list)  # (lower, upper) node indices

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in self.nodes]
        for a, b in self.edges:
            succ[a].append(b)
        return succ

    def sources(self) -> list[ParityVector]:
        has_in = set(b for _, b in self.edges)
        return [v for i, v in enumerate(self.nodes) if i not in has_in]

    def sinks(self) -> list[ParityVector]:
        has_out = set(a for a, _ in self.edges)
        return [v for i, v in enumerate(self.nodes) if i not in has_out]

    def is_acyclic(self) -> bool:
        indeg = [0] * len(self.nodes)
        succ = self.successors()
        for a, b in self.edges:
            indeg[b] += 1
        queue = [i for i, d in enumerate(indeg) if d == 0]
        seen = 0
        while queue:
            i = queue.pop()
            seen += 1
            for k in succ[i]:
                indeg[k] -= 1
                if indeg[k] == 0:
                    queue.append(k)
        return seen == len(self.nodes)

    def to_dot(self, name: str = "hasse") -> str:
        """Graph-description text: one node per vector, one edge per cover."""
        lines = [f'digraph {name} {{']
        lines.append('  rankdir=BT;')
        for i, v in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{v.run_length()}"];')
        for a, b in sorted(self.edges):
            lines.append(f'  n{a} -> n{b};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse(j: int, q: int, cap: int = HASSE_DEFAULT_CAP) -> HasseDiagram:
    """Hasse diagram over all C(j, q) vectors; j capped (edge counts explode)."""
    if j > cap:
        raise ValueError(f"length {j} exceeds cap {cap}")
    nodes = all_vectors(j, q)
    index = {v: i for i, v in enumerate(nodes)}
    edges = []
    for i, v in enumerate(nodes):
        for w in covers(v):
            edges.append((i, index[w]))
    return HasseDiagram(j, q, nodes, sorted(edges))


@dataclass
class MonotonicityReport:
    j: int
    pairs_checked: int
    violations: list[tuple[int, int]]  # residue pairs (m, n) with V(m) < V(n) but E(m) <= E(n)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_remainder_monotonicity(j: int, formalism: Formalism = Formalism.SHORTCUT,
                                 pairwise_cap: int = 10) -> MonotonicityReport:
    """Strictly preceding parity vectors must have strictly larger remainders.

    Brute force over all residues mod 2**j.  Up to `pairwise_cap` every
    comparable pair is tested; beyond it only cover pairs are (which imply the
    full statement by transitivity, keeping larger j affordable).
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if j > 16:
        raise ValueError("j > 16 not supported (2**j residues)")
    by_vector: dict[tuple[int, ...], tuple[int, int]] = {}
    groups: dict[int, list[tuple[int, ...]]] = {}
    for n in range(1, 2**j + 1):
        t = trajectory(n, j, formalism)
        v = parity_vector(n, j, formalism)
        by_vector[v.bits] = (n, t.remainder().num)  # common denominator 2**j
        groups.setdefault(v.q, []).append(v.bits)

    violations = []
    checked = 0
    if j <= pairwise_cap:
        for q, members in groups.items():
            for a_bits in members:
                va = ParityVector(a_bits)
                for b_bits in members:
                    if a_bits == b_bits:
                        continue
                    rel = compare(va, ParityVector(b_bits))
                    if rel is PosetRelation.LESS:
                        checked += 1
                        if not by_vector[a_bits][1] > by_vector[b_bits][1]:
                            violations.append((by_vector[a_bits][0], by_vector[b_bits][0]))
    else:
        for bits, (m, num_m) in by_vector.items():
            for w in covers(ParityVector(bits)):
                checked += 1
                if not num_m > by_vector[w.bits][1]:
                    violations.append((m, by_vector[w.bits][0]))
    return MonotonicityReport(j, checked, violations)
