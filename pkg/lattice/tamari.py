"""
The m-Tamari order: covering relation, posets, intervals and the
decomposition of Tamari intervals used by the functional equation
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from config import DEFAULT_VERTEX_CAP, MAX_ORDER_MATRIX_CELLS
from errors import InvalidInputError, LatticeViolation, ResourceCapExceeded, VerificationMismatch
from lattice.paths import (
    PathWord,
    ballot_to_mdyck,
    contacts,
    enumerate_paths,
    initial_rise,
)
from reports import CheckReport, IntervalRecord

logger = logging.getLogger(__name__)


def covering_successors(path: PathWord) -> Set[PathWord]:
    """Swap each east step a that precedes a north step b with the shortest
    translated m-ballot factor S starting at b: ...a S... becomes ...S a..."""
    if path.form != "ballot":
        raise InvalidInputError("covering successors are defined on ballot words")
    word, m = path.word, path.m
    out: Set[PathWord] = set()
    for i in range(len(word) - 1):
        if word[i] != "E" or word[i + 1] != "N":
            continue
        excess = 0
        end = i + 1
        for j in range(i + 1, len(word)):
            excess += m if word[j] == "N" else -1
            if excess == 0:
                end = j
                break
        factor = word[i + 1:end + 1]
        out.add(PathWord.ballot(word[:i] + factor + "E" + word[end + 1:], m))
    return out


@dataclass(frozen=True, eq=False)
class TamariPoset:
    """T_n^(m) with its Hasse diagram and order matrix; longest-chain
    lengths are computed one source at a time and kept"""

    m: int
    n: int
    vertices: Tuple[PathWord, ...]
    hasse: nx.DiGraph
    reach: np.ndarray
    rank: np.ndarray = field(repr=False)
    index: Dict[PathWord, int] = field(repr=False)
    chains: Dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    def index_of(self, path: PathWord) -> int:
        """Position of a path in the vertex list"""
        try:
            return self.index[path]
        except KeyError:
            raise InvalidInputError(f"Path '{path.word}' not found in T_{self.n}^({self.m})") from None

    @property
    def bottom(self) -> PathWord:
        """The path (N E^m)^n"""
        return PathWord.ballot(("N" + "E" * self.m) * self.n, self.m)

    @property
    def top(self) -> PathWord:
        """The path N^n E^(mn)"""
        return PathWord.ballot("N" * self.n + "E" * (self.m * self.n), self.m)

    @property
    def height(self) -> int:
        """Length of a longest chain from bottom to top"""
        return int(self.chain_lengths(self.index_of(self.bottom))[self.index_of(self.top)])

    def chain_lengths(self, source: int) -> np.ndarray:
        """Longest-chain lengths from one vertex, -1 off its upper set"""
        row = self.chains.get(source)
        if row is not None:
            return row
        row = np.full(len(self.vertices), -1, dtype=np.int16)
        row[source] = 0
        above = np.flatnonzero(self.reach[source])
        for node in above[np.argsort(self.rank[above])]:
            d = row[node] + 1
            for succ in self.hasse.successors(node):
                if row[succ] < d:
                    row[succ] = d
        row.setflags(write=False)
        self.chains[source] = row
        return row

    def covers(self) -> List[Tuple[PathWord, PathWord]]:
        """Hasse edges as path pairs, in vertex order"""
        return [(self.vertices[a], self.vertices[b]) for a, b in sorted(self.hasse.edges)]

    def stats(self) -> dict:
        """Summary numbers of the poset"""
        return {
            "m": self.m,
            "n": self.n,
            "vertices": len(self.vertices),
            "covers": self.hasse.number_of_edges(),
            "intervals": int(self.reach.sum()),
            "height": self.height,
        }


def build_poset(m: int, n: int, cap: int = DEFAULT_VERTEX_CAP) -> TamariPoset:
    """Build T_n^(m) from the covering relation"""
    vertices = enumerate_paths(m, n, cap)
    size = len(vertices)
    if size * size > MAX_ORDER_MATRIX_CELLS:
        raise ResourceCapExceeded(f"order matrix of T_{n}^({m})", size * size, MAX_ORDER_MATRIX_CELLS)
    index = {p: i for i, p in enumerate(vertices)}

    graph = nx.DiGraph()
    graph.add_nodes_from(range(size))
    for i, path in enumerate(vertices):
        for succ in covering_successors(path):
            graph.add_edge(i, index[succ])
    if not nx.is_directed_acyclic_graph(graph):
        raise VerificationMismatch("covering", f"T_{n}^({m}) covering graph has a cycle")

    reach = np.zeros((size, size), dtype=bool)
    np.fill_diagonal(reach, True)
    for i in range(size):
        for j in nx.descendants(graph, i):
            reach[i, j] = True
    reach.setflags(write=False)

    rank = np.empty(size, dtype=np.int64)
    rank[list(nx.topological_sort(graph))] = np.arange(size)

    logger.debug("built T_%d^(%d): %d vertices, %d covers", n, m, size, graph.number_of_edges())
    return TamariPoset(m=m, n=n, vertices=tuple(vertices), hasse=graph, reach=reach, rank=rank, index=index)


def leq(poset: TamariPoset, lower: PathWord, upper: PathWord) -> bool:
    """Order test"""
    return bool(poset.reach[poset.index_of(lower), poset.index_of(upper)])


def meet(poset: TamariPoset, first: PathWord, second: PathWord) -> PathWord:
    """Greatest lower bound"""
    i, j = poset.index_of(first), poset.index_of(second)
    below = np.flatnonzero(poset.reach[:, i] & poset.reach[:, j])
    maxima = [c for c in below if poset.reach[below, c].all()]
    if len(maxima) != 1:
        raise LatticeViolation("meet", f"{first.word} and {second.word} have {len(maxima)} greatest lower bounds")
    return poset.vertices[maxima[0]]


def join(poset: TamariPoset, first: PathWord, second: PathWord) -> PathWord:
    """Least upper bound"""
    i, j = poset.index_of(first), poset.index_of(second)
    above = np.flatnonzero(poset.reach[i, :] & poset.reach[j, :])
    minima = [c for c in above if poset.reach[c, above].all()]
    if len(minima) != 1:
        raise LatticeViolation("join", f"{first.word} and {second.word} have {len(minima)} least upper bounds")
    return poset.vertices[minima[0]]


def longest_chain(poset: TamariPoset, lower: PathWord, upper: PathWord) -> int:
    """Number of covering steps in a longest chain from lower to upper"""
    d = int(poset.chain_lengths(poset.index_of(lower))[poset.index_of(upper)])
    if d < 0:
        raise InvalidInputError(f"'{lower.word}' and '{upper.word}' are not comparable")
    return d


def check_lattice(poset: TamariPoset) -> CheckReport:
    """Exhaustive meet/join existence and uniqueness"""
    try:
        for p in poset.vertices:
            for q in poset.vertices:
                meet(poset, p, q)
                join(poset, p, q)
    except LatticeViolation as exc:
        return CheckReport.failed("lattice", poset.m, detail=str(exc))
    return CheckReport.passed("lattice", poset.m, detail=f"{len(poset.vertices) ** 2} pairs in T_{poset.n}^({poset.m})")


@dataclass(frozen=True)
class Interval:
    """A pair lower <= upper with c(lower), r(upper) and, when known, the distance"""

    lower: PathWord
    upper: PathWord
    contacts: int
    rise: int
    dist: Optional[int] = None

    @classmethod
    def of(cls, lower: PathWord, upper: PathWord, dist: Optional[int] = None) -> "Interval":
        """Fill in the path statistics"""
        return cls(lower=lower, upper=upper, contacts=contacts(lower), rise=initial_rise(upper), dist=dist)

    @property
    def size(self) -> int:
        """Size of the paths"""
        return self.upper.n

    def to_dict(self) -> dict:
        """Convert the interval to its JSON record"""
        return IntervalRecord(lower=self.lower.word, upper=self.upper.word, contacts=self.contacts,
                              rise=self.rise, dist=self.dist).model_dump()


def enumerate_intervals(poset: TamariPoset) -> List[Interval]:
    """All comparable pairs, ordered by (lower, upper) vertex position"""
    out: List[Interval] = []
    for i, j in zip(*np.nonzero(poset.reach)):
        out.append(Interval.of(poset.vertices[i], poset.vertices[j], int(poset.chain_lengths(i)[j])))
    return out


def interval_records(intervals: List[Interval]) -> List[dict]:
    """JSON list of intervals with their statistics"""
    return [interval.to_dict() for interval in intervals]


def _mdyck_as_ballot(path: PathWord) -> PathWord:
    """An m-Dyck path read as a 1-ballot path of size mn"""
    word = ballot_to_mdyck(path).word
    return PathWord.ballot(word.replace("u", "N").replace("d", "E"), 1)


def check_sublattice_embedding(m: int, n: int, cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """T_n^(m) is isomorphic, through the m-Dyck map, to the elements of T_{mn}
    lying above (u^m d^m)^n, with matching covers"""
    small = build_poset(m, n, cap)
    big = build_poset(1, m * n, cap)
    image = {p: _mdyck_as_ballot(p) for p in small.vertices}
    floor = PathWord.ballot(("N" * m + "E" * m) * n, 1)
    above = {big.vertices[j] for j in np.flatnonzero(big.reach[big.index_of(floor), :])}
    if set(image.values()) != above or len(above) != len(small.vertices):
        logger.info("image of T_%d^(%d) has %d elements, upper set has %d", n, m, len(set(image.values())), len(above))
        return False
    for p in small.vertices:
        for q in small.vertices:
            if leq(small, p, q) != leq(big, image[p], image[q]):
                logger.info("order differs on %s, %s", p.word, q.word)
                return False
    small_covers = {(image[a], image[b]) for a, b in small.covers()}
    big_covers = {(a, b) for a, b in big.covers() if a in above and b in above}
    return small_covers == big_covers


# -- Decomposition of intervals of T_n (Dyck form) -------------------------

def _dyck_word(path: PathWord) -> str:
    if path.m != 1:
        raise InvalidInputError("the decomposition acts on intervals of the classical Tamari lattice (m=1)")
    return path.word if path.form == "dyck" else path.word.replace("N", "u").replace("E", "d")


def _dyck_contacts(word: str) -> List[int]:
    positions = [0]
    height = 0
    for i, letter in enumerate(word, start=1):
        height += 1 if letter == "u" else -1
        if height == 0:
            positions.append(i)
    return positions


def _first_return(word: str) -> int:
    """Length of the prefix ending at the first return to the axis"""
    return _dyck_contacts(word)[1]


@dataclass(frozen=True)
class PointedInterval:
    """An interval whose lower path carries a distinguished contact"""

    interval: Interval
    point: int

    def __post_init__(self) -> None:
        if not 0 <= self.point < self.interval.contacts:
            raise InvalidInputError(f"point {self.point} is not a contact index of '{self.interval.lower.word}'")


def decompose_interval(interval: Interval) -> Tuple[PointedInterval, Interval]:
    """Split [u P1l d P1r P2, u Q1 d Q2] into ([P1l P1r, Q1] pointed between
    P1l and P1r, [P2, Q2]) where Q2 follows the first return of Q"""
    lower, upper = _dyck_word(interval.lower), _dyck_word(interval.upper)
    if not upper:
        raise InvalidInputError("an interval of size 0 has no decomposition")
    cut = _first_return(upper)
    q1, q2 = upper[1:cut - 1], upper[cut:]
    p1, p2 = lower[:len(lower) - len(q2)], lower[len(lower) - len(q2):]
    if _dyck_contacts(p1)[-1] != len(p1):
        raise VerificationMismatch("decomposition", f"'{lower}' does not split after {len(p1)} steps")
    split = _first_return(p1)
    p1l, p1r = p1[1:split - 1], p1[split:]
    first = Interval.of(PathWord.dyck(p1l + p1r, 1), PathWord.dyck(q1, 1))
    second = Interval.of(PathWord.dyck(p2, 1), PathWord.dyck(q2, 1))
    return PointedInterval(first, len(_dyck_contacts(p1l)) - 1), second


def recompose_interval(pointed: PointedInterval, second: Interval) -> Interval:
    """Inverse of decompose_interval"""
    p1, q1 = _dyck_word(pointed.interval.lower), _dyck_word(pointed.interval.upper)
    p2, q2 = _dyck_word(second.lower), _dyck_word(second.upper)
    cut = _dyck_contacts(p1)[pointed.point]
    lower = "u" + p1[:cut] + "d" + p1[cut:] + p2
    upper = "u" + q1 + "d" + q2
    return Interval.of(PathWord.dyck(lower, 1), PathWord.dyck(upper, 1))


def dyck_intervals(n: int, cap: int = DEFAULT_VERTEX_CAP) -> List[Interval]:
    """Intervals of T_n in Dyck form"""
    poset = build_poset(1, n, cap)
    return [Interval.of(ballot_to_mdyck(i.lower), ballot_to_mdyck(i.upper), i.dist)
            for i in enumerate_intervals(poset)]


def pointed_intervals(n: int) -> List[PointedInterval]:
    """Intervals of T_n with one of the contacts of the lower path distinguished"""
    return [PointedInterval(i, k) for i in dyck_intervals(n) for k in range(i.contacts)]


def _strip(interval: Interval) -> Tuple[str, str]:
    return _dyck_word(interval.lower), _dyck_word(interval.upper)


def check_decomposition_bijection(n: int, cap: int = DEFAULT_VERTEX_CAP) -> CheckReport:
    """Exhaustive check that decomposition is a bijection from intervals of
    size k onto pairs (pointed interval, interval) of total size k - 1, for k <= n"""
    intervals = {k: dyck_intervals(k, cap) for k in range(n + 1)}
    keys = {k: {_strip(i) for i in intervals[k]} for k in range(n + 1)}
    for size in range(1, n + 1):
        images = set()
        for interval in intervals[size]:
            pointed, second = decompose_interval(interval)
            if _strip(pointed.interval) not in keys[pointed.interval.size] or _strip(second) not in keys[second.size]:
                return CheckReport.failed("decomposition", 1, size, f"[{interval.lower}, {interval.upper}] splits outside the intervals")
            if _strip(recompose_interval(pointed, second)) != _strip(interval):
                return CheckReport.failed("decomposition", 1, size, f"[{interval.lower}, {interval.upper}] does not recompose")
            if interval.contacts != pointed.interval.contacts - pointed.point + second.contacts:
                return CheckReport.failed("decomposition", 1, size, f"contact count breaks on [{interval.lower}, {interval.upper}]")
            if interval.rise != pointed.interval.rise + 1:
                return CheckReport.failed("decomposition", 1, size, f"initial rise breaks on [{interval.lower}, {interval.upper}]")
            images.add((_strip(pointed.interval), pointed.point, _strip(second)))
        pairs = sum(sum(i.contacts for i in intervals[k]) * len(intervals[size - 1 - k]) for k in range(size))
        if len(images) != len(intervals[size]) or len(images) != pairs:
            return CheckReport.failed("decomposition", 1, size,
                                      f"{len(intervals[size])} intervals map to {len(images)} of {pairs} pairs")
    return CheckReport.passed("decomposition", 1, n, f"bijective for sizes 1..{n}")


# -- DOT export ----------------------------------------------------------

_DOT_VERTEX = re.compile(r'^\s*"([^"]*)"\s*;\s*$')
_DOT_EDGE = re.compile(r'^\s*"([^"]*)"\s*->\s*"([^"]*)"\s*;\s*$')


def to_dot(poset: TamariPoset) -> str:
    """Hasse diagram in DOT, vertices in lexicographic order"""
    lines = [f'digraph "T_{poset.n}^({poset.m})" {{']
    lines += [f'  "{p.word}";' for p in poset.vertices]
    lines += [f'  "{a.word}" -> "{b.word}";' for a, b in poset.covers()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> Tuple[List[str], List[Tuple[str, str]]]:
    """Read back the vertices and edges written by to_dot"""
    lines = text.strip().splitlines()
    if not lines or not lines[0].startswith("digraph") or lines[-1].strip() != "}":
        raise InvalidInputError("not a digraph")
    vertices: List[str] = []
    edges: List[Tuple[str, str]] = []
    for line in lines[1:-1]:
        edge = _DOT_EDGE.match(line)
        if edge:
            edges.append((edge.group(1), edge.group(2)))
            continue
        vertex = _DOT_VERTEX.match(line)
        if not vertex:
            raise InvalidInputError(f"unreadable DOT line: {line!r}")
        vertices.append(vertex.group(1))
    return vertices, edges
