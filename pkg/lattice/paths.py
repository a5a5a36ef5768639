"""
m-ballot paths, their m-Dyck images, labellings and parking functions
"""
import logging
import re
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial, prod
from typing import Dict, Iterator, List, Literal, Optional, Sequence, Tuple

from typing_extensions import Self

from config import DEFAULT_VERTEX_CAP
from errors import InvalidInputError, ResourceCapExceeded
from reports import LabellingRecord, PathRecord

logger = logging.getLogger(__name__)

Form = Literal["ballot", "dyck"]

_UP = {"ballot": "N", "dyck": "u"}
_DOWN = {"ballot": "E", "dyck": "d"}
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


@dataclass(frozen=True)
class PathWord:
    """A step word stored as a bit sequence (bit i set when step i goes up)"""

    m: int
    bits: int
    length: int
    form: Form = "ballot"

    @classmethod
    def ballot(cls, word: str, m: int) -> Self:
        """Parse and validate an m-ballot path written with N/E"""
        if not is_valid_ballot(word, m):
            raise InvalidInputError(f"'{word}' is not a {m}-ballot path")
        return cls(m=m, bits=_pack(word, "N"), length=len(word), form="ballot")

    @classmethod
    def dyck(cls, word: str, m: int) -> Self:
        """Parse and validate an m-Dyck path written with u/d"""
        _check_mdyck(word, m)
        return cls(m=m, bits=_pack(word, "u"), length=len(word), form="dyck")

    @classmethod
    def parse(cls, text: str, m: int) -> Self:
        """Parse either textual form, chosen by alphabet"""
        text = text.strip()
        if set(text) <= {"N", "E"}:
            return cls.ballot(text, m)
        if set(text) <= {"u", "d"}:
            return cls.dyck(text, m)
        raise InvalidInputError(f"'{text}' mixes alphabets or uses unknown letters")

    @property
    def steps(self) -> Tuple[bool, ...]:
        """Up (True) / down (False) steps in order"""
        return tuple(bool(self.bits >> i & 1) for i in range(self.length))

    @property
    def word(self) -> str:
        """Canonical text of the path"""
        up, down = _UP[self.form], _DOWN[self.form]
        return "".join(up if s else down for s in self.steps)

    @property
    def n(self) -> int:
        """Size: north steps of a ballot path, blocks of an m-Dyck path"""
        ups = bin(self.bits).count("1")
        return ups if self.form == "ballot" else ups // self.m

    def to_dict(self) -> dict:
        """Convert the path to its JSON record"""
        return PathRecord(m=self.m, n=self.n, word=self.word, form=self.form).model_dump()

    @classmethod
    def from_dict(cls, data: dict) -> Self:
        """Create a path from its JSON record"""
        record = PathRecord.model_validate(data)
        path = cls.ballot(record.word, record.m) if record.form == "ballot" else cls.dyck(record.word, record.m)
        if path.n != record.n:
            raise InvalidInputError(f"record says n={record.n} but '{record.word}' has size {path.n}")
        return path

    def __str__(self) -> str:
        return self.word


def _pack(word: str, up: str) -> int:
    bits = 0
    for i, letter in enumerate(word):
        if letter == up:
            bits |= 1 << i
    return bits


def _check_mdyck(word: str, m: int) -> None:
    if m < 1:
        raise InvalidInputError("m must be positive")
    if not set(word) <= {"u", "d"}:
        raise InvalidInputError(f"'{word}' is not written with u/d")
    height = 0
    for letter in word:
        height += 1 if letter == "u" else -1
        if height < 0:
            raise InvalidInputError(f"'{word}' goes below the axis")
    if height != 0:
        raise InvalidInputError(f"'{word}' is unbalanced")
    for run in _runs(word, "u"):
        if run % m:
            raise InvalidInputError(f"'{word}' has an ascent of length {run}, not a multiple of m={m}")


def _runs(word: str, letter: str) -> List[int]:
    """Lengths of the maximal runs of a letter"""
    runs: List[int] = []
    current = 0
    for ch in word:
        if ch == letter:
            current += 1
        elif current:
            runs.append(current)
            current = 0
    if current:
        runs.append(current)
    return runs


def is_valid_ballot(word: str, m: int) -> bool:
    """True iff the word is an m-ballot path"""
    if m < 1 or not set(word) <= {"N", "E"}:
        return False
    north = east = 0
    for letter in word:
        if letter == "N":
            north += 1
        else:
            east += 1
            if east > m * north:
                return False
    return east == m * north


def _as_ballot(path: PathWord) -> PathWord:
    return path if path.form == "ballot" else mdyck_to_ballot(path)


def ballot_to_mdyck(path: PathWord) -> PathWord:
    """Duplicate every north step m times and rotate"""
    if path.form != "ballot":
        raise InvalidInputError("expected a ballot path")
    word = "".join("u" * path.m if s else "d" for s in path.steps)
    return PathWord(m=path.m, bits=_pack(word, "u"), length=len(word), form="dyck")


def mdyck_to_ballot(path: PathWord) -> PathWord:
    """Collapse every block of m up steps to one north step"""
    if path.form != "dyck":
        raise InvalidInputError("expected an m-Dyck path")
    word = path.word
    _check_mdyck(word, path.m)
    ballot = word.replace("u" * path.m, "N").replace("d", "E")
    return PathWord(m=path.m, bits=_pack(ballot, "N"), length=len(ballot), form="ballot")


def contacts(path: PathWord) -> int:
    """Vertices on the line x = my, origin included"""
    path = _as_ballot(path)
    count = 1
    excess = 0
    for up in path.steps:
        excess += path.m if up else -1
        if excess == 0:
            count += 1
    return count


def contact_positions(path: PathWord) -> List[int]:
    """Step indices (prefix lengths) of the contacts, origin included"""
    path = _as_ballot(path)
    positions = [0]
    excess = 0
    for i, up in enumerate(path.steps, start=1):
        excess += path.m if up else -1
        if excess == 0:
            positions.append(i)
    return positions


def initial_rise(path: PathWord) -> int:
    """Length of the initial run of north steps"""
    path = _as_ballot(path)
    rise = 0
    for up in path.steps:
        if not up:
            break
        rise += 1
    return rise


def ballot_number(m: int, n: int) -> int:
    """Number of m-ballot paths of size n"""
    return comb((m + 1) * n, n) // (m * n + 1)


def enumerate_paths(m: int, n: int, cap: int = DEFAULT_VERTEX_CAP) -> List[PathWord]:
    """All m-ballot paths of size n in lexicographic order"""
    if m < 1 or n < 0:
        raise InvalidInputError(f"need m >= 1 and n >= 0, got m={m}, n={n}")
    total = ballot_number(m, n)
    if total > cap:
        raise ResourceCapExceeded(f"T_{n}^({m})", total, cap)

    words: List[str] = []

    def extend(prefix: List[str], north: int, east: int) -> None:
        if north == n and east == m * n:
            words.append("".join(prefix))
            return
        # E sorts before N
        if east < m * north:
            prefix.append("E")
            extend(prefix, north, east + 1)
            prefix.pop()
        if north < n:
            prefix.append("N")
            extend(prefix, north + 1, east)
            prefix.pop()

    extend([], 0, 0)
    logger.debug("enumerated %d paths for m=%d n=%d", len(words), m, n)
    return [PathWord(m=m, bits=_pack(w, "N"), length=len(w)) for w in words]


def ascent_runs(path: PathWord) -> List[int]:
    """Lengths of maximal runs of north steps (blocks for m-Dyck paths)"""
    return _runs(_as_ballot(path).word, "N")


def labellings_count(path: PathWord) -> int:
    """n! over the product of the factorials of the ascent lengths"""
    return factorial(path.n) // prod(factorial(r) for r in ascent_runs(path))


@dataclass(frozen=True)
class Labelling:
    """A path whose north steps carry 1..n, increasing along each ascent"""

    path: PathWord
    labels: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.path.n
        if sorted(self.labels) != list(range(1, n + 1)):
            raise InvalidInputError(f"labels {list(self.labels)} are not a permutation of 1..{n}")
        position = 0
        for run in ascent_runs(self.path):
            chunk = self.labels[position:position + run]
            if any(a > b for a, b in zip(chunk, chunk[1:])):
                raise InvalidInputError(f"labels {list(chunk)} decrease along an ascent")
            position += run

    def pretty(self) -> str:
        """Subscripted text such as N₁EN₂E"""
        ballot = _as_ballot(self.path)
        out: List[str] = []
        labels = iter(self.labels)
        for up in ballot.steps:
            out.append("N" + str(next(labels)).translate(_SUBSCRIPTS) if up else "E")
        return "".join(out)

    def to_dict(self) -> dict:
        """Convert the labelling to its JSON record"""
        return LabellingRecord(m=self.path.m, n=self.path.n, word=self.path.word,
                               form=self.path.form, labels=list(self.labels)).model_dump()

    @classmethod
    def from_dict(cls, data: dict) -> Self:
        """Create a labelling from its JSON record"""
        record = LabellingRecord.model_validate(data)
        path = PathWord.from_dict(record.model_dump(exclude={"labels"}))
        return cls(path=path, labels=tuple(record.labels))


def enumerate_labellings(path: PathWord) -> List[Labelling]:
    """All labellings, by multinomial assignment of label sets to ascent runs"""
    runs = ascent_runs(path)
    out: List[Labelling] = []

    def assign(remaining: Tuple[int, ...], index: int, chosen: List[int]) -> None:
        if index == len(runs):
            out.append(Labelling(path=path, labels=tuple(chosen)))
            return
        for block in combinations(remaining, runs[index]):
            rest = tuple(x for x in remaining if x not in block)
            assign(rest, index + 1, chosen + list(block))

    assign(tuple(range(1, path.n + 1)), 0, [])
    return out


def labelled_paths(m: int, n: int, cap: int = DEFAULT_VERTEX_CAP) -> Iterator[Labelling]:
    """Every labelling of every m-ballot path of size n"""
    for path in enumerate_paths(m, n, cap):
        yield from enumerate_labellings(path)


@dataclass(frozen=True)
class ParkingFunction:
    """Values f(1..n): f(i) - 1 is the abscissa of the north step labelled i"""

    m: int
    values: Tuple[int, ...]

    @property
    def n(self) -> int:
        """Number of cars"""
        return len(self.values)

    def to_dict(self) -> dict:
        """Convert the parking function to a JSON-ready dict"""
        return {"m": self.m, "values": list(self.values)}


def is_parking_function(values: Sequence[int], m: int) -> bool:
    """The (1, m, ..., m) condition: the j-th smallest value is at most m(j-1) + 1"""
    if m < 1 or any(not isinstance(v, int) or v < 1 for v in values):
        return False
    return all(v <= m * j + 1 for j, v in enumerate(sorted(values)))


def to_parking_function(labelling: Labelling) -> ParkingFunction:
    """Read off the abscissa of each labelled north step"""
    ballot = _as_ballot(labelling.path)
    abscissa: Dict[int, int] = {}
    x = 0
    labels = iter(labelling.labels)
    for up in ballot.steps:
        if up:
            abscissa[next(labels)] = x
        else:
            x += 1
    return ParkingFunction(m=ballot.m, values=tuple(abscissa[i] + 1 for i in range(1, ballot.n + 1)))


def from_parking_function(values: Sequence[int], m: int, form: Optional[Form] = "ballot") -> Labelling:
    """Rebuild the labelled path whose north steps sit at abscissas f(i) - 1"""
    values = tuple(values)
    if not is_parking_function(values, m):
        raise InvalidInputError(f"{list(values)} is not a (1,{m},...,{m})-parking function")
    n = len(values)
    order = sorted(range(1, n + 1), key=lambda i: (values[i - 1], i))
    word: List[str] = []
    x = 0
    for label in order:
        target = values[label - 1] - 1
        word.extend("E" * (target - x))
        x = target
        word.append("N")
    word.extend("E" * (m * n - x))
    path = PathWord.ballot("".join(word), m)
    if form == "dyck":
        path = ballot_to_mdyck(path)
    return Labelling(path=path, labels=tuple(order))


_LABELLED_STEP = re.compile(r"N(\d+)|E")
_DIGITS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")


def parse_labelled(text: str, m: int) -> Labelling:
    """Read a labelled ballot path such as N₁EN₂E (or N1EN2E)"""
    text = text.strip().translate(_DIGITS)
    word: List[str] = []
    labels: List[int] = []
    position = 0
    for match in _LABELLED_STEP.finditer(text):
        if match.start() != position:
            break
        position = match.end()
        if match.group(1):
            word.append("N")
            labels.append(int(match.group(1)))
        else:
            word.append("E")
    if position != len(text) or not word:
        raise InvalidInputError(f"'{text}' is not a labelled path")
    return Labelling(path=PathWord.ballot("".join(word), m), labels=tuple(labels))
