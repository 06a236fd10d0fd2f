"""Binary messes: restriction-closed families of finite {0,1}-valued partial
functions that realise every finite domain.

A mess is either *extensional* (an explicit member set) or *intensional*
(a pure membership predicate over a ground set).  Intensional messes are what
the poset-to-mess reduction produces; they can be materialised when the
ground set is small.

Canonical member order: by domain, shortlex over ground indices, then by the
value vector read in ground order.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .errors import CapExceeded, CoverageGap, NotConsistent, NotRestrictionClosed, ParseError

MATERIALIZE_CAP = 12
CROSS_CHECK_CAP = 8


class PartialBinaryFunction(Mapping):
    """An immutable, hashable map from finitely many labels to 0/1.

    A total function on the ground set is simply one whose domain is the
    whole ground set.
    """

    __slots__ = ("_values", "_key")

    def __init__(self, values: Mapping | Iterable[tuple] = ()):
        items = dict(values)
        for label, bit in items.items():
            if bit not in (0, 1):
                raise ValueError(f"value for {label!r} must be 0 or 1, got {bit!r}")
        self._values = {label: int(bit) for label, bit in items.items()}
        self._key = frozenset(self._values.items())

    def __getitem__(self, label):
        return self._values[label]

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __hash__(self):
        return hash(self._key)

    def __eq__(self, other):
        if isinstance(other, PartialBinaryFunction):
            return self._key == other._key
        return Mapping.__eq__(self, other)

    def __repr__(self):
        body = ", ".join(f"{k!r}: {v}" for k, v in self._values.items())
        return f"PartialBinaryFunction({{{body}}})"

    @property
    def domain(self) -> frozenset:
        return frozenset(self._values)

    def restrict(self, labels: Iterable) -> "PartialBinaryFunction":
        keep = set(labels)
        return PartialBinaryFunction((k, v) for k, v in self._values.items() if k in keep)

    def extends(self, other: "PartialBinaryFunction") -> bool:
        """True iff ``self`` contains ``other`` as a set of pairs."""
        return other._key <= self._key

    def ones(self) -> frozenset:
        return frozenset(k for k, v in self._values.items() if v == 1)


TotalBinaryFunction = PartialBinaryFunction


def domains(ground: Sequence) -> Iterator[tuple]:
    """All subsets of ``ground`` in canonical (shortlex over index) order."""
    for size in range(len(ground) + 1):
        yield from itertools.combinations(ground, size)


def partial_functions(ground: Sequence) -> Iterator[PartialBinaryFunction]:
    """Every partial function on ``ground``, in canonical member order."""
    for dom in domains(ground):
        for values in itertools.product((0, 1), repeat=len(dom)):
            yield PartialBinaryFunction(zip(dom, values))


def total_functions(ground: Sequence) -> Iterator[PartialBinaryFunction]:
    for values in itertools.product((0, 1), repeat=len(ground)):
        yield PartialBinaryFunction(zip(ground, values))


class BinaryMess:
    """A binary mess over an ordered ground set.

    Construct through :func:`build_mess`, :func:`mess_from_cnf`, or
    :meth:`BinaryMess.intensional`.  The constructor itself does not validate.
    """

    def __init__(
        self,
        ground: Sequence[Hashable],
        members: Iterable[PartialBinaryFunction] | None = None,
        predicate: Callable[[PartialBinaryFunction], bool] | None = None,
        materialize_cap: int = MATERIALIZE_CAP,
    ):
        if (members is None) == (predicate is None):
            raise ValueError("give exactly one of members or predicate")
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground labels must be distinct")
        self._position = {x: i for i, x in enumerate(self.ground)}
        self.materialize_cap = materialize_cap
        self._predicate = predicate
        self._members = None
        if members is not None:
            self._members = frozenset(members)
            for m in self._members:
                if not m.domain <= set(self.ground):
                    raise ValueError(f"member {m!r} leaves the ground set")

    @classmethod
    def intensional(cls, ground, predicate, materialize_cap: int = MATERIALIZE_CAP) -> "BinaryMess":
        return cls(ground, predicate=predicate, materialize_cap=materialize_cap)

    @property
    def is_extensional(self) -> bool:
        return self._members is not None

    def sort_key(self, s: PartialBinaryFunction):
        idx = sorted(self._position[x] for x in s.domain)
        return (len(idx), idx, [s[self.ground[i]] for i in idx])

    def __contains__(self, s) -> bool:
        if not isinstance(s, PartialBinaryFunction):
            s = PartialBinaryFunction(s)
        if not s.domain <= self._position.keys():
            return False
        if self._members is not None:
            return s in self._members
        return bool(self._predicate(s))

    def __eq__(self, other):
        if not isinstance(other, BinaryMess):
            return NotImplemented
        return self.ground == other.ground and set(self.members()) == set(other.members())

    __hash__ = None

    def __repr__(self):
        kind = "extensional" if self.is_extensional else "intensional"
        return f"BinaryMess({list(self.ground)!r}, {kind})"

    def members(self) -> list[PartialBinaryFunction]:
        """Members in canonical order (materialises intensional messes)."""
        if self._members is not None:
            return sorted(self._members, key=self.sort_key)
        self._check_cap()
        return [s for s in partial_functions(self.ground) if self._predicate(s)]

    def __len__(self):
        return len(self.members())

    def materialize(self) -> "BinaryMess":
        if self._members is not None:
            return self
        return BinaryMess(self.ground, members=self.members(), materialize_cap=self.materialize_cap)

    def _check_cap(self):
        if len(self.ground) > self.materialize_cap:
            raise CapExceeded(
                f"ground set of {len(self.ground)} exceeds materialisation cap {self.materialize_cap}"
            )

    # -- search helpers -----------------------------------------------------

    def _extensions(self, labels: Sequence, base: PartialBinaryFunction | None = None):
        """Members with domain exactly ``labels`` (plus ``base``), by
        backtracking over ``labels``; prunes on non-membership, which is sound
        because the mess is closed under restriction."""
        base = dict(base or {})

        def walk(pos: int, current: dict):
            s = PartialBinaryFunction(current)
            if s not in self:
                return
            if pos == len(labels):
                yield s
                return
            for bit in (0, 1):
                current[labels[pos]] = bit
                yield from walk(pos + 1, current)
                del current[labels[pos]]

        if self._members is not None:
            target = set(labels) | set(base)
            found = [
                m for m in self._members if m.domain == target and all(m[k] == v for k, v in base.items())
            ]
            yield from sorted(found, key=self.sort_key)
        else:
            yield from walk(0, base)

    def member_on(self, labels: Iterable):
        """The canonically first member with the given domain, or None."""
        labels = sorted(labels, key=self._position.__getitem__)
        return next(iter(self._extensions(labels)), None)

    def coverage_gap(self):
        """The first domain (canonical order) with no member, or None."""
        if self._members is not None:
            present = {m.domain for m in self._members}
            for dom in domains(self.ground):
                if frozenset(dom) not in present:
                    return dom
            return None
        for dom in domains(self.ground):
            if self.member_on(dom) is None:
                return dom
        return None

    def missing_restriction(self):
        """A (member, restriction) pair violating restriction closure, or None."""
        for m in self.members():
            dom = sorted(m.domain, key=self._position.__getitem__)
            for sub in domains(dom):
                r = m.restrict(sub)
                if r not in self:
                    return m, r
        return None

    def validate(self) -> None:
        if self._members is not None:
            bad = self.missing_restriction()
            if bad is not None:
                raise NotRestrictionClosed(f"{bad[1]!r}, a restriction of {bad[0]!r}, is missing")
        gap = self.coverage_gap()
        if gap is not None:
            raise CoverageGap(gap)

    # -- consistency ----------------------------------------------------------

    def is_consistent(self, f: Mapping, exhaustive: bool = True) -> bool:
        """Every finite restriction of the total function ``f`` lies in the mess.

        With ``exhaustive=False`` only ``f`` itself is tested, which suffices
        once the mess is known to be restriction closed.
        """
        f = f if isinstance(f, PartialBinaryFunction) else PartialBinaryFunction(f)
        if f.domain != set(self.ground):
            return False
        if not exhaustive:
            return f in self
        return all(f.restrict(dom) in self for dom in domains(self.ground))

    def consistent_functions(self, cap: int = MATERIALIZE_CAP) -> list[PartialBinaryFunction]:
        """All total functions consistent with the mess, in canonical order.

        Extensional: the full-domain members, cross-checked against the
        all-restrictions definition when the ground set is small.
        Intensional: backtracking over the ground labels.

        An empty answer means the family is not a mess; that is reported as
        CoverageGap naming the first uncovered domain.
        """
        if self._members is not None:
            if len(self.ground) > cap:
                raise CapExceeded(f"ground set of {len(self.ground)} exceeds cap {cap}")
            full = set(self.ground)
            found = sorted((m for m in self._members if m.domain == full), key=self.sort_key)
        else:
            found = list(self._extensions(self.ground))
        if len(self.ground) <= CROSS_CHECK_CAP:
            by_definition = [f for f in total_functions(self.ground) if self.is_consistent(f)]
            assert set(by_definition) == set(found), "consistency characterisations disagree"
        if not found:
            gap = self.coverage_gap()
            raise CoverageGap(gap if gap is not None else self.ground)
        return found


def build_mess(
    ground: Sequence[Hashable],
    members: Iterable[Mapping],
    close: bool = True,
    materialize_cap: int = MATERIALIZE_CAP,
) -> BinaryMess:
    """Validated extensional mess.

    With ``close`` every restriction of every listed member is added first.
    """
    listed = [m if isinstance(m, PartialBinaryFunction) else PartialBinaryFunction(m) for m in members]
    if close:
        closed = set()
        for m in listed:
            for dom in domains(sorted(m.domain, key=list(ground).index)):
                closed.add(m.restrict(dom))
        listed = closed
    mess = BinaryMess(ground, members=listed, materialize_cap=materialize_cap)
    mess.validate()
    return mess


# -- CNF bridge ---------------------------------------------------------------


@dataclass(frozen=True)
class CNF:
    """Clauses as tuples of nonzero signed variable numbers 1..num_vars."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for c in self.clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range for {self.num_vars} variables")

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(range(1, self.num_vars + 1))

    def satisfied_by(self, assignment: Mapping) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)


def _cnf_predicate(clauses: Sequence[tuple[int, ...]]):
    prepared = [(frozenset(abs(l) for l in c), c) for c in clauses]

    def falsifies_nothing(s: PartialBinaryFunction) -> bool:
        dom = s.domain
        for vars_, clause in prepared:
            if vars_ <= dom and not any(s[abs(l)] == (l > 0) for l in clause):
                return False
        return True

    return falsifies_nothing


def mess_from_cnf(
    cnf: CNF | Sequence[Sequence[int]],
    num_vars: int | None = None,
    validate: bool = False,
    validate_cap: int = MATERIALIZE_CAP,
) -> BinaryMess:
    """Intensional mess of partial assignments falsifying no clause that they
    fully decide.

    The family is a mess exactly when every variable subset's induced clauses
    are satisfiable.  By default this is checked lazily (consistent_functions
    raises CoverageGap); ``validate=True`` checks every subset now.
    """
    if not isinstance(cnf, CNF):
        clauses = [tuple(c) for c in cnf]
        if num_vars is None:
            num_vars = max((abs(l) for c in clauses for l in c), default=0)
        cnf = CNF(num_vars, clauses)
    mess = BinaryMess.intensional(cnf.variables, _cnf_predicate(cnf.clauses))
    if validate:
        if len(cnf.variables) > validate_cap:
            raise CapExceeded(f"eager validation is capped at {validate_cap} variables")
        gap = mess.coverage_gap()
        if gap is not None:
            raise CoverageGap(gap)
    return mess


_HEADER = re.compile(r"^p\s+cnf\s+(\d+)\s+(\d+)\s*$")


def parse_dimacs(text: str) -> CNF:
    """Parse DIMACS CNF text.  Clauses may span lines; each ends with 0."""
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("%"):
            break
        if stripped.startswith("p"):
            m = _HEADER.match(stripped)
            if not m or num_vars is not None:
                raise ParseError("malformed or repeated problem line", lineno, 1)
            num_vars, num_clauses = int(m.group(1)), int(m.group(2))
            continue
        if num_vars is None:
            raise ParseError("clause before problem line", lineno, 1)
        col = 1
        for token in stripped.split():
            col = line.index(token, col - 1) + 1
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(f"bad literal {token!r}", lineno, col) from None
            if abs(lit) > num_vars:
                raise ParseError(f"literal {lit} exceeds {num_vars} variables", lineno, col)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
            col += len(token)
    if num_vars is None:
        raise ParseError("missing problem line")
    if current:
        clauses.append(tuple(current))
    if len(clauses) != num_clauses:
        raise ParseError(f"header promises {num_clauses} clauses, found {len(clauses)}")
    return CNF(num_vars, tuple(clauses))


def format_dimacs(cnf: CNF) -> str:
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    lines += [" ".join(map(str, c + (0,))) for c in cnf.clauses]
    return "\n".join(lines) + "\n"


def ensure_consistent(mess: BinaryMess, f: Mapping) -> PartialBinaryFunction:
    f = f if isinstance(f, PartialBinaryFunction) else PartialBinaryFunction(f)
    if not mess.is_consistent(f, exhaustive=len(mess.ground) <= CROSS_CHECK_CAP):
        raise NotConsistent(f"{f!r} is not consistent with the mess")
    return f
