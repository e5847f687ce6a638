"""Elements of the finite reflection groups, at desk scale.

Classical elements are signed one-line permutations: entry i of the
tuple is w(i), with a minus sign when the i-th coordinate vector is
sent to minus a coordinate vector.  Type A elements carry no signs.
Exceptional elements are plain rational matrices on the ambient space
of their root system.  Both forms compose with ``@`` and the
convention is (u @ v)(x) = u(v(x)), so conjugation x^-1 w x applies x
first.

Containers of elements must stay within one form: equality across the
two forms falls back to the matrix, but hashing does not.  Every
public constructor in this module keeps one family in one form, so
the situation does not arise in practice.

The regular-element catalog lists, for each classical family and each
admissible order e, a canonical element whose zeta_e-eigenspace
escapes every reflecting hyperplane.  Admissibility is a divisibility
condition on e; the catalog refuses anything else by naming the
condition that failed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial, lcm

from .poly import Cyclotomic, kernel_basis
from .rootsys import LeviConfig, RootSystem, build_root_system, levi_config
from .symfun import Partition, partitions_of

DEFAULT_BOUND = 10 ** 7


def enumeration_bound() -> int:
    return int(os.environ.get("GREENCHAR_BOUND", DEFAULT_BOUND))


def _identity_matrix(n: int):
    return tuple(tuple(Fraction(1 if r == c else 0) for c in range(n))
                 for r in range(n))


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(n) if a[r][k])
                       for c in range(n)) for r in range(n))


def _matvec(m, v):
    n = len(m)
    return tuple(sum(m[r][c] * v[c] for c in range(n) if m[r][c]) for r in range(n))


def _invert(m):
    # Gauss-Jordan over the rationals; fine at rank <= 8.
    n = len(m)
    aug = [[Fraction(m[r][c]) for c in range(n)] + [Fraction(1 if c == r else 0)
           for c in range(n)] for r in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class WeylElt:
    """A group element, as a signed permutation, a matrix, or both."""

    __slots__ = ("perm", "_mat")

    def __init__(self, perm=None, mat=None):
        if perm is None and mat is None:
            raise ValueError("a WeylElt needs a permutation or a matrix")
        self.perm = tuple(perm) if perm is not None else None
        self._mat = tuple(tuple(row) for row in mat) if mat is not None else None
        if self.perm is not None:
            n = len(self.perm)
            if sorted(abs(v) for v in self.perm) != list(range(1, n + 1)):
                raise ValueError(f"not a signed permutation: {self.perm}")

    @property
    def n(self) -> int:
        return len(self.perm) if self.perm is not None else len(self._mat)

    @property
    def matrix(self):
        if self._mat is None:
            n = len(self.perm)
            rows = [[Fraction(0)] * n for _ in range(n)]
            for i, v in enumerate(self.perm):
                rows[abs(v) - 1][i] = Fraction(1 if v > 0 else -1)
            self._mat = tuple(tuple(r) for r in rows)
        return self._mat

    def __matmul__(self, other: "WeylElt") -> "WeylElt":
        if self.perm is not None and other.perm is not None:
            comp = []
            for v in other.perm:
                w = self.perm[abs(v) - 1]
                comp.append(w if v > 0 else -w)
            return WeylElt(perm=tuple(comp))
        return WeylElt(mat=_matmul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElt":
        if self.perm is not None:
            inv = [0] * len(self.perm)
            for i, v in enumerate(self.perm, start=1):
                inv[abs(v) - 1] = i if v > 0 else -i
            return WeylElt(perm=tuple(inv))
        return WeylElt(mat=_invert(self.matrix))

    def __pow__(self, k: int) -> "WeylElt":
        if k < 0:
            return self.inverse() ** (-k)
        result = identity_elt(self.n) if self.perm is not None \
            else WeylElt(mat=_identity_matrix(self.n))
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        if self.perm is not None:
            return all(v == i for i, v in enumerate(self.perm, start=1))
        return self._mat == _identity_matrix(self.n)

    def apply(self, vec):
        """Image of an ambient vector."""
        if self.perm is not None:
            out = [0] * len(self.perm)
            for i, v in enumerate(self.perm):
                out[abs(v) - 1] = vec[i] if v > 0 else -vec[i]
            return tuple(out)
        return _matvec(self.matrix, vec)

    def signed_cycles(self):
        """Orbits of the underlying permutation, each with its sign."""
        assert self.perm is not None, "cycle data needs the permutation form"
        seen = [False] * len(self.perm)
        cycles = []
        for start in range(1, len(self.perm) + 1):
            if seen[start - 1]:
                continue
            letters = []
            sign = 1
            cur = start
            while not seen[cur - 1]:
                seen[cur - 1] = True
                letters.append(cur)
                v = self.perm[cur - 1]
                if v < 0:
                    sign = -sign
                cur = abs(v)
            cycles.append((tuple(letters), sign))
        return cycles

    def cycle_type(self) -> Partition:
        lengths = sorted((len(c) for c, _ in self.signed_cycles()), reverse=True)
        return Partition(tuple(lengths))

    def signed_cycle_type(self):
        pos, neg = [], []
        for letters, sign in self.signed_cycles():
            (pos if sign > 0 else neg).append(len(letters))
        return (Partition(tuple(sorted(pos, reverse=True))),
                Partition(tuple(sorted(neg, reverse=True))))

    def order(self) -> int:
        if self.perm is not None:
            return lcm(*(len(c) * (1 if sign > 0 else 2)
                         for c, sign in self.signed_cycles()))
        k, m = 1, self
        while not m.is_identity():
            m = m @ self
            k += 1
        return k

    def support(self):
        assert self.perm is not None
        return frozenset(i for i, v in enumerate(self.perm, start=1) if v != i)

    def __eq__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        if self.perm is not None and other.perm is not None:
            return self.perm == other.perm
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.perm) if self.perm is not None else hash(self._mat)

    def __repr__(self):
        if self.perm is not None:
            return f"WeylElt{self.perm}"
        return f"WeylElt(<{self.n}x{self.n} matrix>)"


def identity_elt(n: int) -> WeylElt:
    return WeylElt(perm=tuple(range(1, n + 1)))


def from_cycles(n: int, *cycles) -> WeylElt:
    perm = list(range(1, n + 1))
    for cycle in cycles:
        for i, letter in enumerate(cycle):
            perm[letter - 1] = cycle[(i + 1) % len(cycle)]
    return WeylElt(perm=tuple(perm))


def _cycles_to_perm(n, positive, negative):
    perm = list(range(1, n + 1))
    for cycle in positive:
        for i, letter in enumerate(cycle):
            perm[letter - 1] = cycle[(i + 1) % len(cycle)]
    for cycle in negative:
        for i, letter in enumerate(cycle):
            image = cycle[(i + 1) % len(cycle)]
            perm[letter - 1] = image if i + 1 < len(cycle) else -image
    return tuple(perm)


# ---------------------------------------------------------------------------
# group enumeration


def weyl_order(family: str, rank: int) -> int:
    family = family.upper()
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2 ** rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(family, rank)]


class SubgroupTable:
    """An explicit subgroup: the element list, plus optional generators."""

    def __init__(self, elements, gens=None):
        self.elements = tuple(elements)
        self.gens = tuple(gens) if gens is not None else None
        self._set = frozenset(self.elements)
        self._classes = None

    @classmethod
    def from_generators(cls, gens, bound=None):
        limit = bound if bound is not None else enumeration_bound()
        gens = tuple(gens)
        n = gens[0].n
        start = identity_elt(n) if gens[0].perm is not None \
            else WeylElt(mat=_identity_matrix(n))
        seen = {start}
        ordered = [start]
        frontier = [start]
        while frontier:
            next_frontier = []
            for x in frontier:
                for g in gens:
                    y = x @ g
                    if y not in seen:
                        if len(seen) >= limit:
                            raise ValueError(
                                f"closure exceeded the bound {limit}")
                        seen.add(y)
                        ordered.append(y)
                        next_frontier.append(y)
            frontier = next_frontier
        if start.perm is not None:
            ordered.sort(key=lambda e: e.perm)
        return cls(ordered, gens=gens)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, elt):
        return elt in self._set

    def classes(self):
        """Conjugacy classes as tuples, by orbit closure under conjugation."""
        if self._classes is None:
            conjugators = self.gens if self.gens else self.elements
            inv = [(g, g.inverse()) for g in conjugators]
            assigned = set()
            classes = []
            for x in self.elements:
                if x in assigned:
                    continue
                orbit = {x}
                queue = [x]
                while queue:
                    y = queue.pop()
                    for g, gi in inv:
                        z = gi @ y @ g
                        if z not in orbit:
                            orbit.add(z)
                            queue.append(z)
                assigned |= orbit
                classes.append(tuple(e for e in self.elements if e in orbit))
            self._classes = tuple(classes)
        return self._classes

    def coset_reps(self, parent: "SubgroupTable"):
        """Left-coset representatives of self inside the parent table."""
        covered = set()
        reps = []
        for x in parent.elements:
            if x in covered:
                continue
            reps.append(x)
            covered.update(x @ h for h in self.elements)
        return tuple(reps)


def enumerate_group(rs: RootSystem, bound=None) -> SubgroupTable:
    limit = bound if bound is not None else enumeration_bound()
    order = weyl_order(rs.family, rs.rank)
    if order > limit:
        raise ValueError(
            f"{rs.name} has order {order}, beyond the enumeration bound {limit}")
    if rs.family == "A":
        elements = [WeylElt(perm=p) for p in permutations(range(1, rs.rank + 2))]
    elif rs.family in ("B", "C"):
        n = rs.rank
        elements = [WeylElt(perm=tuple(s * v for s, v in zip(signs, p)))
                    for p in permutations(range(1, n + 1))
                    for signs in product((1, -1), repeat=n)]
    elif rs.family == "D":
        n = rs.rank
        elements = [WeylElt(perm=tuple(s * v for s, v in zip(signs, p)))
                    for p in permutations(range(1, n + 1))
                    for signs in product((1, -1), repeat=n)
                    if signs.count(-1) % 2 == 0]
    else:
        gens = [WeylElt(mat=rs.simple_reflection(i)) for i in range(1, rs.rank + 1)]
        table = SubgroupTable.from_generators(gens, bound=limit)
        assert len(table) == order
        return table
    assert len(elements) == order
    return SubgroupTable(elements)


# ---------------------------------------------------------------------------
# conjugacy-class descriptors


@dataclass(frozen=True)
class SymmetricClasses:
    """Class bookkeeping for the symmetric group on n letters."""

    n: int

    def key(self, w) -> Partition:
        if isinstance(w, Partition):
            return w
        if isinstance(w, tuple):
            w = WeylElt(perm=w)
        assert all(v > 0 for v in w.perm), "signed entries in a type A element"
        return w.cycle_type()

    def centralizer_order(self, key: Partition) -> int:
        return key.centralizer_order()

    def group_order(self) -> int:
        return factorial(self.n)

    def all_classes(self):
        return partitions_of(self.n)


@dataclass(frozen=True)
class HyperoctahedralClasses:
    """Class bookkeeping for the signed permutations on n letters."""

    n: int

    def key(self, w):
        if isinstance(w, tuple) and w and isinstance(w[0], int):
            w = WeylElt(perm=w)
        return w.signed_cycle_type()

    def centralizer_order(self, key) -> int:
        pos, neg = key
        total = 1
        for part in (pos, neg):
            for length, mult in part.multiplicities().items():
                total *= (2 * length) ** mult * factorial(mult)
        return total

    def group_order(self) -> int:
        return 2 ** self.n * factorial(self.n)

    def all_classes(self):
        return tuple((lam, mu)
                     for k in range(self.n + 1)
                     for lam in partitions_of(k)
                     for mu in partitions_of(self.n - k))


class ClassFunction:
    """An exact class function, backed by a value table or an evaluator."""

    def __init__(self, domain, values=None, evaluate=None):
        if (values is None) == (evaluate is None):
            raise ValueError("supply exactly one of values and evaluate")
        self.domain = domain
        self.values = dict(values) if values is not None else None
        self._evaluate = evaluate

    def value_at(self, elt):
        if self._evaluate is not None:
            return self._evaluate(elt)
        return self.values[self.domain.key(elt)]

    def __getitem__(self, key):
        if self.values is None:
            raise KeyError("evaluator-backed class function has no table")
        return self.values[key]


def _normalize_scalar(x):
    if isinstance(x, Cyclotomic) and x.is_rational:
        x = x.as_fraction()
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def induced_character(H: SubgroupTable, chi: ClassFunction) -> ClassFunction:
    """Frobenius induction from an explicit subgroup of the full symmetric
    group on the letters the elements act on."""
    n = H.elements[0].n
    parent = SymmetricClasses(n)
    sums = {rho: 0 for rho in parent.all_classes()}
    for y in H.elements:
        sums[parent.key(y)] += chi.value_at(y)
    values = {}
    for rho, total in sums.items():
        scaled = Fraction(parent.centralizer_order(rho), len(H)) * total
        values[rho] = _normalize_scalar(scaled)
    return ClassFunction(parent, values=values)


# ---------------------------------------------------------------------------
# regular elements


def _need(condition: bool, message: str):
    if not condition:
        raise ValueError(message)


def regular_element(family: str, rank: int, e: int, variant: str = "a") -> WeylElt:
    """Catalog element of order e with a regular zeta_e-eigenvector.

    Each admissible (family, e, variant) names one canonical signed
    permutation; the divisibility conditions are exactly the admissible
    ones, and violations raise with the failed condition spelled out.
    """
    family = family.upper()
    variant = variant.lower()
    _need(e >= 1, f"order e must be positive, got {e}")
    if family == "A":
        n = rank + 1
        if variant == "a":
            _need(n % e == 0, f"type A variant a needs e | {n}, got e={e}")
            cycles = [tuple(range(k * e + 1, k * e + e + 1)) for k in range(n // e)]
            return WeylElt(perm=_cycles_to_perm(n, cycles, ()))
        if variant == "b":
            _need((n - 1) % e == 0,
                  f"type A variant b needs e | {n - 1}, got e={e}")
            cycles = [tuple(range(k * e + 1, k * e + e + 1))
                      for k in range((n - 1) // e)]
            return WeylElt(perm=_cycles_to_perm(n, cycles, ()))
        raise ValueError(f"type A has variants a and b, got {variant!r}")
    if family == "B" or family == "C":
        n = rank
        if variant == "a":
            _need(e % 2 == 1, f"type B variant a needs odd e, got e={e}")
            _need(n % e == 0, f"type B variant a needs e | {n}, got e={e}")
            cycles = [tuple(range(k * e + 1, k * e + e + 1)) for k in range(n // e)]
            return WeylElt(perm=_cycles_to_perm(n, cycles, ()))
        if variant == "b":
            _need(e % 2 == 0, f"type B variant b needs even e, got e={e}")
            _need((2 * n) % e == 0,
                  f"type B variant b needs e | {2 * n}, got e={e}")
            half = e // 2
            cycles = [tuple(range(k * half + 1, k * half + half + 1))
                      for k in range(2 * n // e)]
            return WeylElt(perm=_cycles_to_perm(n, (), cycles))
        raise ValueError(f"type B has variants a and b, got {variant!r}")
    if family == "D":
        n = rank
        if variant == "a":
            _need(e % 2 == 1, f"type D variant a needs odd e, got e={e}")
            _need(n % e == 0, f"type D variant a needs e | {n}, got e={e}")
            cycles = [tuple(range(k * e + 1, k * e + e + 1)) for k in range(n // e)]
            return WeylElt(perm=_cycles_to_perm(n, cycles, ()))
        if variant == "b":
            _need(e % 2 == 1, f"type D variant b needs odd e, got e={e}")
            _need((n - 1) % e == 0,
                  f"type D variant b needs e | {n - 1}, got e={e}")
            cycles = [tuple(range(k * e + 1, k * e + e + 1))
                      for k in range((n - 1) // e)]
            return WeylElt(perm=_cycles_to_perm(n, cycles, ()))
        if variant == "c":
            _need(e % 2 == 0, f"type D variant c needs even e, got e={e}")
            _need(n % e == 0, f"type D variant c needs e | {n}, got e={e}")
            half = e // 2
            cycles = [tuple(range(k * half + 1, k * half + half + 1))
                      for k in range(2 * n // e)]
            return WeylElt(perm=_cycles_to_perm(n, (), cycles))
        if variant == "d":
            _need(e % 2 == 0, f"type D variant d needs even e, got e={e}")
            _need((2 * n - 2) % e == 0,
                  f"type D variant d needs e | {2 * n - 2}, got e={e}")
            half = e // 2
            count = (2 * n - 2) // e
            cycles = [tuple(range(k * half + 1, k * half + half + 1))
                      for k in range(count)]
            # the leftover letter keeps the total sign count even
            if count % 2 == 0:
                return WeylElt(perm=_cycles_to_perm(n, ((n,),), cycles))
            return WeylElt(perm=_cycles_to_perm(n, (), cycles + [(n,)]))
        raise ValueError(f"type D has variants a through d, got {variant!r}")
    raise ValueError(f"no catalog for family {family!r}")


def eigenspace(a: WeylElt, e: int, j: int = 1):
    """Exact basis of the zeta_e^j eigenspace of a on the ambient space."""
    zeta = Cyclotomic.zeta(e, j % e)
    m = a.matrix
    n = len(m)
    rows = [[m[r][c] - zeta if r == c else m[r][c] for c in range(n)]
            for r in range(n)]
    return kernel_basis(rows)


def _escapes_hyperplanes(rs: RootSystem, basis, roots) -> bool:
    if not basis:
        return False
    for beta in roots:
        if not any(rs.inner(v, beta) for v in basis):
            return False
    return True


def is_regular(a: WeylElt, e: int, rs: RootSystem) -> bool:
    """True when the zeta_e-eigenspace escapes every reflecting hyperplane.

    Over an infinite field a finite union of proper subspaces cannot
    cover the eigenspace, so per-hyperplane escape is equivalent to the
    existence of a single eigenvector off all of them.
    """
    assert a.order() == e, f"element has order {a.order()}, not {e}"
    return _escapes_hyperplanes(rs, eigenspace(a, e, 1), rs.roots)


def is_L_regular(a: WeylElt, e: int, cfg: LeviConfig, j: int = 1) -> bool:
    """Escape test against the crossing roots only: roots inside the
    chosen Levi subsystem are allowed to vanish on the eigenspace."""
    basis = eigenspace(a, e, j)
    return _escapes_hyperplanes(cfg.parent, basis, cfg.crossing_roots())


# ---------------------------------------------------------------------------
# embedding subsystem elements


def reflection_word(rs: RootSystem, w: WeylElt):
    """Express w as a word in the simple reflections of its root system."""
    coords_of = dict(zip(rs.roots, rs.root_coords))
    ident = _identity_matrix(rs.dim)
    cur = w.matrix
    suffix = []
    limit = len(rs.roots) // 2 + 1
    while cur != ident:
        for i in range(1, rs.rank + 1):
            image = _matvec(cur, rs.simple_roots[i - 1])
            coords = coords_of.get(tuple(image))
            if coords is None:
                raise ValueError("matrix does not permute the roots")
            if any(c < 0 for c in coords):
                suffix.append(i)
                cur = _matmul(cur, rs.simple_reflection(i))
                break
        else:
            raise ValueError("no descent found; matrix is not in the group")
        if len(suffix) > limit:
            raise ValueError("word grew past the number of positive roots")
    return tuple(reversed(suffix))


def _match_component(parent: RootSystem, nodes, letter: str, rank: int):
    """Order the component's labels so they mirror the model numbering."""
    model = build_root_system(letter, rank)
    nodes = list(nodes)
    order = []

    def fits(cand, pos):
        for k, prev in enumerate(order):
            if model.cartan[pos][k] != parent.cartan[cand - 1][prev - 1]:
                return False
            if model.cartan[k][pos] != parent.cartan[prev - 1][cand - 1]:
                return False
        return True

    def place(pos):
        if pos == rank:
            return True
        for cand in nodes:
            if cand in order or not fits(cand, pos):
                continue
            order.append(cand)
            if place(pos + 1):
                return True
            order.pop()
        return False

    if not place(0):
        raise ValueError(f"component {nodes} does not match type {letter}{rank}")
    return tuple(order)


def embed_component_element(parent: RootSystem, component, model_elt: WeylElt) -> WeylElt:
    """Carry an element of a component's model group into the parent group.

    The component is one (letter, rank, nodes) entry of a LeviConfig;
    the element is rewritten as a word in the model's simple reflections
    and replayed on the matching parent labels.
    """
    letter, rank, nodes = component
    order = _match_component(parent, nodes, letter, rank)
    model = build_root_system(letter, rank)
    word = reflection_word(model, model_elt)
    mat = _identity_matrix(parent.dim)
    for i in word:
        mat = _matmul(mat, parent.simple_reflection(order[i - 1]))
    if parent.family in ("A", "B", "C", "D"):
        perm = _perm_from_matrix(mat)
        return WeylElt(perm=perm, mat=mat)
    return WeylElt(mat=mat)


def _perm_from_matrix(mat):
    n = len(mat)
    perm = []
    for c in range(n):
        entries = [(r, mat[r][c]) for r in range(n) if mat[r][c]]
        assert len(entries) == 1 and abs(entries[0][1]) == 1
        r, val = entries[0]
        perm.append(r + 1 if val > 0 else -(r + 1))
    return tuple(perm)


# ---------------------------------------------------------------------------
# induction configurations on the full linear group


class InvalidConfigError(ValueError):
    pass


@dataclass(frozen=True)
class InductionConfig:
    """A block Levi of the general linear group plus a twisting element.

    blocks partition the letters 1..n into consecutive runs; the block
    subgroup is the product of the symmetric groups on the runs.  Each
    block carries the Jordan type of its unipotent factor.  The element
    a supplies the cyclic twist; validate_config decides which of the
    two admissible shapes the data has.
    """

    n: int
    e: int
    blocks: tuple
    block_types: tuple
    a: WeylElt

    def __post_init__(self):
        expected = 1
        for block, jtype in zip(self.blocks, self.block_types, strict=True):
            if tuple(block) != tuple(range(expected, expected + len(block))):
                raise ValueError(f"blocks must be consecutive runs, got {block}")
            expected += len(block)
            if not isinstance(jtype, Partition):
                raise ValueError("block types must be Partition instances")
            if jtype.size != len(block):
                raise ValueError(
                    f"Jordan type {jtype} does not fill a block of {len(block)}")
        if expected != self.n + 1:
            raise ValueError("blocks do not cover the letters")
        if self.a.n != self.n or any(v < 0 for v in self.a.perm):
            raise ValueError("the twisting element must be a plain permutation")

    def pi_L(self):
        labels = []
        for block in self.blocks:
            labels.extend(range(block[0], block[-1]))
        return tuple(labels)

    def root_system(self) -> RootSystem:
        return build_root_system("A", self.n - 1)

    def levi(self) -> LeviConfig:
        return levi_config(self.root_system(), self.pi_L())

    def merged_type(self) -> Partition:
        parts = [p for jtype in self.block_types for p in jtype]
        return Partition(tuple(sorted(parts, reverse=True)))


@lru_cache(maxsize=None)
def levi_elements(cfg: InductionConfig):
    """The block subgroup as explicit permutations."""
    pools = []
    for block in cfg.blocks:
        pools.append([dict(zip(block, images))
                      for images in permutations(block)])
    elements = []
    for choice in product(*pools):
        perm = list(range(1, cfg.n + 1))
        for mapping in choice:
            for src, dst in mapping.items():
                perm[src - 1] = dst
        elements.append(WeylElt(perm=tuple(perm)))
    return tuple(elements)


@lru_cache(maxsize=None)
def _levi_set(cfg: InductionConfig):
    return frozenset(levi_elements(cfg))


@lru_cache(maxsize=None)
def coset_elements(cfg: InductionConfig, j: int):
    aj = cfg.a ** (j % cfg.e)
    return tuple(aj @ h for h in levi_elements(cfg))


@lru_cache(maxsize=None)
def extended_subgroup(cfg: InductionConfig) -> SubgroupTable:
    elements = []
    for j in range(cfg.e):
        elements.extend(coset_elements(cfg, j))
    return SubgroupTable(elements)


def coset_exponent(cfg: InductionConfig, y: WeylElt) -> int:
    inv = cfg.a.inverse()
    probe = y
    for j in range(cfg.e):
        if probe in _levi_set(cfg):
            return j
        probe = inv @ probe
    raise ValueError("element lies outside the extended subgroup")


def block_shift_element(blocks, e: int) -> WeylElt:
    """Canonical cyclic twist for a block layout: consecutive runs of e
    equal-size blocks rotate, an optional leading block stays fixed."""
    blocks = tuple(tuple(b) for b in blocks)
    n = sum(len(b) for b in blocks)

    def assemble(start):
        perm = list(range(1, n + 1))
        p = start
        while p < len(blocks):
            run = blocks[p:p + e]
            if len(run) < e or len({len(b) for b in run}) != 1:
                return None
            for t in range(e):
                src, dst = run[t], run[(t + 1) % e]
                for k, letter in enumerate(src):
                    perm[letter - 1] = dst[k]
            p += e
        return WeylElt(perm=tuple(perm))

    result = assemble(0)
    if result is None and len(blocks) > 1:
        result = assemble(1)
    if result is None:
        raise InvalidConfigError(
            f"cannot rotate {len(blocks)} blocks in runs of {e}")
    return result


def standard_block_config(m: int, e: int, nu: Partition | None = None,
                          fixed_size: int = 0,
                          fixed_type: Partition | None = None) -> InductionConfig:
    """e equal blocks of size m, optionally after one fixed block."""
    if nu is None:
        nu = Partition((m,))
    blocks = []
    types = []
    start = 1
    if fixed_size:
        blocks.append(tuple(range(1, fixed_size + 1)))
        types.append(fixed_type if fixed_type is not None
                     else Partition((fixed_size,)))
        start = fixed_size + 1
    for _ in range(e):
        blocks.append(tuple(range(start, start + m)))
        types.append(nu)
        start += m
    n = start - 1
    a = block_shift_element(blocks, e)
    return InductionConfig(n=n, e=e, blocks=tuple(blocks),
                           block_types=tuple(types), a=a)


def l_regular_config(n: int, m: int, e: int, nu: Partition | None = None,
                     variant: str = "a") -> InductionConfig:
    """One block of size m on the last letters; the catalog element of
    the complementary symmetric group supplies the twist."""
    if not 1 <= m <= n - 1:
        raise ValueError(f"need 1 <= m <= {n - 1}, got m={m}")
    if nu is None:
        nu = Partition((m,))
    blocks = [(i,) for i in range(1, n - m + 1)]
    types = [Partition((1,))] * (n - m)
    if m == 1:
        blocks.append((n,))
        types.append(nu)
        letters = tuple(range(1, n + 1))
    else:
        blocks.append(tuple(range(n - m + 1, n + 1)))
        types.append(nu)
        letters = tuple(range(1, n - m + 1))
    model = regular_element("A", len(letters) - 1, e, variant)
    perm = list(range(1, n + 1))
    for i, letter in enumerate(letters):
        perm[letter - 1] = letters[model.perm[i] - 1]
    return InductionConfig(n=n, e=e, blocks=tuple(blocks),
                           block_types=tuple(types), a=WeylElt(perm=tuple(perm)))


def _block_image_permutation(cfg: InductionConfig):
    """How the twisting element permutes the blocks, or None if it
    fails to send some block onto a block."""
    index_of = {}
    for bi, block in enumerate(cfg.blocks):
        for letter in block:
            index_of[letter] = bi
    sigma = []
    for block in cfg.blocks:
        images = {abs(cfg.a.perm[letter - 1]) for letter in block}
        targets = {index_of[v] for v in images}
        if len(targets) != 1:
            return None
        target = targets.pop()
        if len(cfg.blocks[target]) != len(block):
            return None
        sigma.append(target)
    return tuple(sigma)


def _orbits(sigma):
    seen = set()
    orbits = []
    for start in range(len(sigma)):
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        cur = sigma[start]
        while cur != start:
            orbit.append(cur)
            seen.add(cur)
            cur = sigma[cur]
        orbits.append(tuple(orbit))
    return orbits


def validate_config(cfg: InductionConfig) -> str:
    """Classify the configuration, or explain why it is inadmissible.

    Returns "l-regular" when the twist lives in the group orthogonal to
    the blocks and has a regular eigenvector clearing every crossing
    hyperplane, and "block-cyclic" when the blocks themselves rotate in
    families of e with no crossing root orthogonal to all of them.
    An identity twist (e = 1) validates as "ungraded".
    """
    order = cfg.a.order()
    if order != cfg.e:
        raise InvalidConfigError(
            f"twisting element has order {order}, expected e = {cfg.e}")
    if cfg.e == 1:
        return "ungraded"
    sigma = _block_image_permutation(cfg)
    if sigma is None:
        raise InvalidConfigError(
            "twisting element does not permute the blocks, so it fails "
            "to normalize the block subgroup")
    levi = cfg.levi()
    if levi.pi_prime:
        # candidate for the regular-eigenvector shape
        big = [b for b in cfg.blocks if len(b) > 1]
        if len(big) > 1:
            raise InvalidConfigError(
                "more than one nonabelian block factor; the fixed Levi "
                "must be simple modulo its center")
        allowed = set()
        for label in levi.pi_prime:
            allowed.update((label, label + 1))
        moved = cfg.a.support()
        if not moved <= allowed:
            raise InvalidConfigError(
                "twisting element moves letters outside the span of the "
                "simple roots orthogonal to the blocks")
        basis = eigenspace(cfg.a, cfg.e, 1)
        rs = cfg.root_system()
        for beta in levi.crossing_roots():
            if not any(rs.inner(v, beta) for v in basis):
                raise InvalidConfigError(
                    "twisting element is not admissible: its eigenspace "
                    f"lies inside the hyperplane of the crossing root {beta}")
        return "l-regular"
    # candidate for the rotating-blocks shape
    rotating = []
    for orbit in _orbits(sigma):
        if len(orbit) == 1:
            bi = orbit[0]
            if any(cfg.a.perm[letter - 1] != letter for letter in cfg.blocks[bi]):
                raise InvalidConfigError(
                    "twisting element acts inside a block it fixes")
        elif len(orbit) == cfg.e:
            types = {cfg.block_types[bi] for bi in orbit}
            if len(types) != 1:
                raise InvalidConfigError(
                    "blocks in one cyclic orbit carry different Jordan types")
            rotating.extend(orbit)
        else:
            raise InvalidConfigError(
                f"blocks rotate in an orbit of length {len(orbit)}, not e = {cfg.e}")
    if not rotating:
        raise InvalidConfigError("no block rotates; the twist does nothing")
    family_blocks = [cfg.blocks[bi] for bi in rotating]
    for beta in levi.crossing_roots():
        if all(len({beta[letter - 1] for letter in block}) == 1
               for block in family_blocks):
            raise InvalidConfigError(
                f"crossing root {beta} is orthogonal to every rotating block")
    return "block-cyclic"


# ---------------------------------------------------------------------------
# coset counting and coset characters


def coset_count(w, cfg: InductionConfig, j: int) -> Fraction:
    """Number of cosets of the block subgroup whose twist-shifted copy
    meets the conjugacy class of w, counted with the centralizer weight."""
    parent = SymmetricClasses(cfg.n)
    key = parent.key(w)
    matches = sum(1 for y in coset_elements(cfg, j)
                  if y.cycle_type() == key)
    return Fraction(parent.centralizer_order(key) * matches,
                    len(levi_elements(cfg)))


def coset_character(cfg: InductionConfig, k: int) -> ClassFunction:
    """Linear character of the extended subgroup that reads off the
    coset exponent: value zeta_e^(-k i) on the i-th shifted coset."""
    table = extended_subgroup(cfg)

    def evaluate(y):
        i = coset_exponent(cfg, y)
        return Cyclotomic.zeta(cfg.e, (-k * i) % cfg.e)

    return ClassFunction(table, evaluate=evaluate)
