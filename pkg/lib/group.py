"""
Finite abelian diagonal subgroups of SL3, given as products of cyclic factors
1/r(a,b,c), together with their characters, subgroups, junior elements, McKay
quiver and stability conditions.
"""
import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm, prod

from lib.exceptions import GroupError, GroupParseError, StabilityError
from lib.lattice import Lattice, UNIT_VECTORS, combine, denominator_of, scaled, smith_normal_form, solve3
from mckay_app import logger


def frac(x):
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def frac_part(w):
    return tuple(frac(x) for x in w)


@dataclass(frozen=True, order=True)
class Character:
    """A character of G: one residue per cyclic factor, composed additively."""
    value: tuple
    moduli: tuple

    def __mul__(self, other):
        return Character(tuple((a + b) % r for a, b, r in zip(self.value, other.value, self.moduli)), self.moduli)

    def __pow__(self, k):
        return Character(tuple((a * k) % r for a, r in zip(self.value, self.moduli)), self.moduli)

    def inverse(self):
        return self ** -1

    @property
    def is_trivial(self):
        return not any(self.value)

    def to_json(self):
        return self.value[0] if len(self.value) == 1 else list(self.value)

    def __str__(self):
        if len(self.value) == 1:
            return str(self.value[0])
        return '({})'.format(','.join(str(v) for v in self.value))


def character_from_json(value, moduli):
    if isinstance(value, int):
        value = [value]
    return Character(tuple(int(v) % r for v, r in zip(value, moduli)), tuple(moduli))


@dataclass(frozen=True)
class GroupAction:
    """
    Diagonal action of prod Z/r_k on C^3. Factor k is (r_k, (a_k, b_k, c_k)) and
    the element with index tuple (i_1, ..., i_m) acts on the coordinates with
    fractional weights sum_k i_k*(a_k, b_k, c_k)/r_k mod 1.
    """
    factors: tuple

    def __post_init__(self):
        normalized = []
        for r, w in self.factors:
            r = int(r)
            if r < 1 or len(w) != 3:
                raise GroupError('bad factor {}'.format((r, w)))
            w = tuple(int(x) % r for x in w)
            if sum(w) % r != 0:
                raise GroupError('weights {} of 1/{} violate a+b+c = 0 mod r'.format(w, r))
            normalized.append((r, w))
        if not normalized:
            normalized = [(1, (0, 0, 0))]
        object.__setattr__(self, 'factors', tuple(normalized))

    def __str__(self):
        return '*'.join('{}:{},{},{}'.format(r, *w) for r, w in self.factors)

    @property
    def moduli(self):
        return tuple(r for r, _ in self.factors)

    @cached_property
    def denominator(self):
        return reduce(lcm, self.moduli, 1)

    def indices(self):
        return itertools.product(*(range(r) for r in self.moduli))

    def weights(self, index):
        return frac_part(tuple(sum(Fraction(i * w[c], r) for i, (r, w) in zip(index, self.factors))
                               for c in range(3)))

    @cached_property
    def _element_table(self):
        table = {}
        for index in self.indices():
            table.setdefault(self.weights(index), index)
        return table

    @property
    def elements(self):
        """Distinct fractional weight triples, identity first."""
        return list(self._element_table)

    def element_index(self, weights):
        return self._element_table.get(frac_part(weights))

    @property
    def order(self):
        return len(self._element_table)

    @property
    def is_faithful(self):
        return self.order == prod(self.moduli)

    @property
    def is_trivial(self):
        return self.order == 1

    def contains_weights(self, w):
        return frac_part(w) in self._element_table

    @staticmethod
    def element_order(weights):
        return denominator_of([weights])

    @cached_property
    def exponent(self):
        return reduce(lcm, (self.element_order(w) for w in self.elements), 1)

    def generator(self):
        """Index tuple of an element of order |G|, or None when G is not cyclic."""
        for w, index in self._element_table.items():
            if self.element_order(w) == self.order:
                return index
        return None

    @property
    def is_cyclic(self):
        return self.generator() is not None

    @staticmethod
    def age(weights):
        return sum(weights)

    def junior_points(self):
        return sorted((w for w in self.elements if self.age(w) == 1), key=lambda w: scaled(w, self.denominator))

    @cached_property
    def overlattice(self):
        return Lattice(self.elements)

    def monomial_character(self, exponent):
        return Character(tuple(sum(e * a for e, a in zip(exponent, w)) % r for r, w in self.factors), self.moduli)

    @cached_property
    def coordinate_characters(self):
        return tuple(self.monomial_character(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @cached_property
    def trivial_character(self):
        return Character(tuple(0 for _ in self.moduli), self.moduli)

    @cached_property
    def characters(self):
        """Irr(G): the closure of the coordinate characters, sorted."""
        seen = {self.trivial_character}
        frontier = [self.trivial_character]
        while frontier:
            nxt = []
            for chi in frontier:
                for c in self.coordinate_characters:
                    psi = chi * c
                    if psi not in seen:
                        seen.add(psi)
                        nxt.append(psi)
            frontier = nxt
        if len(seen) != self.order:
            raise GroupError('character group of {} has order {} != |G| = {}'.format(self, len(seen), self.order))
        return tuple(sorted(seen))

    def character_order(self, chi):
        return reduce(lcm, (r // gcd(v, r) for v, r in zip(chi.value, chi.moduli)), 1)

    def evaluate(self, chi, index):
        """chi(g) as a fraction mod 1, for g given by its index tuple."""
        return frac(sum(Fraction(v * i, r) for v, i, r in zip(chi.value, index, self.moduli)))

    def faithful(self):
        if self.is_faithful:
            return self
        logger.debug('Canonicalizing non-faithful presentation {}'.format(self))
        return action_from_vectors(self.elements)


def _inverse_unimodular(m):
    columns = [tuple(m[i][j] for i in range(3)) for j in range(3)]
    inv_columns = [solve3(columns, e) for e in UNIT_VECTORS]
    return [[int(inv_columns[j][i]) for j in range(3)] for i in range(3)]


def action_from_vectors(vectors):
    """
    Canonical faithful GroupAction of the finite group (Z^3 + sum Z*v) / Z^3.

    The invariant factors come from the SNF of Z^3 written in a basis of the
    overlattice; a cyclic result uses the lexicographically smallest generator.
    """
    lattice = Lattice(vectors)
    basis = lattice.basis
    m = [[int(c) for c in col] for col in (solve3(basis, e) for e in UNIT_VECTORS)]
    m = [[m[j][i] for j in range(3)] for i in range(3)]
    s, u, _ = smith_normal_form(m)
    u_inv = _inverse_unimodular(u)
    factors = []
    for i in range(3):
        order = s[i][i]
        if order <= 1:
            continue
        b = combine(basis, [Fraction(u_inv[k][i]) for k in range(3)])
        factors.append((order, tuple(int(x * order) % order for x in b)))
    if len(factors) == 1:
        r, w = factors[0]
        factors = [(r, min(tuple(k * x % r for x in w) for k in range(1, r) if gcd(k, r) == 1))]
    return GroupAction(tuple(factors))


@dataclass(frozen=True)
class SubgroupSpec:
    """Subgroup A of G generated by elements given as index tuples."""
    group: GroupAction
    generators: tuple

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = tuple(g) if isinstance(g, (tuple, list)) else (g,)
            if len(g) != len(self.group.moduli):
                raise GroupError('generator {} not in {}'.format(g, self.group))
            gens.append(tuple(int(i) % r for i, r in zip(g, self.group.moduli)))
        object.__setattr__(self, 'generators', tuple(gens))

    @cached_property
    def elements(self):
        gen_weights = [self.group.weights(g) for g in self.generators]
        identity = (Fraction(0),) * 3
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gen_weights:
                    h = frac_part(tuple(a + b for a, b in zip(w, g)))
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return frozenset(seen)

    @property
    def order(self):
        return len(self.elements)

    @property
    def index(self):
        return self.group.order // self.order

    @property
    def is_trivial(self):
        return self.order == 1

    @property
    def is_whole(self):
        return self.order == self.group.order

    def restricts_trivially(self, chi):
        return all(self.group.evaluate(chi, g) == 0 for g in self.generators)

    def contains(self, other):
        return other.elements <= self.elements

    @cached_property
    def action(self):
        return action_from_vectors(self.elements)

    def describe(self):
        return str(self.action)

    def __eq__(self, other):
        return isinstance(other, SubgroupSpec) and self.group == other.group and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)


def junior_elements(group):
    return group.junior_points()


def lifted_characters(group, subgroup):
    if subgroup.group != group:
        raise GroupError('subgroup generators are not elements of {}'.format(group))
    return frozenset(chi for chi in group.characters if subgroup.restricts_trivially(chi))


def subgroup_action(group, subgroup):
    if subgroup.group != group:
        raise GroupError('subgroup generators are not elements of {}'.format(group))
    return subgroup.action


def subgroup_by_order(group, m):
    if m < 1 or group.order % m:
        raise GroupError('{} does not divide |G| = {}'.format(m, group.order))
    g = group.generator()
    if g is None:
        raise GroupError('{} is not cyclic; use subgroup generators instead'.format(group))
    k = group.order // m
    return SubgroupSpec(group, (tuple(i * k for i in g),))


def subgroups(group):
    """Every subgroup of G, sorted by order. Two generators suffice since G sits in a 2-torus."""
    found = {}
    indices = [group.element_index(w) for w in group.elements]
    for i, g in enumerate(indices):
        for h in indices[i:]:
            spec = SubgroupSpec(group, (g,) if g == h else (g, h))
            if spec.elements not in found:
                single = SubgroupSpec(group, (g,))
                found[spec.elements] = single if single.elements == spec.elements else spec
    return sorted(found.values(), key=lambda a: (a.order, sorted(scaled(w, group.denominator) for w in a.elements)))


@dataclass(frozen=True)
class McKayQuiver:
    vertices: tuple
    arrows: tuple
    dimension_vector: tuple

    def adjacency(self):
        counts = {}
        for tail, head, _ in self.arrows:
            counts[(tail, head)] = counts.get((tail, head), 0) + 1
        return counts


def mckay_quiver(group):
    vertices = group.characters
    arrows = tuple((rho, rho * chi, i + 1) for rho in vertices for i, chi in enumerate(group.coordinate_characters))
    return McKayQuiver(vertices, arrows, tuple(1 for _ in vertices))


@dataclass
class StabilityCondition:
    """Rational function on Irr(G) vanishing on the regular representation."""
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = {chi: Fraction(v) for chi, v in sorted(self.values.items())}
        if self.total() != 0:
            raise StabilityError('stability condition does not vanish on the regular representation',
                                 total=self.total())

    def __getitem__(self, chi):
        return self.values[chi]

    def total(self):
        return sum(self.values.values(), Fraction(0))

    def negatives(self):
        return frozenset(chi for chi, v in self.values.items() if v < 0)

    def signs(self):
        return {chi: (v > 0) - (v < 0) for chi, v in self.values.items()}

    def is_zero_generated(self):
        return all(v > 0 for chi, v in self.values.items() if not chi.is_trivial)

    def to_json(self):
        return [{'character': chi.to_json(), 'value': str(v)} for chi, v in self.values.items()]


def zero_generated_theta(group):
    return StabilityCondition({chi: (1 - group.order) if chi.is_trivial else 1 for chi in group.characters})


FACTOR_RE = re.compile(r'^\s*(\d+)\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$')


def parse_group(text):
    """Parse 'r:a,b,c' or 'r1:a1,b1,c1*r2:a2,b2,c2'; non-faithful input is canonicalized."""
    factors = []
    for part in str(text).split('*'):
        match = FACTOR_RE.match(part)
        if not match:
            raise GroupParseError('cannot parse group factor "{}"'.format(part))
        r, a, b, c = (int(x) for x in match.groups())
        if r < 1:
            raise GroupParseError('group order must be positive in "{}"'.format(part))
        factors.append((r, (a, b, c)))
    try:
        return GroupAction(tuple(factors)).faithful()
    except GroupError as e:
        raise GroupParseError(e.message)


def parse_subgroup_gens(group, text):
    """Generators as comma-separated elements, each element its exponents joined by '.'."""
    gens = []
    for part in str(text).split(','):
        try:
            index = tuple(int(x) for x in part.strip().split('.'))
        except ValueError:
            raise GroupParseError('cannot parse subgroup generator "{}"'.format(part))
        if len(index) != len(group.moduli):
            raise GroupParseError('generator "{}" needs {} exponents'.format(part, len(group.moduli)))
        gens.append(index)
    if not gens:
        raise GroupParseError('empty generator list')
    return SubgroupSpec(group, tuple(gens))


def parse_chain(group, text):
    """Chain of subgroup orders 'm1,m2,...' for cyclic G, innermost first."""
    try:
        orders = [int(x) for x in str(text).split(',') if x.strip()]
    except ValueError:
        raise GroupParseError('cannot parse chain "{}"'.format(text))
    try:
        return [subgroup_by_order(group, m) for m in orders]
    except GroupError as e:
        raise GroupParseError(e.message)
