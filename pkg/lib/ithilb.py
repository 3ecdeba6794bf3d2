"""
Iterated Hilbert schemes T-Hilb A-Hilb C^3 as triangulations, and the
stability condition whose moduli space they are.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import pandas as pd

from lib.exceptions import GroupError, StabilityError
from lib.group import GroupAction, StabilityCondition, SubgroupSpec, lifted_characters, subgroup_by_order
from lib.lattice import Lattice, UNIT_VECTORS
from lib.nakamura import HilbContext, hilb_cells
from lib.triangulation import Triangulation
from lib.util import parallel_map
from mckay_app import config, logger


@dataclass(frozen=True)
class IteratedChain:
    """A1 <= A2 <= ... <= As <= G, innermost first."""
    group: GroupAction
    subgroups: tuple

    def __post_init__(self):
        chain = tuple(self.subgroups)
        if not all(isinstance(a, SubgroupSpec) for a in chain):
            raise GroupError('chain entries must be subgroups of {}'.format(self.group))
        for a in chain:
            if a.group != self.group:
                raise GroupError('subgroup {} is not a subgroup of {}'.format(a.describe(), self.group))
        for a, b in zip(chain, chain[1:]):
            if not b.contains(a):
                raise GroupError('chain is not increasing at {} <= {}'.format(a.describe(), b.describe()))
        object.__setattr__(self, 'subgroups', chain)

    @classmethod
    def of(cls, group, subgroup):
        return cls(group, (subgroup,))

    @property
    def innermost(self):
        return self.subgroups[0] if self.subgroups else SubgroupSpec(self.group, ())

    def lattices(self):
        """Overlattices of Z^3 for A1, ..., As and G."""
        out = [Lattice(sorted(a.elements)) for a in self.subgroups]
        out.append(self.group.overlattice)
        return out

    def quotient_orders(self):
        """|A1|, |A2/A1|, ..., |G/As|."""
        orders = [a.order for a in self.subgroups] + [self.group.order]
        return [orders[0]] + [b // a for a, b in zip(orders, orders[1:])]


def _refine(cells, lattice, overlattice):
    def chart(cell):
        ctx = HilbContext.chart(cell, lattice, overlattice)
        return [tri for _, tri in hilb_cells(ctx)]

    out = []
    for refined in parallel_map(chart, cells):
        out.extend(refined)
    return out


def iterated_hilb(chain):
    """Triangulation of the junior simplex of G for the chain, refined stage by stage."""
    lattices = chain.lattices()
    if chain.subgroups and not chain.subgroups[0].is_trivial:
        cells = [tri for _, tri in hilb_cells(HilbContext.standard(chain.subgroups[0].action))]
    else:
        cells = [UNIT_VECTORS]
        lattices = [Lattice()] + lattices
    for lattice, overlattice in zip(lattices, lattices[1:]):
        if overlattice.index == lattice.index:
            continue
        cells = _refine(cells, lattice, overlattice)
        logger.debug('Refined to {} cells in lattice of index {}'.format(len(cells), overlattice.index))
    T = Triangulation.from_cells(cells, chain.group.overlattice)
    T.validate()
    logger.info('Iterated Hilb for {} along {}: {} triangles'.format(
        chain.group, [a.describe() for a in chain.subgroups], len(T.triangles)))
    return T


def default_epsilon(group):
    value = config.get('ithilb', 'epsilon', fallback='').strip()
    if value:
        return Fraction(value)
    return Fraction(1, 4 * group.order ** 2)


def _theta_values(chain, eps):
    group = chain.group
    tower = [SubgroupSpec(group, ())] + list(chain.subgroups) + [_whole(group)]
    values = {}
    for chi in group.characters:
        total = Fraction(0)
        for j, (inner, outer) in enumerate(zip(tower, tower[1:])):
            if not inner.restricts_trivially(chi):
                continue
            quotient = outer.order // inner.order
            theta = 1 if not outer.restricts_trivially(chi) else 1 - quotient
            total += eps ** j * theta
        values[chi] = total
    return values


def _whole(group):
    n = len(group.moduli)
    return SubgroupSpec(group, tuple(tuple(int(i == k) for i in range(n)) for k in range(n)))


def build_theta(group, chain, eps=None):
    """
    sum_j eps^j [chi trivial on A_j] theta_j(chi), theta_j zero-generated on
    A_{j+1}/A_j, with A_0 = 1 and A_{s+1} = G.
    """
    if isinstance(chain, SubgroupSpec):
        chain = IteratedChain.of(group, chain)
    if eps is None:
        eps = default_epsilon(group)
    eps = Fraction(eps)
    if eps <= 0:
        raise StabilityError('epsilon must be positive, got {}'.format(eps))
    values = _theta_values(chain, eps)
    halved = _theta_values(chain, eps / 2)
    for chi, v in values.items():
        if (v > 0) - (v < 0) != (halved[chi] > 0) - (halved[chi] < 0):
            raise StabilityError('epsilon {} is not small enough at character {}'.format(eps, chi),
                                 epsilon=eps, character=chi)
    return StabilityCondition(values)


def check_lemma_sign(group, chain, theta):
    """
    True iff theta is negative exactly on the characters lifted from G/A1.
    None when A1 is trivial.
    """
    if isinstance(chain, SubgroupSpec):
        chain = IteratedChain.of(group, chain)
    inner = chain.innermost
    if inner.is_trivial:
        return None
    return theta.negatives() == lifted_characters(group, inner)


def faithful_cyclic_groups(max_order):
    for r in range(2, max_order + 1):
        for a in range(r):
            for b in range(a, r):
                c = (-a - b) % r
                if c < b:
                    continue
                if gcd(gcd(a, b), gcd(c, r)) != 1:
                    continue
                # one representative per group: the smallest sorted weights over all generators
                if any(tuple(sorted(k * x % r for x in (a, b, c))) < (a, b, c)
                       for k in range(2, r) if gcd(k, r) == 1):
                    continue
                yield GroupAction(((r, (a, b, c)),))


def lemma_sweep(max_order=30):
    rows = []
    for group in faithful_cyclic_groups(max_order):
        for m in range(2, group.order + 1):
            if group.order % m:
                continue
            subgroup = subgroup_by_order(group, m)
            eps = default_epsilon(group)
            theta = build_theta(group, subgroup, eps)
            rows.append({
                'group': str(group),
                'r': group.order,
                'subgroup': subgroup.describe(),
                'subgroup_order': m,
                'epsilon': str(eps),
                'negatives': len(theta.negatives()),
                'lemma_holds': bool(check_lemma_sign(group, subgroup, theta))
            })
    df = pd.DataFrame(rows, columns=['group', 'r', 'subgroup', 'subgroup_order', 'epsilon', 'negatives',
                                     'lemma_holds'])
    logger.info('Lemma sweep up to r = {}: {} cases, {} failures'.format(
        max_order, len(df), int((~df['lemma_holds']).sum()) if len(df) else 0))
    return df
