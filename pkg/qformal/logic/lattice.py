# lattice.py - finite orthocomplemented lattices given by explicit tables.


import itertools
import numpy as np

from logging import error
from ..utils.errors import MalformedTable


class FiniteLattice:
    """A finite bounded poset with an orthocomplementation map.

    Parameters
    ----------
    elements : list of str
        Element labels.
    leq : array_like of bool
        `leq[i][j]` is True iff elements[i] ⪯ elements[j].
    complement : list of str or list of int
        The complement a′ of every element, by label or index.

    Raises
    ------
    MalformedTable
        If the tables are incomplete, the relation is not a partial order,
        or some pair lacks a meet or a join.
    """
    def __init__(self, elements, leq, complement):
        self.elements = [str(x) for x in elements]
        n = len(self.elements)
        if n == 0 or len(set(self.elements)) != n:
            raise MalformedTable("elements should be non-empty and distinct.")
        L = np.asarray(leq, dtype = bool)
        if L.shape != (n, n):
            error("leq table of shape %s for %d elements." % (L.shape, n))
            raise MalformedTable("leq table should be %d x %d." % (n, n))
        if len(complement) != n:
            raise MalformedTable("complement should list %d elements." % n)
        comp = []
        for c in complement:
            if isinstance(c, (int, np.integer)) and not isinstance(c, bool):
                if c < 0 or c >= n:
                    raise MalformedTable("complement index %d out of range." % c)
                comp.append(int(c))
            elif str(c) in self.elements:
                comp.append(self.elements.index(str(c)))
            else:
                error("unknown complement '%s'." % str(c))
                raise MalformedTable("unknown complement '%s'." % str(c))
        self.leq_table = L
        self.comp = comp
        self._check_order()
        self.bottom = self._extreme(lambda i, j: L[i, j])
        self.top = self._extreme(lambda i, j: L[j, i])
        self.meet_table = self._bound_table(upper = False)
        self.join_table = self._bound_table(upper = True)

    @property
    def n(self):
        return len(self.elements)

    def index(self, label):
        return self.elements.index(str(label))

    def leq(self, i, j):
        return bool(self.leq_table[i, j])

    def lt(self, i, j):
        return i != j and bool(self.leq_table[i, j])

    def complement(self, i):
        return self.comp[i]

    def meet(self, i, j):
        return self.meet_table[i][j]

    def join(self, i, j):
        return self.join_table[i][j]

    def order_axioms(self):
        """(reflexive, antisymmetric, transitive)."""
        L = self.leq_table
        n = self.n
        refl = bool(np.all(np.diagonal(L)))
        anti = not any(L[i, j] and L[j, i] \
                       for i in range(n) for j in range(n) if i != j)
        trans = bool(np.all(~((L.astype(int) @ L.astype(int)) > 0) | L))
        return((refl, anti, trans))

    def _check_order(self):
        refl, anti, trans = self.order_axioms()
        if not (refl and anti and trans):
            error("leq is not a partial order (reflexive=%s, antisymmetric=%s, transitive=%s)." % \
                (refl, anti, trans))
            raise MalformedTable("leq is not a partial order.")

    def _extreme(self, below):
        for i in range(self.n):
            if all(below(i, j) for j in range(self.n)):
                return(i)
        error("poset has no %s." % "bottom/top")
        raise MalformedTable("poset is not bounded.")

    def _bound_table(self, upper):
        L = self.leq_table
        n = self.n
        T = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if upper:
                    cands = [k for k in range(n) if L[i, k] and L[j, k]]
                    best = [k for k in cands if all(L[k, m] for m in cands)]
                else:
                    cands = [k for k in range(n) if L[k, i] and L[k, j]]
                    best = [k for k in cands if all(L[m, k] for m in cands)]
                if len(best) != 1:
                    error("no %s of '%s' and '%s'." % \
                        ("join" if upper else "meet",
                         self.elements[i], self.elements[j]))
                    raise MalformedTable("poset is not a lattice.")
                T[i][j] = best[0]
        return(T)

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(d["elements"], d["leq"], d["complement"])
        except KeyError as e:
            raise MalformedTable("lattice table misses key %s." % str(e))

    def to_dict(self):
        return({
            "elements": list(self.elements),
            "leq": self.leq_table.tolist(),
            "complement": [self.elements[c] for c in self.comp]
        })


### Audit

def _is_ortholattice(l):
    n = l.n
    for a in range(n):
        ac = l.complement(a)
        if l.complement(ac) != a:
            return(False)
        if l.meet(a, ac) != l.bottom or l.join(a, ac) != l.top:
            return(False)
        for b in range(n):
            if l.leq(a, b) and not l.leq(l.complement(b), ac):
                return(False)
    return(True)


def _is_orthomodular(l):
    for a in range(l.n):
        for b in range(l.n):
            if l.leq(b, a) and \
                    l.join(l.meet(a, l.complement(b)), b) != a:
                return(False)
    return(True)


def _atoms(l):
    res = []
    for x in range(l.n):
        if x == l.bottom:
            continue
        if not any(l.lt(l.bottom, y) and l.lt(y, x) for y in range(l.n)):
            res.append(x)
    return(res)


def _join_all(l, idx):
    acc = l.bottom
    for i in idx:
        acc = l.join(acc, i)
    return(acc)


def compatible(l, a, b):
    """a C b iff a = (a ∧ b) ∨ (a ∧ b′)."""
    return l.join(l.meet(a, b), l.meet(a, l.complement(b))) == a


def _is_distributive(l):
    for a, b, c in itertools.product(range(l.n), repeat = 3):
        if l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)):
            return(False)
    return(True)


def lattice_audit(l):
    """Exhaustive audit of a finite orthocomplemented lattice.

    Parameters
    ----------
    l : FiniteLattice

    Returns
    -------
    dict
        - "is_ortholattice", "is_orthomodular", "is_distributive" : bool.
        - "atoms" : list of atom labels.
        - "is_atomistic" : every element is the join of the atoms below it.
        - "covering_holds" : for every atom p and element b with
          p ∧ b = 0, nothing lies strictly between b and p ∨ b.
        - "center" : labels compatible with every element.
        - "is_irreducible" : center is {0, 1}.
    """
    n = l.n
    refl, anti, trans = l.order_axioms()
    ortho = _is_ortholattice(l)
    om = _is_orthomodular(l)
    atoms = _atoms(l)

    atomistic = all(
        _join_all(l, [p for p in atoms if l.leq(p, x)]) == x \
        for x in range(n))

    covering = True
    for p in atoms:
        for b in range(n):
            if l.meet(p, b) != l.bottom:
                continue
            pb = l.join(p, b)
            if any(l.lt(b, c) and l.lt(c, pb) for c in range(n)):
                covering = False
                break
        if not covering:
            break

    center = [x for x in range(n) if all(compatible(l, x, y) for y in range(n))]
    irreducible = sorted(center) == sorted(set([l.bottom, l.top]))
    return({
        "n_elements": n,
        "is_partial_order": refl and anti and trans,
        "is_ortholattice": ortho,
        "is_orthomodular": om,
        "is_distributive": _is_distributive(l),
        "atoms": [l.elements[p] for p in atoms],
        "is_atomistic": atomistic,
        "covering_holds": covering,
        "center": [l.elements[x] for x in center],
        "is_irreducible": irreducible
    })


### Built-in lattices

def boolean_lattice(n = 3):
    """The Boolean lattice 2^n of subsets of n atoms."""
    names = "abcdefgh"[:n]
    subsets = []
    for k in range(n + 1):
        subsets.extend(itertools.combinations(range(n), k))
    def label(s):
        if len(s) == 0:
            return("0")
        if len(s) == n:
            return("1")
        return("".join(names[i] for i in s))
    elements = [label(s) for s in subsets]
    leq = [[set(s) <= set(t) for t in subsets] for s in subsets]
    comp = [label(tuple(i for i in range(n) if i not in s)) for s in subsets]
    return FiniteLattice(elements, leq, comp)


def _from_covers(elements, covers, complement):
    """Lattice whose order is the reflexive-transitive closure of `covers`."""
    idx = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    L = np.eye(n, dtype = bool)
    for x, y in covers:
        L[idx[x], idx[y]] = True
    for k in range(n):
        L = L | (L[:, [k]] & L[[k], :])
    return FiniteLattice(elements, L, [complement[x] for x in elements])


def mo2_lattice():
    """The "Chinese lantern" MO2: 0 < a, a′, b, b′ < 1."""
    elements = ["0", "a", "a'", "b", "b'", "1"]
    covers = [("0", x) for x in elements[1:5]] + \
             [(x, "1") for x in elements[1:5]]
    comp = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
    return _from_covers(elements, covers, comp)


def o6_lattice():
    """The hexagon O6: 0 < a < b < 1 and 0 < b′ < a′ < 1; an ortholattice
    that is not orthomodular."""
    elements = ["0", "a", "b", "b'", "a'", "1"]
    covers = [("0", "a"), ("a", "b"), ("b", "1"),
              ("0", "b'"), ("b'", "a'"), ("a'", "1")]
    comp = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
    return _from_covers(elements, covers, comp)


BUILTIN_LATTICES = {
    "boolean3": lambda: boolean_lattice(3),
    "mo2": mo2_lattice,
    "o6": o6_lattice
}
