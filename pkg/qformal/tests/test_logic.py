# test_logic.py - tests of the subspace lattice and finite lattices.


import numpy as np
import pytest

from ..linalg.rand import get_rng, random_state
from ..logic.lattice import FiniteLattice, boolean_lattice, compatible, \
    lattice_audit, mo2_lattice, o6_lattice
from ..logic.subspace import check_orthomodularity, commutator_norm, \
    distributive_inclusion_violations, equal, full_subspace, \
    generated_sublattice, is_atom, is_compatible, is_distributive, join, \
    leq, meet, non_distributivity_witness, ortho, random_nested_pair, \
    random_subspace, sasaki_hook, sasaki_projection, span, \
    superposition_atom, zero_subspace
from ..utils.errors import DimensionMismatch, MalformedTable, \
    PreconditionFailed


def test_non_distributivity_witness():
    A, B, C, lhs, rhs = non_distributivity_witness(2)
    assert lhs.rank == 1
    assert rhs.rank == 0
    assert equal(lhs, A)
    with pytest.raises(PreconditionFailed):
        non_distributivity_witness(1)


def test_meet_join_ortho():
    e = np.eye(3)
    a = span([e[0], e[1]])
    b = span([e[1], e[2]])
    assert equal(meet(a, b), span([e[1]]))
    assert join(a, b).is_full()
    assert equal(ortho(a), span([e[2]]))
    assert ortho(full_subspace(3)).is_zero()
    assert ortho(zero_subspace(3)).is_full()
    assert leq(span([e[0]]), a)
    assert not leq(a, span([e[0]]))
    with pytest.raises(DimensionMismatch):
        meet(a, full_subspace(2))


def test_de_morgan():
    a = random_subspace(4, 2, seed = 1)
    b = random_subspace(4, 1, seed = 2)
    assert equal(ortho(join(a, b)), meet(ortho(a), ortho(b)))
    assert equal(ortho(ortho(a)), a)


def test_orthomodularity_on_nested_pairs():
    rng = get_rng(3)
    worst = 0.0
    for _ in range(1000):
        a, b = random_nested_pair(5, rng)
        worst = max(worst, check_orthomodularity(a, b))
    assert worst < 1e-9


def test_orthomodularity_precondition():
    e = np.eye(2)
    with pytest.raises(PreconditionFailed):
        check_orthomodularity(span([e[0]]), span([e[1]]))


def test_sasaki_projection_of_lines():
    rng = get_rng(4)
    for _ in range(1000):
        p = random_subspace(4, 1, rng)
        q = random_subspace(4, 1, rng)
        assert is_atom(sasaki_projection(p, q))


def test_sasaki_of_nested():
    e = np.eye(3)
    a = span([e[0]])
    b = span([e[0], e[1]])
    assert equal(sasaki_projection(a, b), a)
    assert sasaki_hook(a, b).rank == 2


def test_distributive_inclusion():
    assert distributive_inclusion_violations(3, 200, seed = 5) == 0


def test_compatibility():
    e = np.eye(3)
    a = span([e[0]])
    b = span([e[1]])
    c = span([e[0] + e[1]])
    assert commutator_norm(a, b) < 1e-15
    assert is_compatible(a, b)
    assert not is_compatible(a, c)
    sub = generated_sublattice([a, b])
    assert is_distributive(sub)
    assert not is_distributive(generated_sublattice([a, c]))


def test_superposition_atom():
    p = span([random_state(3, seed = 1)])
    q = span([random_state(3, seed = 2)])
    r = superposition_atom(p, q)
    assert is_atom(r)
    assert leq(r, join(p, q))
    assert not equal(r, p)
    assert not equal(r, q)
    with pytest.raises(PreconditionFailed):
        superposition_atom(p, p)


def test_builtin_lattice_audit():
    res = lattice_audit(boolean_lattice(3))
    assert res["n_elements"] == 8
    assert res["is_orthomodular"]
    assert res["is_distributive"]
    assert len(res["atoms"]) == 3
    assert not res["is_irreducible"]

    res = lattice_audit(mo2_lattice())
    assert res["is_ortholattice"]
    assert res["is_orthomodular"]
    assert not res["is_distributive"]
    assert res["is_atomistic"]
    assert res["covering_holds"]
    assert res["is_irreducible"]
    assert sorted(res["center"]) == ["0", "1"]

    res = lattice_audit(o6_lattice())
    assert res["is_ortholattice"]
    assert not res["is_orthomodular"]


def test_lattice_compatibility():
    l = mo2_lattice()
    a, b = l.index("a"), l.index("b")
    assert not compatible(l, a, b)
    assert compatible(l, a, l.index("a'"))


def test_lattice_dict():
    l = mo2_lattice()
    m = FiniteLattice.from_dict(l.to_dict())
    assert m.elements == l.elements
    assert lattice_audit(m) == lattice_audit(l)


def test_malformed_lattices():
    with pytest.raises(MalformedTable):
        FiniteLattice(["0", "a", "b"],
                      [[1, 1, 1], [0, 1, 0], [0, 0, 1]], ["a", "0", "0"])
    with pytest.raises(MalformedTable):
        FiniteLattice(["0", "1"], [[0, 1], [0, 1]], ["1", "0"])
    with pytest.raises(MalformedTable):
        FiniteLattice.from_dict({"elements": ["0", "1"]})
    with pytest.raises(MalformedTable):
        FiniteLattice(["0", "1"], [[1, 1], [0, 1]], ["1", "x"])
