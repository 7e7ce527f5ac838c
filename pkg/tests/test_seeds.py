"""Sub-seed derivation: stable, labeled, collision-averse."""

from __future__ import annotations

from pathramsey import derive_seed, rng_for


def test_derivation_is_stable_across_runs():
    # frozen regression values: the whole experiment layout depends on them
    assert derive_seed(7, "construct") == 3901232197679568144
    assert derive_seed(7, "coloring", 0) == 7471619702270645004
    assert derive_seed(0, "level", 1, 0) == 1974408250950273791


def test_labels_and_paths_separate_streams():
    seen = {
        derive_seed(1, "a"),
        derive_seed(1, "b"),
        derive_seed(2, "a"),
        derive_seed(1, "a", 0),
        derive_seed(1, "a", 1),
        derive_seed(1, "a", 0, 0),
    }
    assert len(seen) == 6
    assert all(0 <= s < 2**63 for s in seen)


def test_rng_for_reproduces_sequences():
    a = rng_for(9, "x", 3)
    b = rng_for(9, "x", 3)
    assert [a.random() for _ in range(5)] == [b.random() for _ in range(5)]
    c = rng_for(9, "x", 4)
    assert a.random() != c.random()
