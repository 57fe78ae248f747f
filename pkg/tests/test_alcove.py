import pytest

from affine_nichols import affine_weyl as aw
from affine_nichols import alcove, nichols as nc
from affine_nichols.nichols import TensorElement
from affine_nichols.roots import preset


def test_four_crossing_path(a2):
    path = alcove.alcove_path_to(aw.translation(a2, (1, 0)))
    assert len(path) == 4
    assert list(path.word) == [1, 2, 0, 2]
    assert path.crossings == (((0, -1), 0), ((1, 0), 1), ((1, 1), 1), ((1, 0), 2))
    gamma = alcove.gamma_word(path)
    assert nc.format_tensor(gamma) == "-[23,0][12,1][13,1][12,2]"
    assert nc.d_word(gamma, (2, 0, 2, 1)) == TensorElement.scalar(a2, 1)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_crossing_count_and_replay(name):
    sys = preset(name)
    for x in aw.bfs_oracle(sys, 4):
        path = alcove.reduced_alcove_path(x)
        assert len(path) == aw.length(x)
        assert alcove.replay_word(path) == list(path.word)


@pytest.mark.parametrize("name", ["A2", "G2"])
def test_crossed_walls_separate(name):
    """Each crossed wall separates the two end alcoves, and the walls are distinct."""
    sys = preset(name)
    for x in aw.bfs_oracle(sys, 5):
        path = alcove.reduced_alcove_path(x)
        walls = set()
        for b, k in path.crossings:
            assert alcove.separates(x, b, k)
            canon = (b, k) if sys.is_positive(sys.index(b)) else (tuple(-c for c in b), -k)
            walls.add(canon)
        assert len(walls) == len(path)


def test_separating_wall_count_is_length(b2):
    for x in aw.bfs_oracle(b2, 5):
        bound = max((abs(b2.pairing_index(b, x.lam)) for b in range(b2.npos)), default=0) + 2
        count = sum(alcove.separates(x, b2.roots[b], k)
                    for b in range(b2.npos) for k in range(-bound, bound + 1))
        assert count == aw.length(x)


def test_empty_path(g2):
    e = aw.identity(g2)
    assert alcove.bracket(e) == TensorElement.scalar(g2, 1)


def test_rejects_non_reduced_word(a2):
    x = aw.simple_affine_reflection(a2, 1)
    with pytest.raises(ValueError):
        alcove.reduced_alcove_path(x, [1, 2, 2])


def test_path_json(a2):
    path = alcove.reduced_alcove_path(aw.simple_affine_reflection(a2, 0))
    assert path.to_json() == [{"beta": [1, 1], "k": 1}]
