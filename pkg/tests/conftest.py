import random

import pytest

import flagsphere as fs


@pytest.fixture
def tetra():
    return fs.tetrahedron()


@pytest.fixture
def octa():
    return fs.octahedron()


@pytest.fixture
def bipyramid():
    # apexes 0 and 4, equator 1-2-3
    return fs.from_faces(
        5, [(0, 1, 2), (0, 2, 3), (0, 1, 3), (4, 1, 2), (4, 2, 3), (4, 1, 3)]
    )


@pytest.fixture
def s7(octa):
    return fs.split_vertex(octa, fs.SplitSpec(0, 1, 4))


@pytest.fixture(scope="session")
def corpus10():
    """One representative per sphere class, 4 <= n <= 10."""
    return fs.enumerate_all_spheres(10)


@pytest.fixture(scope="session")
def corpus9(corpus10):
    return [K for K in corpus10 if K.n <= 9]


@pytest.fixture(scope="session")
def flag_corpus10(corpus10):
    return [K for K in corpus10 if fs.is_flag(K)]


@pytest.fixture(scope="session")
def graph11():
    return fs.build(11)


@pytest.fixture(scope="session")
def relabel():
    def apply(K, perm):
        return fs.from_faces(K.n, [tuple(perm[v] for v in f) for f in K.faces])

    return apply


@pytest.fixture(scope="session")
def random_sphere():
    """Grow a sphere from the tetrahedron by seeded unrestricted splits."""

    def grow(seed, target_n):
        rng = random.Random(seed)
        K = fs.tetrahedron()
        while K.n < target_n:
            w = rng.randrange(K.n)
            cyc = K.link_cycle(w)
            a, b = rng.sample(cyc, 2)
            K = fs.split_vertex(K, fs.SplitSpec(w, a, b))
        return K

    return grow
