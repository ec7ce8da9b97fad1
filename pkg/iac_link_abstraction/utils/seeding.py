import numpy as np

RNG_ALGORITHM = 'PCG64'


def create_rng(seed):
    """
    Creates the generator used everywhere in the toolkit for a given seed
    """
    return np.random.Generator(np.random.PCG64(seed))


def derive_seed(master_seed, *indices):
    """
    Derives the seed of an independent unit of work from a master seed.
    A single index 0 reuses the master seed so that a single-unit run equals the unseeded call.
    Index tuples of different lengths address disjoint spawn trees, so (j, i) never meets (i,).
    """
    if not indices:
        raise ValueError('derive_seed needs at least one index')
    if indices == (0,):
        return int(master_seed)

    sequence = np.random.SeedSequence(int(master_seed), spawn_key=tuple(int(i) for i in indices))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
