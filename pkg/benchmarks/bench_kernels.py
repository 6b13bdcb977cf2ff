"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit
from fractions import Fraction

import numpy as np

from rotabaxter import catalog, kernels
from rotabaxter.manin import iwasawa_operator_matrix, realified_sl


def _random_q(rng, shape):
    vals = [Fraction(int(a), int(b)) for a, b in zip(rng.integers(-9, 10, np.prod(shape)),
                                                      rng.integers(1, 6, np.prod(shape)))]
    return np.array(vals, dtype=object).reshape(shape)


def cases():
    rng = np.random.default_rng(0)
    sl3 = realified_sl(3)
    op = iwasawa_operator_matrix(3, 1)
    A, B = _random_q(rng, (24, 24)), _random_q(rng, (24, 24))
    return {
        "matmul 24x24 rationals": lambda be: kernels.matmul(A, B, backend=be),
        "pullback sl(3,C) by Iwasawa operator (16-dim)": lambda be: kernels.pullback(sl3.c, op, op, backend=be),
        "jacobi sweep sl(3,C)": lambda be: kernels.jacobi_violation(sl3.c, backend=be),
        "jacobi sweep sl2": lambda be: kernels.jacobi_violation(catalog.sl2().c, backend=be),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    backends = kernels.available_backends()
    print(f"default backend: {kernels.BACKEND}; available: {', '.join(backends)}")
    print(f"{'case':48s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, fn in cases().items():
        times = {}
        for be in backends:
            number = 1
            while timeit.timeit(lambda: fn(be), number=number) < 0.2:
                number *= 2
            times[be] = min(timeit.repeat(lambda: fn(be), number=number, repeat=args.repeat)) / number
        row = "".join(f"{times[b] * 1e3:10.3f}ms" for b in backends)
        speed = f"{times['python'] / times['cython']:10.1f}x" if "cython" in times else ""
        print(f"{name:48s}{row}{speed}")


if __name__ == "__main__":
    main()
