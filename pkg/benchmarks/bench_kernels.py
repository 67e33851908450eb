"""Compare the compiled Cython kernels with the numpy fallback.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5] [--size 256]

Every kernel is first checked for bitwise-equal output on both backends,
then timed with ``timeit`` (best of ``--repeat`` runs).
"""

import argparse
import timeit

import numpy as np

from lwir_restore import kernels


def cases(size, rng):
    img = rng.uniform(0, 255, (size, size))
    k15 = rng.random((15, 15))
    k63 = rng.random((63, 63))
    u, v = rng.normal(0, 2, (2, size, size))
    ll, hl, lh, hh = kernels.haar_dwt2(img)
    return {
        f"haar_dwt2 {size}x{size}": ("haar_dwt2", (img,)),
        f"haar_idwt2 {size}x{size}": ("haar_idwt2", (ll, hl, lh, hh)),
        f"convolve2d_valid {size}+14 px, 15x15": ("convolve2d_valid", (np.pad(img, 7, mode="reflect"), k15)),
        f"convolve2d_valid {size}+62 px, 63x63": ("convolve2d_valid", (np.pad(img, 31, mode="reflect"), k63)),
        f"warp_bilinear {size}x{size}": ("warp_bilinear", (img, u, v)),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--size", type=int, default=256)
    args = ap.parse_args(argv)

    backends = kernels.backends()
    if "cython" not in backends:
        print("compiled extension not built; only the numpy fallback is available")
    rng = np.random.default_rng(0)
    print(f"{'kernel':42s} " + " ".join(f"{name:>12s}" for name in backends) + "     speed-up")
    for label, (fn, inputs) in cases(args.size, rng).items():
        outs = [getattr(mod, fn)(*inputs) for mod in backends.values()]
        first = outs[0] if isinstance(outs[0], tuple) else (outs[0],)
        for other in outs[1:]:
            other = other if isinstance(other, tuple) else (other,)
            assert all(np.array_equal(a, b) for a, b in zip(first, other)), f"{fn}: backends disagree"
        times = []
        for mod in backends.values():
            f = getattr(mod, fn)
            n = max(1, int(0.2 / max(timeit.timeit(lambda: f(*inputs), number=1), 1e-6)))
            best = min(timeit.repeat(lambda: f(*inputs), number=n, repeat=args.repeat)) / n
            times.append(best)
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) > 1 else ""
        print(f"{label:42s} " + " ".join(f"{t * 1e3:10.3f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
