"""Build Paley cubes for a few primes and check which layer classes are orthogonal."""
import time

from hcube import paley_cube, verify_hadamard_hypercube

for q in (3, 5, 7, 11, 13, 17):
    start = time.perf_counter()
    H = paley_cube(q)
    report = verify_hadamard_hypercube(H, 2)
    elapsed = time.perf_counter() - start
    class1 = verify_hadamard_hypercube(H, 1)
    print(f"q={q:2d} order={H.order:2d}  class 2: {report}  ({elapsed * 1000:.1f} ms)")
    print(f"               class 1: {class1}")
