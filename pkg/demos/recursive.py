"""Grow Hadamard hypercubes from Sylvester matrices with the Latin-hypercube recursion."""
from hcube import recursive_hypercube, verify_hadamard_hypercube
from hcube.core import sylvester

steps = [
    ("H2 -> (4,3,2)", lambda: recursive_hypercube(sylvester(2), 2, 1, 3)),
    ("H4 -> (8,3,2)", lambda: recursive_hypercube(sylvester(4), 2, 2, 3)),
    ("(4,3,2) -> (8,4,3)", lambda: recursive_hypercube(recursive_hypercube(sylvester(2), 2, 1, 3), 2, 2, 2)),
    ("H2 -> (4,4,3)", lambda: recursive_hypercube(sylvester(2), 2, 1, 4)),
]
for name, build in steps:
    H = build()
    top = H.dim - 1
    print(f"{name:20s} order={H.order} dim={H.dim} class {top}: {verify_hadamard_hypercube(H, top)}")
