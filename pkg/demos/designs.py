"""Symmetric design hypercubes from normalized Hadamard matrices, with a certificate excerpt."""
from hcube.core import sylvester
from hcube.designs import design_certificate, design_hypercube, verify_symmetric_design_hypercube

for n in (2, 4, 8):
    for d in (2, 3):
        if n == 8 and d == 3:
            continue
        N, K = design_hypercube(sylvester(n), d)
        v, k, lam = K.params
        print(f"n={n} d={d}: ({v},{d},{k},{lam})-design  {verify_symmetric_design_hypercube(K.incidence, k, lam)}")

_, K = design_hypercube(sylvester(4), 3)
lines = design_certificate(K.incidence, 6, 2).splitlines()
print("\n".join(lines[:4] + ["..."] + lines[-1:]))
