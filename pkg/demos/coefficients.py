"""Sweep all 64 sign tuples over Paley conference matrices and count class-2 cubes.

Tuples with a0*a1*a2*a3 = -1 and a4 = -a5 always work. At orders 4 and 6 a few
tuples with a4 = a5 slip through as well; from order 8 on they never do.
"""
from hcube.conference import paley_conference
from hcube.core import verify_hadamard_hypercube
from hcube.cubes import all_coefficient_tuples, coefficients_valid, cube_from_conference

for q in (3, 5, 7, 11, 13):
    C = paley_conference(q)
    passing = [a for a in all_coefficient_tuples() if verify_hadamard_hypercube(cube_from_conference(C, a), 2)]
    valid = [a for a in passing if coefficients_valid(a)]
    extra = [a for a in passing if not coefficients_valid(a)]
    print(f"order {q + 1:2d} ({C.kind}): {len(passing)} pass, {len(valid)} valid, {len(extra)} extra")
    for a in extra:
        print("    extra", a)

bad = verify_hadamard_hypercube(cube_from_conference(paley_conference(5), (1,) * 6), 2)
print("all-plus tuple at order 6:", bad)
