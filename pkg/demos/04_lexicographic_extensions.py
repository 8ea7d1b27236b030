#!/usr/bin/env python3
"""Lexicographic extensions: creation, destruction, and symmetry.

The new element sits infinitesimally close to the head of the signed
priority list, which makes the pair inseparable. That creates one new
mutation (between the pair), destroys mutations the new pseudosphere
cuts through, and leaves non-adjacent mutations alone. Euclideaness
survives the extension.
"""

import omforge as f
from omforge.extensions import destruction_check, pair_kind

w3 = f.om_from_points([[1, 1], [1, 2], [1, 3]])
spec = f.LexExtensionSpec(((0, 1), (1, 1)))  # W3[0^+, 1^+]
ext = f.lex_extend(w3, spec)
print("W3[0^+,1^+]:", ext.n, "elements,", len(ext.cocircuits), "cocircuits")
print("  the same extension is realized by a 4th point at t = 1 + 1/8:",
      set(f.om_from_points([[1, 1], [1, 2], [1, 3], [8, 9]]).cocircuits)
      == set(ext.cocircuits))
print("  pair (0, new):", pair_kind(ext, 0, 3))

cert = f.creation_check(w3, spec)
print("  created mutation on the pair:", cert.basis, "tope", cert.tope.to_string())

print("  swapping the tail signs swaps the pair roles:",
      f.swap_isomorphism_check(w3, spec))

# destruction: cut a simplicial tope of the cyclic polytope
om = f.om_from_points([[t**k for k in range(4)] for t in range(1, 9)])
cert = f.mutation_from_basis(om, (0, 1, 2, 3))
report = destruction_check(om, cert, 0, 5)
print("\ncutting mutation (0,1,2,3) of C(4,8) with head 0, past 5:")
print("  shifted basis re-certifies:", report.new_certificate is not None)
print("  old tope wall counts by lift:", report.lift_adjacency,
      "-> no longer simplicial:", report.decertified)

# Euclideaness is preserved: every program with the new element at
# infinity stays acyclic
ext = f.lex_extend(om, f.LexExtensionSpec(((0, 1), (1, 1), (2, 1), (3, 1))))
p = ext.n - 1
print("\nextension of C(4,8): programs (ext, p, f) all Euclidean:",
      all(f.is_euclidean(f.Program(ext, p, fx)).euclidean for fx in range(om.n)))

# and the flip/extension exchange diagram commutes
report = f.flip_lex_commute_check(om, (0, 1, 2, 3), 5)
print("flip-then-extend agrees with extend-then-flip (under the swap):",
      report.equal)
