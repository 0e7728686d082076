"""Frozen expected values shared across test modules.

The three counting listings are the published sequence prefixes the package
must reproduce exactly; tests compare against them rather than recomputing.
"""

# tot_kappa(n) for n = 0..20.
KAPPA_0_20 = [1, 1, 2, 3, 3, 5, 5, 5, 8, 8, 8, 5, 10, 13, 12, 12, 13, 10, 7, 15, 18]

# tot_nu(n) for n = 0..20.
NU_0_20 = [1, 1, 2, 2, 1, 5, 5, 4, 5, 4, 3, 1, 10, 13, 12, 12, 13, 10, 6, 11, 12]

# tot_fib(m) for m = 0..24.
FIB_0_24 = [1, 1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 3, 3, 2, 4, 2, 3, 3, 1, 4, 3, 3, 5]
