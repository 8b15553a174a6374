"""Ground-truth generators: brute-force counts, Frobenius sums, cyclotomic C_tau."""
