"""Generic computer algebra: rings, polynomials, matrices, number fields,
ideals and ball arithmetic."""
