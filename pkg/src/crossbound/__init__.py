"""Two-page drawings of K_n: the cylindrical upper bound, the MAX-CUT lower
bound on the crossing graph G_n, and numerical checks of the Fourier
analysis behind the asymptotic bound."""

__version__ = "0.1.0"
