"""SO(3) quantum representations at prime level: conformal-block dimensions,
exact mapping-class and point-pushing matrices over Q(zeta_p), and their finite
reductions modulo primes."""

__version__ = "0.1.0"
