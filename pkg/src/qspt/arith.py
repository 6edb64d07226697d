"""Small number-theoretic helpers: primality and quadratic symbols."""

from .errors import BadModulus


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, via Euler's criterion."""
    if p <= 2 or not is_prime(p):
        raise BadModulus(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def chi12(m: int) -> int:
    """The character (12|.): +1 for m = +-1 mod 12, -1 for m = +-5 mod 12, else 0."""
    r = m % 12
    if r in (1, 11):
        return 1
    if r in (5, 7):
        return -1
    return 0
