"""Validated parameters of the group family G(p, m, n).

G(p, m, n) = <x, y : x^(p^m) = y^(p^n) = [x, y]^p = 1, [x, [x, y]] = [y, [x, y]] = 1>
has order p^(m+n+1).

Swapping the generators x and y maps the presentation of G(p, m, n) onto the
presentation of G(p, n, m), so the two groups are isomorphic. ``make_params``
uses that isomorphism when asked to canonicalize: it returns the parameters
with m >= n and records that the swap happened. Every quantity the toolkit
computes is exact, so all orders are plain Python integers.
"""

from dataclasses import dataclass, field

from src.config.settings import DEFAULT_MAX_ORDER

from .exceptions import NotPrimeError, OrderCapExceededError, ParameterRangeError


def is_prime(value: int) -> bool:
    """Primality by trial division; p is tiny at desk scale."""
    if value < 2:
        return False
    if value < 4:
        return True
    if value % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 2
    return True


@dataclass(frozen=True, slots=True)
class GroupParams:
    """Parameters (p, m, n) of G(p, m, n) with the derived group order."""

    p: int
    m: int
    n: int
    canonicalized: bool = False
    order: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrimeError(self.p)
        if self.m < 1:
            raise ParameterRangeError("m", self.m)
        if self.n < 1:
            raise ParameterRangeError("n", self.n)
        if self.canonicalized and self.m < self.n:
            raise ParameterRangeError(
                "m",
                self.m,
                f"canonicalized params need m >= n, got m={self.m}, n={self.n}",
            )
        object.__setattr__(self, "order", self.p ** (self.m + self.n + 1))

    @property
    def x_order(self) -> int:
        """Order of the generator x, p^m."""
        return self.p**self.m

    @property
    def y_order(self) -> int:
        """Order of the generator y, p^n."""
        return self.p**self.n

    @property
    def label(self) -> str:
        return f"G({self.p},{self.m},{self.n})"

    @property
    def key(self) -> tuple[int, int, int]:
        """Sort key used for deterministic report ordering."""
        return (self.p, self.m, self.n)

    @property
    def in_stated_range(self) -> bool:
        """True when m >= n, the range where the quoted decomposition is applied."""
        return self.m >= self.n

    def swapped(self) -> "GroupParams":
        """Parameters of the isomorphic group with x and y exchanged."""
        return GroupParams(self.p, self.n, self.m, canonicalized=self.m < self.n)


def make_params(
    p: int,
    m: int,
    n: int,
    canonicalize: bool = False,
    max_order: int | None = DEFAULT_MAX_ORDER,
) -> GroupParams:
    """Validate (p, m, n) and build :class:`GroupParams`.

    Args:
        p: Prime
        m: Exponent of the order of x, at least 1
        n: Exponent of the order of y, at least 1
        canonicalize: Swap m and n when m < n, using G(p, m, n) ~ G(p, n, m)
        max_order: Largest accepted group order; ``None`` disables the check,
            which is how formula-only evaluation of large groups is requested

    Returns:
        Validated parameters

    Raises:
        NotPrimeError: If p is not prime
        ParameterRangeError: If m or n is below 1
        OrderCapExceededError: If p^(m+n+1) exceeds ``max_order``
    """
    if canonicalize and m < n:
        params = GroupParams(p, n, m, canonicalized=True)
    else:
        params = GroupParams(p, m, n)

    if max_order is not None and params.order > max_order:
        raise OrderCapExceededError(params.order, max_order)

    return params


def check_order_cap(params: GroupParams, max_order: int) -> None:
    """Raise :class:`OrderCapExceededError` when enumeration would exceed the cap."""
    if params.order > max_order:
        raise OrderCapExceededError(params.order, max_order)
