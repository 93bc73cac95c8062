import cmath
import functools
import json
import math
from fractions import Fraction
from pathlib import Path

from redtensor.catalog import builtin
from redtensor.redprod import reduced_product

FIXTURES = Path(__file__).parent / "fixtures"


def fixture(name):
    return json.loads((FIXTURES / name).read_text(encoding="utf-8"))


def inc(c, a):
    return builtin(c).inclusion(builtin(a).category)


@functools.lru_cache(maxsize=None)
def product(c, d, a, seed=0):
    return reduced_product(inc(c, a), inc(d, a), seed=seed)


def turns(x):
    """A root of unity as a fraction of a full turn in [0, 1)."""
    z = complex(x)
    assert math.isclose(abs(z), 1.0, abs_tol=1e-9)
    return Fraction(cmath.phase(z) / (2 * math.pi)).limit_denominator(240) % 1


def signature(dims, twists):
    """Sorted (dim, twist-in-turns) pairs, the shape oracles record."""
    return sorted([round(complex(dims[a]).real, 10), str(turns(twists[a]))] for a in dims)


def product_signature(rp):
    return signature(rp.data.dims, rp.data.twists)
