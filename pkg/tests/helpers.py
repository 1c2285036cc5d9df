"""Small constructors shared across the test modules."""

from agmod.finmod import Module
from agmod.finring import Ring


def zmod(n, m=None):
    """Z_m as a module over Z_n (defaults to the full ring)."""
    return Module(Ring([n]), [(m if m is not None else n, 0)])


def product_module(moduli, factors=None):
    """A product module over a product ring; defaults to the full module."""
    ring = Ring(moduli)
    if factors is None:
        factors = [(n, c) for c, n in enumerate(moduli)]
    return Module(ring, factors)


def sub_by_label(module, label):
    """Look up a lattice submodule by its generator label."""
    for s in module.lattice().all:
        if s.label == label:
            return s
    raise AssertionError(f"no submodule labelled {label!r}")


def encset(module, ints):
    """The submodule of a single-factor module holding exactly these values."""
    return frozenset((i,) for i in ints)
