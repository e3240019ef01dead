"""Graph family generators package."""

from .base import Family, GeneratedInstance
from .lower import (
    LowerGFamily,
    LowerHFamily,
    LowerKFamily,
    claim2_cutwidth,
    claim2_orderings,
    gen_lower_G,
    gen_lower_H,
    gen_lower_K,
)
from .nolow import NoLowFamily, gen_nolow_Gn, interleaved_ordering
from .seeded import RandomFamily, gen_random, gen_random_multigraph

FAMILIES = {
    "lower-g": LowerGFamily,
    "lower-k": LowerKFamily,
    "lower-h": LowerHFamily,
    "nolow": NoLowFamily,
    "random": RandomFamily,
}

__all__ = [
    "FAMILIES",
    "Family",
    "GeneratedInstance",
    "LowerGFamily",
    "LowerHFamily",
    "LowerKFamily",
    "NoLowFamily",
    "RandomFamily",
    "claim2_cutwidth",
    "claim2_orderings",
    "gen_lower_G",
    "gen_lower_H",
    "gen_lower_K",
    "gen_nolow_Gn",
    "gen_random",
    "gen_random_multigraph",
    "interleaved_ordering",
]
